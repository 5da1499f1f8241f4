#include "trajlab/ingest/manifest.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

#include "trajlab/errors.hpp"
#include "trajlab/ingest/csv.hpp"
#include "trajlab/ingest/tensor_io.hpp"

namespace trajlab::ingest {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    std::size_t end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFile("cannot open '" + path.string() + "'");
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> numbered_labels(const char* prefix, std::size_t count) {
    std::vector<std::string> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = prefix + std::to_string(i);
    }
    return out;
}

double parse_double_field(const std::string& field, const std::filesystem::path& path) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw NonFiniteInput("'" + path.string() + "': coordinate '" + field +
                             "' is not numeric");
    }
    return v;
}

std::vector<ChannelCoordinate> read_channel_coords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFile("cannot open '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw TruncatedFile("'" + path.string() + "' is empty; header row required");
    }
    if (trim(line) != "name,x,y") {
        throw InvalidConfig("channel_coords header must be exactly 'name,x,y'");
    }
    std::vector<ChannelCoordinate> coords;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw DimMismatch("channel_coords row '" + line + "' needs 3 fields");
        }
        ChannelCoordinate coord;
        coord.name = trim(line.substr(0, c1));
        coord.x = parse_double_field(trim(line.substr(c1 + 1, c2 - c1 - 1)), path);
        coord.y = parse_double_field(trim(line.substr(c2 + 1)), path);
        coords.push_back(std::move(coord));
    }
    return coords;
}

}  // namespace

DatasetManifest parse_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFile("cannot open manifest '" + path.string() + "'");
    }
    DatasetManifest m;
    m.base_dir = path.has_parent_path() ? path.parent_path() : ".";

    auto resolve = [&](const std::string& rel) {
        std::filesystem::path p(rel);
        return p.is_absolute() ? p : m.base_dir / p;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidConfig("manifest line " + std::to_string(line_no) +
                                " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw InvalidConfig("manifest key '" + key + "' has empty value");
        }
        if (key == "signal") {
            m.signal_path = resolve(value);
        } else if (key == "embedding") {
            m.embedding_path = resolve(value);
        } else if (key == "sample_ids") {
            m.sample_ids_path = resolve(value);
        } else if (key == "channel_labels") {
            m.channel_labels_path = resolve(value);
        } else if (key == "channel_coords") {
            m.channel_coords_path = resolve(value);
        } else if (key == "layer_names") {
            m.layer_names_path = resolve(value);
        } else if (key == "sampling_rate") {
            double rate = 0.0;
            const auto res = std::from_chars(value.data(), value.data() + value.size(), rate);
            if (res.ec != std::errc() || res.ptr != value.data() + value.size() ||
                !(rate > 0.0)) {
                throw InvalidConfig("manifest sampling_rate '" + value + "' invalid");
            }
            m.sampling_rate = rate;
        } else {
            throw InvalidConfig("manifest key '" + key + "' is not recognized");
        }
    }
    if (m.signal_path.empty() || m.embedding_path.empty()) {
        throw InvalidConfig("manifest must set both 'signal' and 'embedding'");
    }
    return m;
}

Dataset load_manifest(const std::filesystem::path& path) {
    const DatasetManifest m = parse_manifest(path);
    Dataset ds;
    ds.sampling_rate = m.sampling_rate;

    // signal side: csv, 2-axis tensor, or 3-axis epochs
    std::size_t n_signal = 0;
    if (m.signal_path.extension() == ".csv") {
        CsvTable table = read_csv_matrix(m.signal_path);
        n_signal = table.values.rows();
        ds.signals.data = std::move(table.values);
        ds.signals.feature_labels = std::move(table.header);
    } else {
        TensorData t = read_tensor(m.signal_path);
        if (t.dims.size() == 2) {
            n_signal = t.dims[0];
            ds.signals.data = t.to_matrix();
            ds.signals.feature_labels = numbered_labels("f", t.dims[1]);
        } else {
            n_signal = t.dims[0];
            encoding::SignalEpochs epochs;
            epochs.data = t.to_tensor3();
            epochs.channel_labels = numbered_labels("ch", t.dims[1]);
            ds.epochs = std::move(epochs);
        }
    }

    TensorData emb = read_tensor(m.embedding_path);
    if (emb.dims.size() != 3) {
        throw DimMismatch("embedding tensor must have 3 axes (samples x layers x dims)");
    }
    if (emb.dims[0] != n_signal) {
        throw DimMismatch("embedding has " + std::to_string(emb.dims[0]) +
                          " samples, signal has " + std::to_string(n_signal));
    }

    std::vector<std::string> sample_ids;
    if (m.sample_ids_path) {
        sample_ids = read_lines(*m.sample_ids_path);
        if (sample_ids.size() != n_signal) {
            throw DimMismatch("sample_ids lists " + std::to_string(sample_ids.size()) +
                              " ids for " + std::to_string(n_signal) + " samples");
        }
    } else {
        sample_ids = numbered_labels("s", n_signal);
    }

    std::vector<std::string> layer_names;
    if (m.layer_names_path) {
        layer_names = read_lines(*m.layer_names_path);
        if (layer_names.size() != emb.dims[1]) {
            throw DimMismatch("layer_names lists " + std::to_string(layer_names.size()) +
                              " names for " + std::to_string(emb.dims[1]) + " layers");
        }
    } else {
        layer_names = numbered_labels("layer", emb.dims[1]);
    }

    ds.embeddings = encoding::EmbeddingTensor{emb.to_tensor3(), sample_ids, layer_names};
    ds.embeddings.validate();

    if (ds.epochs) {
        ds.epochs->sample_ids = sample_ids;
        if (m.channel_labels_path) {
            auto labels = read_lines(*m.channel_labels_path);
            if (labels.size() != ds.epochs->channels()) {
                throw DimMismatch("channel_labels lists " + std::to_string(labels.size()) +
                                  " labels for " + std::to_string(ds.epochs->channels()) +
                                  " channels");
            }
            ds.epochs->channel_labels = std::move(labels);
        }
        ds.epochs->validate();
        ds.signals = ds.epochs->flatten();
    } else {
        ds.signals.sample_ids = sample_ids;
        if (m.channel_labels_path) {
            auto labels = read_lines(*m.channel_labels_path);
            if (labels.size() == ds.signals.features()) {
                ds.signals.feature_labels = std::move(labels);
            } else {
                throw DimMismatch("channel_labels count does not match signal features");
            }
        }
        ds.signals.validate();
    }

    if (m.channel_coords_path) {
        ds.channel_coords = read_channel_coords(*m.channel_coords_path);
        const std::size_t channel_count =
            ds.epochs ? ds.epochs->channels() : ds.signals.features();
        if (ds.channel_coords.size() != channel_count) {
            throw DimMismatch("channel_coords lists " +
                              std::to_string(ds.channel_coords.size()) + " channels for " +
                              std::to_string(channel_count));
        }
        std::unordered_set<std::string> seen;
        for (const auto& c : ds.channel_coords) {
            if (!seen.insert(c.name).second) {
                throw DuplicateIds("channel_coords repeats '" + c.name + "'");
            }
        }
    }
    return ds;
}

void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw WriteFailure("cannot open manifest '" + path.string() + "' for writing");
    }
    auto rel = [&](const std::filesystem::path& p) {
        return p.lexically_relative(manifest.base_dir).string();
    };
    out << "# trajlab dataset manifest\n";
    out << "signal = " << rel(manifest.signal_path) << "\n";
    out << "embedding = " << rel(manifest.embedding_path) << "\n";
    if (manifest.sample_ids_path) out << "sample_ids = " << rel(*manifest.sample_ids_path) << "\n";
    if (manifest.channel_labels_path) {
        out << "channel_labels = " << rel(*manifest.channel_labels_path) << "\n";
    }
    if (manifest.channel_coords_path) {
        out << "channel_coords = " << rel(*manifest.channel_coords_path) << "\n";
    }
    if (manifest.layer_names_path) out << "layer_names = " << rel(*manifest.layer_names_path) << "\n";
    if (manifest.sampling_rate) out << "sampling_rate = " << *manifest.sampling_rate << "\n";
    if (!out) {
        throw WriteFailure("short write to manifest '" + path.string() + "'");
    }
}

}  // namespace trajlab::ingest
