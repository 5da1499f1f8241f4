#include "cli_common.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "trajlab/errors.hpp"
#include "trajlab/ingest/csv.hpp"
#include "trajlab/json_io.hpp"

namespace trajlab::cli {

int run_command(const std::function<void()>& fn) {
    try {
        fn();
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

std::filesystem::path resolve_out_dir(const std::string& flag_value) {
    std::filesystem::path dir;
    if (!flag_value.empty()) {
        dir = flag_value;
    } else if (const char* env = std::getenv("TRAJLAB_OUT"); env != nullptr && *env != '\0') {
        dir = env;
    } else {
        dir = ".";
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw WriteFailure("cannot create output directory '" + dir.string() + "'");
    }
    return dir;
}

void atomic_write_file(const std::filesystem::path& path,
                       const std::function<void(const std::filesystem::path&)>& writer) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    writer(tmp);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw WriteFailure("cannot move temp file into '" + path.string() + "'");
    }
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    atomic_write_file(path, [&](const std::filesystem::path& tmp) {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) {
            throw WriteFailure("cannot open '" + tmp.string() + "' for writing");
        }
        out << text;
        if (!out) {
            throw WriteFailure("short write to '" + tmp.string() + "'");
        }
    });
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    atomic_write_text(path, json_text(j));
}

void write_csv_rows(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::string text;
    auto append_row = [&text](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += row[i];
        }
        text += '\n';
    };
    append_row(header);
    for (const auto& row : rows) append_row(row);
    atomic_write_text(path, text);
}

ingest::Dataset load_dataset(const std::string& manifest_path, int verbosity) {
    if (verbosity >= 1) {
        std::cerr << "loading manifest " << manifest_path << "\n";
    }
    return ingest::load_manifest(manifest_path);
}

void log_info(const GlobalOptions& opts, const std::string& message) {
    if (opts.verbosity >= 1) {
        std::cerr << message << "\n";
    }
}

}  // namespace trajlab::cli
