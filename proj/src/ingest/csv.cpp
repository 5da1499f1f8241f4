#include "trajlab/ingest/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "trajlab/errors.hpp"

namespace trajlab::ingest {

namespace {

// Splits one CSV record; handles quoted fields with doubled quotes.
std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

CsvTable read_csv_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFile("cannot open '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw TruncatedFile("'" + path.string() + "' is empty; header row required");
    }
    CsvTable table;
    table.header = split_record(strip_cr(line));
    const std::size_t cols = table.header.size();

    std::vector<double> data;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_record(line);
        if (fields.size() != cols) {
            throw DimMismatch("'" + path.string() + "' row " + std::to_string(rows + 1) +
                              " has " + std::to_string(fields.size()) + " fields, header has " +
                              std::to_string(cols));
        }
        for (const auto& f : fields) {
            double v = 0.0;
            const auto* begin = f.data();
            const auto* end = f.data() + f.size();
            const auto result = std::from_chars(begin, end, v);
            if (result.ec != std::errc() || result.ptr != end) {
                throw NonFiniteInput("'" + path.string() + "': cell '" + f +
                                     "' is not numeric");
            }
            data.push_back(v);
        }
        ++rows;
    }
    table.values = numcore::Matrix(rows, cols, std::move(data));
    return table;
}

std::string format_double(double v) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

void write_csv_matrix(const std::filesystem::path& path,
                      const std::vector<std::string>& header,
                      const numcore::Matrix& values) {
    if (header.size() != values.cols()) {
        throw DimMismatch("write_csv_matrix: header has " + std::to_string(header.size()) +
                          " fields for " + std::to_string(values.cols()) + " columns");
    }
    std::ostringstream out;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) out << ',';
        out << header[j];
    }
    out << '\n';
    for (std::size_t i = 0; i < values.rows(); ++i) {
        for (std::size_t j = 0; j < values.cols(); ++j) {
            if (j) out << ',';
            out << format_double(values(i, j));
        }
        out << '\n';
    }
    std::ofstream file(path, std::ios::trunc);
    if (!file) {
        throw WriteFailure("cannot open '" + path.string() + "' for writing");
    }
    file << out.str();
    if (!file) {
        throw WriteFailure("short write to '" + path.string() + "'");
    }
}

}  // namespace trajlab::ingest
