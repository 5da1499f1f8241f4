#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::ingest {

struct CsvTable {
    std::vector<std::string> header;
    numcore::Matrix values;
};

/// RFC-4180-style numeric CSV with a required header row. Quoted fields and
/// CRLF line endings are accepted; every data cell must parse as a double.
CsvTable read_csv_matrix(const std::filesystem::path& path);

/// Writes header + rows; numbers use shortest round-trip formatting.
void write_csv_matrix(const std::filesystem::path& path,
                      const std::vector<std::string>& header,
                      const numcore::Matrix& values);

/// Shortest decimal string that parses back to exactly this double.
std::string format_double(double v);

}  // namespace trajlab::ingest
