#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trajlab/ingest/manifest.hpp"

namespace trajlab::cli {

// exit codes: 0 success, 2 usage, 3 I/O, 4 data/shape, 5 numeric
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;
constexpr int kExitNumeric = 5;

/// Runs fn, mapping library errors onto the exit-code contract.
int run_command(const std::function<void()>& fn);

/// Output directory: --out flag if set, else $TRAJLAB_OUT, else ".".
/// Creates the directory when missing.
std::filesystem::path resolve_out_dir(const std::string& flag_value);

/// Writes through a temp file in the same directory, then renames, so
/// readers never observe partial files.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);
void atomic_write_file(const std::filesystem::path& path,
                       const std::function<void(const std::filesystem::path&)>& writer);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Long-format CSV rows (header + string cells), written atomically.
void write_csv_rows(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

/// Loads a dataset and reports progress on stderr at verbosity >= 1.
ingest::Dataset load_dataset(const std::string& manifest_path, int verbosity);

struct GlobalOptions {
    std::string out_dir;
    int verbosity = 0;
    std::size_t threads = 1;
};

void log_info(const GlobalOptions& opts, const std::string& message);

}  // namespace trajlab::cli
