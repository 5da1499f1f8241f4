#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trajlab/encoding/data.hpp"

namespace trajlab::ingest {

/// 2-D channel position, used by downstream topography tooling only.
struct ChannelCoordinate {
    std::string name;
    double x = 0.0;
    double y = 0.0;
};

/// Parsed form of the key = value manifest file. Relative paths resolve
/// against the manifest's directory. Recognized keys:
///   signal         tensor (.trjl, 2- or 3-axis) or .csv path   [required]
///   embedding      3-axis tensor path                          [required]
///   sample_ids     text file, one id per line                  [optional]
///   channel_labels text file, one label per line               [optional]
///   channel_coords csv with header name,x,y                    [optional]
///   layer_names    text file, one name per line                [optional]
///   sampling_rate  Hz for the signal time axis                 [optional]
struct DatasetManifest {
    std::filesystem::path base_dir;
    std::filesystem::path signal_path;
    std::filesystem::path embedding_path;
    std::optional<std::filesystem::path> sample_ids_path;
    std::optional<std::filesystem::path> channel_labels_path;
    std::optional<std::filesystem::path> channel_coords_path;
    std::optional<std::filesystem::path> layer_names_path;
    std::optional<double> sampling_rate;
};

struct Dataset {
    encoding::SignalMatrix signals;
    std::optional<encoding::SignalEpochs> epochs;  // present for 3-axis signal tensors
    encoding::EmbeddingTensor embeddings;
    std::vector<ChannelCoordinate> channel_coords;
    std::optional<double> sampling_rate;
};

DatasetManifest parse_manifest(const std::filesystem::path& path);

/// Loads and cross-checks every referenced file: sample counts must agree
/// between signal and embedding, label counts must match axis lengths,
/// coordinates must cover each channel exactly once.
Dataset load_manifest(const std::filesystem::path& path);

void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);

}  // namespace trajlab::ingest
