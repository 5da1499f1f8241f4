#include "trajlab/encoding/data.hpp"

#include <unordered_set>

#include "trajlab/errors.hpp"

namespace trajlab::encoding {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw DuplicateIds(std::string(what) + " contains duplicate '" + l + "'");
        }
    }
}

void check_count(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimMismatch(std::string(what) + ": " + std::to_string(got) + " labels for " +
                          std::to_string(want) + " entries");
    }
}

}  // namespace

void SignalMatrix::validate() const {
    if (samples() < 2) {
        throw TooShort("SignalMatrix needs at least 2 samples");
    }
    data.validate_finite("SignalMatrix");
    check_count(sample_ids.size(), samples(), "sample_ids");
    check_count(feature_labels.size(), features(), "feature_labels");
    check_unique(sample_ids, "sample_ids");
    check_unique(feature_labels, "feature_labels");
}

void SignalEpochs::validate() const {
    if (samples() < 2) {
        throw TooShort("SignalEpochs needs at least 2 samples");
    }
    data.validate_finite("SignalEpochs");
    check_count(sample_ids.size(), samples(), "sample_ids");
    check_count(channel_labels.size(), channels(), "channel_labels");
    check_unique(sample_ids, "sample_ids");
    check_unique(channel_labels, "channel_labels");
}

SignalMatrix SignalEpochs::flatten() const {
    const std::size_t n = samples();
    const std::size_t c = channels();
    const std::size_t t = time_points();
    Matrix flat(n, c * t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t ch = 0; ch < c; ++ch) {
            for (std::size_t tb = 0; tb < t; ++tb) {
                flat(i, ch * t + tb) = data(i, ch, tb);
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(c * t);
    for (std::size_t ch = 0; ch < c; ++ch) {
        for (std::size_t tb = 0; tb < t; ++tb) {
            labels.push_back(channel_labels[ch] + ":t" + std::to_string(tb));
        }
    }
    SignalMatrix out{std::move(flat), sample_ids, std::move(labels)};
    out.validate();
    return out;
}

void EmbeddingTensor::validate() const {
    if (samples() < 2) {
        throw TooShort("EmbeddingTensor needs at least 2 samples");
    }
    data.validate_finite("EmbeddingTensor");
    check_count(sample_ids.size(), samples(), "sample_ids");
    if (!layer_names.empty()) {
        check_count(layer_names.size(), layers(), "layer_names");
    }
    check_unique(sample_ids, "sample_ids");
}

}  // namespace trajlab::encoding
