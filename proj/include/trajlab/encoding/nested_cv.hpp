#pragma once

#include <cstdint>
#include <vector>

#include "trajlab/encoding/data.hpp"
#include "trajlab/encoding/ridge.hpp"

namespace trajlab::encoding {

struct EncodingConfig {
    std::size_t outer_folds = 5;
    std::size_t inner_folds = 3;
    std::vector<double> alpha_grid = default_alpha_grid();
    std::uint64_t seed = 0;

    /// 13 log-spaced values covering 1e-3 .. 1e3.
    static std::vector<double> default_alpha_grid();

    /// outer_folds >= 2, inner_folds >= 2, nonempty ascending positive grid.
    void validate() const;
};

/// Deterministic outer-fold assignment: indices 0..n-1 shuffled with the
/// seed, then cut into contiguous blocks (the first n % k blocks get one
/// extra sample). Together the blocks are a disjoint cover of 0..n-1.
std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t k,
                                                 std::uint64_t seed);

struct FoldResult {
    std::size_t layer = 0;
    std::size_t fold = 0;
    double alpha = 0.0;   // inner-CV winner
    double mse = 0.0;
    double mean_r = 0.0;
    std::size_t skipped_columns = 0;
    double rsa = 0.0;
    bool rsa_valid = false;  // false when the test fold is too small or degenerate
    double cka = 0.0;
    bool cka_valid = false;
};

struct LayerSummary {
    std::size_t layer = 0;
    double mse = 0.0;
    double mean_r = 0.0;
    double rsa = 0.0;    // mean over folds with rsa_valid
    bool rsa_valid = false;
    double cka = 0.0;
    bool cka_valid = false;
};

struct EncodingReport {
    EncodingConfig config;
    std::vector<std::vector<std::size_t>> folds;
    std::vector<FoldResult> cells;    // layer-major: cells[layer * K + fold]
    std::vector<LayerSummary> layers; // fold means
    std::size_t best_layer = 0;       // argmax of aggregated mean_r
    std::vector<Matrix> oof_predictions;  // per layer: pooled out-of-fold predictions, N x d
};

/// Layerwise ridge encoding with nested cross-validation. For each layer and
/// outer fold, the inner folds partition the outer-train split; the alpha
/// minimizing mean inner validation MSE wins (ties -> smallest alpha), the
/// final fit uses the whole outer-train split and is scored on the held-out
/// fold. (layer, fold) cells are independent, so `threads` only changes wall
/// time, never the report.
EncodingReport nested_cv_encode(const EmbeddingTensor& emb, const SignalMatrix& sig,
                                const EncodingConfig& cfg, std::size_t threads = 1);

}  // namespace trajlab::encoding
