#include "trajlab/encoding/nested_cv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/rng.hpp"
#include "trajlab/parallel.hpp"
#include "trajlab/repsim/metrics.hpp"
#include "trajlab/repsim/rdm.hpp"

namespace trajlab::encoding {

std::vector<double> EncodingConfig::default_alpha_grid() {
    std::vector<double> grid;
    grid.reserve(13);
    for (int i = 0; i < 13; ++i) {
        grid.push_back(std::pow(10.0, -3.0 + 0.5 * i));
    }
    return grid;
}

void EncodingConfig::validate() const {
    if (outer_folds < 2) {
        throw InvalidConfig("outer_folds must be >= 2");
    }
    if (inner_folds < 2) {
        throw InvalidConfig("inner_folds must be >= 2");
    }
    if (alpha_grid.empty()) {
        throw InvalidConfig("alpha_grid must be nonempty");
    }
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        if (!(alpha_grid[i] > 0.0) || !std::isfinite(alpha_grid[i])) {
            throw InvalidConfig("alpha_grid entries must be positive and finite");
        }
        if (i > 0 && alpha_grid[i] <= alpha_grid[i - 1]) {
            throw InvalidConfig("alpha_grid must be strictly ascending");
        }
    }
}

std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t k,
                                                 std::uint64_t seed) {
    if (k < 2 || n < k) {
        throw InsufficientSamples("make_folds: need n >= k >= 2");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    numcore::Xoshiro256pp rng(seed);
    rng.shuffle(order);

    std::vector<std::vector<std::size_t>> folds(k);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t len = base + (f < extra ? 1 : 0);
        folds[f].assign(order.begin() + pos, order.begin() + pos + len);
        pos += len;
    }
    return folds;
}

namespace {

Matrix gather_rows(const Matrix& src, const std::vector<std::size_t>& rows) {
    Matrix out(rows.size(), src.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto r = src.row(rows[i]);
        std::copy(r.begin(), r.end(), out.row(i).begin());
    }
    return out;
}

}  // namespace

EncodingReport nested_cv_encode(const EmbeddingTensor& emb, const SignalMatrix& sig,
                                const EncodingConfig& cfg, std::size_t threads) {
    cfg.validate();
    emb.validate();
    sig.validate();
    const std::size_t n = sig.samples();
    if (emb.samples() != n) {
        throw DimMismatch("nested_cv_encode: embedding has " + std::to_string(emb.samples()) +
                          " samples, signal has " + std::to_string(n));
    }
    if (emb.sample_ids != sig.sample_ids) {
        throw DimMismatch("nested_cv_encode: sample ids are not aligned");
    }
    if (n < 2 * cfg.outer_folds) {
        throw InsufficientSamples("nested_cv_encode: need N >= 2*outer_folds");
    }

    const std::size_t layer_count = emb.layers();
    const std::size_t k = cfg.outer_folds;
    const std::size_t d = sig.features();

    EncodingReport report;
    report.config = cfg;
    report.folds = make_folds(n, k, cfg.seed);
    report.cells.resize(layer_count * k);
    report.oof_predictions.assign(layer_count, Matrix(n, d));

    // Outer-train index list for each fold, in shuffled fold order; the inner
    // partition cuts this list into contiguous blocks.
    std::vector<std::vector<std::size_t>> train_lists(k);
    for (std::size_t f = 0; f < k; ++f) {
        for (std::size_t g = 0; g < k; ++g) {
            if (g == f) continue;
            train_lists[f].insert(train_lists[f].end(), report.folds[g].begin(),
                                  report.folds[g].end());
        }
        if (train_lists[f].size() < 2 * cfg.inner_folds) {
            throw InsufficientSamples(
                "nested_cv_encode: outer-train split too small for inner folds");
        }
    }

    parallel_for(layer_count * k, threads, [&](std::size_t cell) {
        const std::size_t layer = cell / k;
        const std::size_t fold = cell % k;
        const Matrix layer_features = emb.layer_matrix(layer);
        const auto& train_idx = train_lists[fold];
        const auto& test_idx = report.folds[fold];

        // inner partition: contiguous blocks over the outer-train list
        const std::size_t inner_k = cfg.inner_folds;
        std::vector<std::vector<std::size_t>> inner_blocks(inner_k);
        {
            const std::size_t m = train_idx.size();
            const std::size_t base = m / inner_k;
            const std::size_t extra = m % inner_k;
            std::size_t pos = 0;
            for (std::size_t b = 0; b < inner_k; ++b) {
                const std::size_t len = base + (b < extra ? 1 : 0);
                inner_blocks[b].assign(train_idx.begin() + pos, train_idx.begin() + pos + len);
                pos += len;
            }
        }

        double best_alpha = cfg.alpha_grid.front();
        double best_mse = std::numeric_limits<double>::infinity();
        for (double alpha : cfg.alpha_grid) {
            double mse_sum = 0.0;
            for (std::size_t b = 0; b < inner_k; ++b) {
                std::vector<std::size_t> inner_train;
                for (std::size_t c = 0; c < inner_k; ++c) {
                    if (c == b) continue;
                    inner_train.insert(inner_train.end(), inner_blocks[c].begin(),
                                       inner_blocks[c].end());
                }
                const RidgeFit fit = fit_ridge(gather_rows(layer_features, inner_train),
                                               gather_rows(sig.data, inner_train), alpha);
                const Matrix pred = predict(fit, gather_rows(layer_features, inner_blocks[b]));
                mse_sum += repsim::mse(pred, gather_rows(sig.data, inner_blocks[b]));
            }
            const double mean_mse = mse_sum / static_cast<double>(inner_k);
            // strict comparison keeps the smallest alpha on ties
            if (mean_mse < best_mse) {
                best_mse = mean_mse;
                best_alpha = alpha;
            }
        }

        RidgeFit fit = fit_ridge(gather_rows(layer_features, train_idx),
                                 gather_rows(sig.data, train_idx), best_alpha);
        fit.layer = layer;
        fit.fold = fold;
        const Matrix test_features = gather_rows(layer_features, test_idx);
        const Matrix test_targets = gather_rows(sig.data, test_idx);
        const Matrix pred = predict(fit, test_features);

        FoldResult result;
        result.layer = layer;
        result.fold = fold;
        result.alpha = best_alpha;
        result.mse = repsim::mse(pred, test_targets);
        const auto score = repsim::pearson_score(pred, test_targets);
        result.mean_r = score.value;
        result.skipped_columns = score.skipped_columns;
        if (test_idx.size() >= 3) {
            try {
                result.rsa = repsim::rsa_score(repsim::compute_rdm(pred),
                                               repsim::compute_rdm(test_targets));
                result.rsa_valid = true;
            } catch (const DataError&) {
                result.rsa_valid = false;
            }
        }
        try {
            result.cka = repsim::cka(pred, test_targets);
            result.cka_valid = true;
        } catch (const DataError&) {
            result.cka_valid = false;
        }
        report.cells[cell] = result;

        Matrix& oof = report.oof_predictions[layer];
        for (std::size_t i = 0; i < test_idx.size(); ++i) {
            std::copy(pred.row(i).begin(), pred.row(i).end(), oof.row(test_idx[i]).begin());
        }
    });

    report.layers.resize(layer_count);
    for (std::size_t layer = 0; layer < layer_count; ++layer) {
        LayerSummary& s = report.layers[layer];
        s.layer = layer;
        std::size_t rsa_count = 0, cka_count = 0;
        for (std::size_t fold = 0; fold < k; ++fold) {
            const FoldResult& c = report.cells[layer * k + fold];
            s.mse += c.mse;
            s.mean_r += c.mean_r;
            if (c.rsa_valid) {
                s.rsa += c.rsa;
                ++rsa_count;
            }
            if (c.cka_valid) {
                s.cka += c.cka;
                ++cka_count;
            }
        }
        s.mse /= static_cast<double>(k);
        s.mean_r /= static_cast<double>(k);
        s.rsa_valid = rsa_count > 0;
        s.rsa = rsa_count > 0 ? s.rsa / static_cast<double>(rsa_count) : 0.0;
        s.cka_valid = cka_count > 0;
        s.cka = cka_count > 0 ? s.cka / static_cast<double>(cka_count) : 0.0;
    }
    report.best_layer = 0;
    for (std::size_t layer = 1; layer < layer_count; ++layer) {
        if (report.layers[layer].mean_r > report.layers[report.best_layer].mean_r) {
            report.best_layer = layer;
        }
    }
    return report;
}

}  // namespace trajlab::encoding
