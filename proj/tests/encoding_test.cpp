#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "trajlab/encoding/nested_cv.hpp"
#include "trajlab/encoding/ridge.hpp"
#include "trajlab/errors.hpp"
#include "trajlab/ingest/synth.hpp"
#include "trajlab/repsim/metrics.hpp"

using namespace trajlab;
using namespace trajlab::encoding;
using numcore::Matrix;
using numcore::Xoshiro256pp;
using testsupport::random_matrix;

TEST_CASE("fit_ridge interpolation limit recovers the generating weights") {
    Xoshiro256pp rng(101);
    Matrix x = random_matrix(rng, 12, 5);
    Matrix w0 = random_matrix(rng, 5, 3);
    Matrix y(12, 3);
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 5; ++k) s += x(i, k) * w0(k, j);
            y(i, j) = s;
        }
    }
    const RidgeFit fit = fit_ridge(x, y, 1e-12);
    CHECK(testsupport::relative_frobenius_error(fit.weights, w0) < 1e-6);
    // training predictions reproduce targets
    const Matrix pred = predict(fit, x);
    CHECK(testsupport::frobenius_diff(pred, y) < 1e-6);
}

TEST_CASE("fit_ridge infinite-shrinkage limit collapses to target means") {
    Xoshiro256pp rng(102);
    Matrix x = random_matrix(rng, 15, 4);
    Matrix y = random_matrix(rng, 15, 2);
    const RidgeFit fit = fit_ridge(x, y, 1e12);
    for (double w : fit.weights.values()) CHECK(std::abs(w) < 1e-8);
    const Matrix pred = predict(fit, x);
    const auto means = y.column_means();
    for (std::size_t i = 0; i < pred.rows(); ++i) {
        for (std::size_t j = 0; j < pred.cols(); ++j) {
            CHECK(pred(i, j) == doctest::Approx(means[j]).epsilon(1e-6));
        }
    }
}

TEST_CASE("fit_ridge matches the gradient-descent ridge minimizer") {
    Xoshiro256pp rng(103);
    Matrix x = random_matrix(rng, 20, 5);
    Matrix y = random_matrix(rng, 20, 3);
    const RidgeFit fit = fit_ridge(x, y, 0.7);
    const Matrix oracle = testsupport::ridge_gradient_descent_oracle(x, y, 0.7);
    CHECK(testsupport::relative_frobenius_error(fit.weights, oracle) < 1e-6);
}

TEST_CASE("fit_ridge matches the conjugate-gradient minimizer, tall and wide") {
    Xoshiro256pp rng(104);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 4 + rng.below(20);
        const std::size_t d_in = 1 + rng.below(25);  // may exceed n -> dual path
        const std::size_t d_out = 1 + rng.below(6);
        Matrix x = random_matrix(rng, n, d_in);
        Matrix y = random_matrix(rng, n, d_out);
        const double alpha = std::pow(10.0, -2.0 + 4.0 * rng.uniform01());
        const RidgeFit fit = fit_ridge(x, y, alpha);
        const Matrix oracle = testsupport::ridge_conjugate_gradient_oracle(x, y, alpha);
        CHECK(testsupport::relative_frobenius_error(fit.weights, oracle) < 1e-6);
    }
}

TEST_CASE("predict equals manual affine evaluation on a 3x2 case") {
    Matrix x = Matrix::from_rows({{1, 2}, {3, 5}, {-1, 0}});
    Matrix y = Matrix::from_rows({{2, 1, 0}, {4, 0, 1}, {0, 2, 2}});
    const RidgeFit fit = fit_ridge(x, y, 0.5);
    Matrix held = Matrix::from_rows({{2, -1}, {0, 4}});
    const Matrix pred = predict(fit, held);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double manual = fit.target_means[j];
            for (std::size_t k = 0; k < 2; ++k) {
                manual += (held(i, k) - fit.feature_means[k]) * fit.weights(k, j);
            }
            CHECK(pred(i, j) == doctest::Approx(manual).epsilon(1e-14));
        }
    }
}

TEST_CASE("zero-variance features predict target means") {
    Matrix x = Matrix::from_rows({{3, 3}, {3, 3}, {3, 3}, {3, 3}});
    Matrix y = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    const RidgeFit fit = fit_ridge(x, y, 1.0);
    const Matrix pred = predict(fit, x);
    const auto means = y.column_means();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(pred(i, j) == doctest::Approx(means[j]).epsilon(1e-12));
        }
    }
}

TEST_CASE("ridge error paths") {
    Matrix x = Matrix::from_rows({{1, 2}, {3, 4}});
    Matrix y = Matrix::from_rows({{1}, {2}});
    CHECK_THROWS_AS(fit_ridge(x, y, 0.0), SingularSystem);
    CHECK_THROWS_AS(fit_ridge(x, y, -1.0), SingularSystem);
    CHECK_THROWS_AS(fit_ridge(x, Matrix::from_rows({{1}}), 1.0), DimensionMismatch);
    const RidgeFit fit = fit_ridge(x, y, 1.0);
    CHECK_THROWS_AS(predict(fit, Matrix::from_rows({{1, 2, 3}})), DimensionMismatch);
}

TEST_CASE("monotone shrinkage of the weight norm") {
    Xoshiro256pp rng(105);
    Matrix x = random_matrix(rng, 18, 6);
    Matrix y = random_matrix(rng, 18, 4);
    double prev = std::numeric_limits<double>::infinity();
    for (double alpha : {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0, 1000.0}) {
        const RidgeFit fit = fit_ridge(x, y, alpha);
        const double norm = testsupport::frobenius(fit.weights);
        CHECK(norm <= prev + 1e-12);
        prev = norm;
    }
}

TEST_CASE("permuting test rows permutes predictions identically") {
    Xoshiro256pp rng(106);
    Matrix x = random_matrix(rng, 10, 3);
    Matrix y = random_matrix(rng, 10, 2);
    const RidgeFit fit = fit_ridge(x, y, 0.3);
    Matrix test = random_matrix(rng, 6, 3);
    const Matrix direct = predict(fit, test);
    std::vector<std::size_t> perm{3, 0, 5, 1, 4, 2};
    Matrix permuted(6, 3);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 3; ++j) permuted(i, j) = test(perm[i], j);
    }
    const Matrix pred_perm = predict(fit, permuted);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(pred_perm(i, j) == direct(perm[i], j));
        }
    }
}

TEST_CASE("make_folds is a disjoint cover for every (K, seed)") {
    Xoshiro256pp rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 10 + rng.below(200);
        const std::size_t k = 2 + rng.below(std::min<std::uint64_t>(8, n - 2));
        const auto folds = make_folds(n, k, rng.next());
        REQUIRE(folds.size() == k);
        std::set<std::size_t> seen;
        std::size_t total = 0;
        for (const auto& fold : folds) {
            total += fold.size();
            for (std::size_t idx : fold) {
                CHECK(idx < n);
                CHECK(seen.insert(idx).second);  // no index twice
            }
        }
        CHECK(total == n);
        // balanced within one sample
        for (const auto& fold : folds) {
            CHECK(fold.size() >= n / k);
            CHECK(fold.size() <= n / k + 1);
        }
    }
}

namespace {

EncodingConfig small_config(std::uint64_t seed) {
    EncodingConfig cfg;
    cfg.outer_folds = 4;
    cfg.inner_folds = 2;
    cfg.alpha_grid = {1e-3, 1e-1, 10.0};
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("nested_cv_encode recovers the coupled layer on synthetic data") {
    ingest::SynthConfig synth;
    synth.samples = 120;
    synth.signal_dim = 8;
    synth.layer_count = 4;
    synth.embed_dim = 16;
    synth.coupled_layer = 2;
    synth.noise_sigma = 0.25;
    synth.seed = 9001;
    const auto data = ingest::synth_generate(synth);
    const auto report = nested_cv_encode(data.embeddings, data.signals, small_config(5));
    CHECK(report.best_layer == synth.coupled_layer);
    CHECK(report.layers[2].mean_r > 0.8);
    for (std::size_t l = 0; l < 4; ++l) {
        if (l != 2) CHECK(report.layers[l].mean_r < 0.3);
    }
}

TEST_CASE("nested_cv_encode on pure-noise targets stays near zero r") {
    ingest::SynthConfig synth;
    synth.samples = 200;
    synth.signal_dim = 4;
    synth.layer_count = 3;
    synth.embed_dim = 8;
    synth.coupled_layer = 0;
    synth.noise_sigma = 0.0;
    synth.seed = 404;
    auto data = ingest::synth_generate(synth);
    // replace targets with independent noise
    Xoshiro256pp rng(405);
    Matrix noise = random_matrix(rng, 200, 4);
    data.signals.data = noise;
    const auto report = nested_cv_encode(data.embeddings, data.signals, small_config(6));
    for (const auto& layer : report.layers) {
        CHECK(std::abs(layer.mean_r) <= 0.15);
    }
}

TEST_CASE("nested_cv_encode is deterministic and thread-invariant") {
    ingest::SynthConfig synth;
    synth.samples = 60;
    synth.signal_dim = 5;
    synth.layer_count = 3;
    synth.embed_dim = 6;
    synth.coupled_layer = 1;
    synth.noise_sigma = 0.5;
    synth.seed = 17;
    const auto data = ingest::synth_generate(synth);
    const auto a = nested_cv_encode(data.embeddings, data.signals, small_config(7), 1);
    const auto b = nested_cv_encode(data.embeddings, data.signals, small_config(7), 1);
    const auto c = nested_cv_encode(data.embeddings, data.signals, small_config(7), 4);

    REQUIRE(a.cells.size() == b.cells.size());
    REQUIRE(a.cells.size() == c.cells.size());
    CHECK(a.folds == b.folds);
    CHECK(a.folds == c.folds);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].alpha == b.cells[i].alpha);
        CHECK(a.cells[i].mse == b.cells[i].mse);
        CHECK(a.cells[i].mean_r == b.cells[i].mean_r);
        CHECK(a.cells[i].alpha == c.cells[i].alpha);
        CHECK(a.cells[i].mse == c.cells[i].mse);
        CHECK(a.cells[i].mean_r == c.cells[i].mean_r);
        CHECK(a.cells[i].rsa == c.cells[i].rsa);
        CHECK(a.cells[i].cka == c.cells[i].cka);
    }
    CHECK(a.best_layer == b.best_layer);
    CHECK(a.best_layer == c.best_layer);
    for (std::size_t l = 0; l < a.oof_predictions.size(); ++l) {
        CHECK(a.oof_predictions[l] == b.oof_predictions[l]);
        CHECK(a.oof_predictions[l] == c.oof_predictions[l]);
    }
}

TEST_CASE("nested_cv_encode input validation") {
    ingest::SynthConfig synth;
    synth.samples = 10;
    synth.signal_dim = 3;
    synth.layer_count = 2;
    synth.embed_dim = 4;
    synth.coupled_layer = 0;
    synth.noise_sigma = 0.1;
    synth.seed = 1;
    auto data = ingest::synth_generate(synth);

    EncodingConfig cfg = small_config(1);
    cfg.outer_folds = 6;  // N=10 < 2*6
    CHECK_THROWS_AS(nested_cv_encode(data.embeddings, data.signals, cfg),
                    InsufficientSamples);

    EncodingConfig bad = small_config(1);
    bad.alpha_grid = {1.0, 0.5};
    CHECK_THROWS_AS(nested_cv_encode(data.embeddings, data.signals, bad), InvalidConfig);

    auto misaligned = data.signals;
    std::swap(misaligned.sample_ids[0], misaligned.sample_ids[1]);
    CHECK_THROWS_AS(nested_cv_encode(data.embeddings, misaligned, small_config(1)),
                    DimMismatch);
}
