#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "support.hpp"
#include "trajlab/errors.hpp"
#include "trajlab/numcore/gaussian.hpp"
#include "trajlab/numcore/matrix.hpp"
#include "trajlab/numcore/rng.hpp"
#include "trajlab/numcore/spectral.hpp"
#include "trajlab/numcore/stats.hpp"
#include "trajlab/numcore/weights.hpp"

using namespace trajlab;
using namespace trajlab::numcore;
using testsupport::pearson_oracle;
using testsupport::random_matrix;
using testsupport::random_symmetric;
using testsupport::random_vector;

TEST_CASE("Matrix constructors enforce shape and finiteness") {
    CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
    CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::nan("")}), NonFiniteInput);
    CHECK_THROWS_AS(Matrix(1, 1, {INFINITY}), NonFiniteInput);
    Matrix m = Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(m(1, 0) == 3.0);
    CHECK(m.column_means()[1] == doctest::Approx(3.0));
}

TEST_CASE("pearson exact linear relations") {
    std::vector<double> x{1, 2, 3};
    CHECK(pearson(x, std::vector<double>{2, 4, 6}) == doctest::Approx(1.0));
    CHECK(pearson(x, std::vector<double>{3, 2, 1}) == doctest::Approx(-1.0));
}

TEST_CASE("pearson matches brute-force formula") {
    std::vector<double> x{1, 2, 4};
    std::vector<double> y{1, 3, 3};
    CHECK(pearson(x, y) == doctest::Approx(pearson_oracle(x, y)).epsilon(1e-12));
}

TEST_CASE("pearson error paths") {
    std::vector<double> x{1, 2, 3};
    CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 2}), LengthMismatch);
    CHECK_THROWS_AS(pearson(std::vector<double>{1.0}, std::vector<double>{1.0}),
                    LengthMismatch);
    CHECK_THROWS_AS(pearson(x, std::vector<double>{5, 5, 5}), ZeroVariance);
}

TEST_CASE("pearson affine property") {
    Xoshiro256pp rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_vector(rng, 2 + trial % 20);
        const double a = rng.uniform01() * 4 + 0.1;
        const double b = rng.normal();
        std::vector<double> up(x.size()), down(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            up[i] = a * x[i] + b;
            down[i] = -a * x[i] + b;
        }
        CHECK(pearson(x, up) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(pearson(x, down) == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("spearman monotone cases") {
    std::vector<double> inc{1, 4, 9, 20};
    std::vector<double> inc2{0.1, 0.2, 5.0, 100.0};
    std::vector<double> dec{5, 3, 2, -1};
    CHECK(spearman(inc, inc2) == doctest::Approx(1.0));
    CHECK(spearman(inc, dec) == doctest::Approx(-1.0));
}

TEST_CASE("spearman matches rank-then-pearson oracle") {
    std::vector<double> x{1, 5, 2};
    std::vector<double> y{10, 20, 30};
    // ranks of x = (1,3,2), ranks of y = (1,2,3)
    const double expected = pearson_oracle({1, 3, 2}, {1, 2, 3});
    CHECK(spearman(x, y) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("spearman average ranks for ties") {
    auto ranks = average_ranks(std::vector<double>{3.0, 1.0, 3.0, 2.0});
    CHECK(ranks == std::vector<double>{3.5, 1.0, 3.5, 2.0});
}

TEST_CASE("spearman AllTied error") {
    CHECK_THROWS_AS(spearman(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}),
                    AllTied);
}

TEST_CASE("spearman invariant under strictly monotone transforms") {
    Xoshiro256pp rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_vector(rng, 10);
        auto y = random_vector(rng, 10);
        const double base = spearman(x, y);
        std::vector<double> tx(x.size()), ty(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            tx[i] = std::exp(x[i]);
            ty[i] = y[i] * y[i] * y[i] + 2.0;
        }
        CHECK(spearman(tx, y) == doctest::Approx(base).epsilon(1e-14));
        CHECK(spearman(x, ty) == doctest::Approx(base).epsilon(1e-14));
    }
}

TEST_CASE("eigendecomposition identity and diagonal") {
    Matrix eye(3, 3);
    for (int i = 0; i < 3; ++i) eye(i, i) = 1.0;
    auto ed = symmetric_eigendecomposition(eye);
    for (double v : ed.eigenvalues) CHECK(v == doctest::Approx(1.0));

    auto ed2 = symmetric_eigendecomposition(Matrix::from_rows({{3, 0}, {0, 1}}));
    CHECK(ed2.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(ed2.eigenvalues[1] == doctest::Approx(1.0));
    // axis-aligned eigenvectors, up to sign
    CHECK(std::abs(ed2.eigenvectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(ed2.eigenvectors(1, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(ed2.eigenvectors(1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("eigendecomposition reconstruction residual") {
    Xoshiro256pp rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5;
        Matrix k = random_symmetric(rng, n);
        auto ed = symmetric_eigendecomposition(k);
        // descending order
        CHECK(std::is_sorted(ed.eigenvalues.rbegin(), ed.eigenvalues.rend()));
        Matrix recon(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double sum = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    sum += ed.eigenvectors(i, l) * ed.eigenvalues[l] * ed.eigenvectors(j, l);
                }
                recon(i, j) = sum;
            }
        }
        CHECK(testsupport::frobenius_diff(recon, k) <= 1e-8 * testsupport::frobenius(k));
    }
}

TEST_CASE("eigendecomposition PSD floor") {
    Xoshiro256pp rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(rng, 6, 4);
        // K = A A^T is PSD by construction
        Matrix k(6, 6);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                double sum = 0.0;
                for (std::size_t l = 0; l < 4; ++l) sum += a(i, l) * a(j, l);
                k(i, j) = sum;
            }
        }
        double trace = 0.0;
        for (std::size_t i = 0; i < 6; ++i) trace += k(i, i);
        auto ed = symmetric_eigendecomposition(k);
        for (double v : ed.eigenvalues) CHECK(v >= -1e-9 * trace);
    }
}

TEST_CASE("eigendecomposition rejects asymmetric input") {
    CHECK_THROWS_AS(symmetric_eigendecomposition(Matrix::from_rows({{1, 2}, {0, 1}})),
                    NotSymmetric);
    CHECK_THROWS_AS(symmetric_eigendecomposition(Matrix(2, 3)), NotSymmetric);
}

TEST_CASE("gaussian_kl identical distributions") {
    auto p = GaussianSummary::from_samples(
        Matrix::from_rows({{1, 2}, {0, 1}, {2, 4}, {1, 1}}), false);
    CHECK(gaussian_kl(p, p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gaussian_kl one-dimensional closed forms") {
    auto n01 = GaussianSummary::diagonal({0.0}, {1.0});
    auto n11 = GaussianSummary::diagonal({1.0}, {1.0});
    auto n02 = GaussianSummary::diagonal({0.0}, {2.0});
    // mean shift: (mu1-mu2)^2 / 2
    CHECK(gaussian_kl(n01, n11) == doctest::Approx(0.5).epsilon(1e-6));
    // variance mismatch: 0.5*(2 - 1 - ln 2)
    CHECK(gaussian_kl(n02, n01) == doctest::Approx(0.5 * (2.0 - 1.0 - std::log(2.0))).epsilon(1e-6));
}

TEST_CASE("gaussian_kl dimension mismatch") {
    auto a = GaussianSummary::spherical({0.0, 0.0});
    auto b = GaussianSummary::spherical({0.0});
    CHECK_THROWS_AS(gaussian_kl(a, b), DimensionMismatch);
}

TEST_CASE("gaussian_kl nonnegative on random pairs, zero iff identical") {
    Xoshiro256pp rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = GaussianSummary::from_samples(random_matrix(rng, 12, 3), false);
        auto q = GaussianSummary::from_samples(random_matrix(rng, 12, 3), false);
        const double kl = gaussian_kl(p, q);
        CHECK(kl >= 0.0);
        CHECK(kl > 1e-6);  // independent samples, distributions differ
        CHECK(gaussian_kl(p, p) <= 1e-10);
    }
}

TEST_CASE("gaussian covariance validation") {
    CHECK_THROWS_AS(GaussianSummary({0.0, 0.0}, Matrix::from_rows({{1, 0.5}, {0.2, 1}})),
                    NotSymmetric);
    CHECK_THROWS_AS(GaussianSummary({0.0, 0.0}, Matrix::from_rows({{1, 0}, {0, -1}})),
                    NotPositiveDefinite);
    CHECK_THROWS_AS(GaussianSummary({0.0}, Matrix(2, 2)), DimensionMismatch);
}

TEST_CASE("gamma_weights single step") {
    auto w = gamma_weights(1, 0.5);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == doctest::Approx(1.0));
}

TEST_CASE("gamma_weights beta=1 matches direct density evaluation") {
    auto w = gamma_weights(3, 1.0);
    // w(t) proportional to exp(-t), t = 1..3
    const double z = std::exp(-1.0) + std::exp(-2.0) + std::exp(-3.0);
    CHECK(w[0] == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(std::exp(-2.0) / z).epsilon(1e-14));
    CHECK(w[2] == doctest::Approx(std::exp(-3.0) / z).epsilon(1e-14));
}

TEST_CASE("gamma_weights normalization contract") {
    Xoshiro256pp rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t t = 1 + static_cast<std::size_t>(rng.below(500));
        const double beta = 0.2 + 5.0 * rng.uniform01();
        auto w = gamma_weights(t, beta);
        REQUIRE(w.size() == t);
        double sum = 0.0;
        for (std::size_t i = 0; i < t; ++i) {
            CHECK(w[i] >= 0.0);
            sum += w[i];
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    // large T with peaked beta must not underflow to zero weights
    auto big = gamma_weights(2000, 4.0);
    CHECK(std::abs(std::accumulate(big.weights.begin(), big.weights.end(), 0.0) - 1.0) <=
          1e-12);
}

TEST_CASE("gamma_weights invalid beta") {
    CHECK_THROWS_AS(gamma_weights(3, 0.0), InvalidBeta);
    CHECK_THROWS_AS(gamma_weights(3, -1.0), InvalidBeta);
}

TEST_CASE("moments symmetric sample has zero skewness") {
    auto m = moments(std::vector<double>{-1, 0, 1});
    CHECK(m.skewness == doctest::Approx(0.0));
    CHECK(m.mean == doctest::Approx(0.0));
}

TEST_CASE("moments matches brute-force moment sums") {
    std::vector<double> x{0, 0, 0, 1};
    // independent direct evaluation
    double mean = 0.25;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : x) {
        m2 += std::pow(v - mean, 2) / 4.0;
        m3 += std::pow(v - mean, 3) / 4.0;
        m4 += std::pow(v - mean, 4) / 4.0;
    }
    auto m = moments(x);
    CHECK(m.variance == doctest::Approx(m2).epsilon(1e-14));
    CHECK(m.skewness == doctest::Approx(m3 / std::pow(m2, 1.5)).epsilon(1e-12));
    CHECK(m.excess_kurtosis == doctest::Approx(m4 / (m2 * m2) - 3.0).epsilon(1e-12));
    // known values for a 3-zeros-one-one sample
    CHECK(m.skewness == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("moments on a large normal sample") {
    Xoshiro256pp rng(17);
    std::vector<double> x(100000);
    for (auto& v : x) v = rng.normal();
    auto m = moments(x);
    CHECK(std::abs(m.mean) < 0.02);
    CHECK(m.variance == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(m.skewness) <= 0.05);
    CHECK(std::abs(m.excess_kurtosis) <= 0.1);
}

TEST_CASE("moments sign flip and affine invariance") {
    Xoshiro256pp rng(18);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_vector(rng, 50);
        auto mx = moments(x);
        std::vector<double> neg(x.size()), aff(x.size());
        const double a = -2.5, b = 3.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            neg[i] = -x[i];
            aff[i] = a * x[i] + b;
        }
        CHECK(moments(neg).skewness == doctest::Approx(-mx.skewness).epsilon(1e-9));
        CHECK(moments(aff).excess_kurtosis ==
              doctest::Approx(mx.excess_kurtosis).epsilon(1e-9));
    }
}

TEST_CASE("moments error paths") {
    CHECK_THROWS_AS(moments(std::vector<double>{1, 2}), TooShort);
    CHECK_THROWS_AS(moments(std::vector<double>{2, 2, 2, 2}), ZeroVariance);
}

TEST_CASE("rng streams are reproducible") {
    Xoshiro256pp a(42), b(42), c(43);
    bool all_equal = true;
    bool any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next();
        all_equal = all_equal && (va == b.next());
        any_diff = any_diff || (va != c.next());
    }
    CHECK(all_equal);
    CHECK(any_diff);

    Xoshiro256pp d(7), e(7);
    for (int i = 0; i < 50; ++i) CHECK(d.normal() == e.normal());
}
