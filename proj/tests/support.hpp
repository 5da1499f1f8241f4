#pragma once

// Shared helpers for the test suites. Everything here is deliberately
// independent of the library's computation paths so tests can act as oracles.

#include <cmath>
#include <cstdint>
#include <vector>

#include "trajlab/numcore/matrix.hpp"
#include "trajlab/numcore/rng.hpp"

namespace testsupport {

inline trajlab::numcore::Matrix random_matrix(trajlab::numcore::Xoshiro256pp& rng,
                                              std::size_t rows, std::size_t cols,
                                              double scale = 1.0) {
    std::vector<double> data(rows * cols);
    for (auto& v : data) v = scale * rng.normal();
    return trajlab::numcore::Matrix(rows, cols, std::move(data));
}

inline trajlab::numcore::Matrix random_symmetric(trajlab::numcore::Xoshiro256pp& rng,
                                                 std::size_t n) {
    trajlab::numcore::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = rng.normal();
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

inline std::vector<double> random_vector(trajlab::numcore::Xoshiro256pp& rng, std::size_t n,
                                         double scale = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = scale * rng.normal();
    return v;
}

// Plain textbook Pearson, written independently of numcore::pearson.
inline double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i] / static_cast<double>(n);
        my += y[i] / static_cast<double>(n);
    }
    double num = 0, dx2 = 0, dy2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        dx2 += (x[i] - mx) * (x[i] - mx);
        dy2 += (y[i] - my) * (y[i] - my);
    }
    return num / std::sqrt(dx2 * dy2);
}

// Frobenius norm of (A - B).
inline double frobenius_diff(const trajlab::numcore::Matrix& a,
                             const trajlab::numcore::Matrix& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double d = a(i, j) - b(i, j);
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

inline double frobenius(const trajlab::numcore::Matrix& a) {
    double sum = 0.0;
    for (double v : a.values()) sum += v * v;
    return std::sqrt(sum);
}

}  // namespace testsupport
