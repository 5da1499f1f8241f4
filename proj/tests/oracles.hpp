#pragma once

// Independent reference implementations used to cross-check library results.
// These deliberately avoid the library's solve paths: ridge oracles are
// iterative minimizers of the ridge objective, not closed-form solves.

#include <cmath>
#include <cstddef>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace testsupport {

using trajlab::numcore::Matrix;

inline std::vector<double> column_means_oracle(const Matrix& m) {
    std::vector<double> mu(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) mu[j] += m(i, j);
    }
    for (auto& v : mu) v /= static_cast<double>(m.rows());
    return mu;
}

inline Matrix center_columns_oracle(const Matrix& m) {
    auto mu = column_means_oracle(m);
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) -= mu[j];
    }
    return out;
}

// Steepest descent with exact line search on
//   f(W) = ||Xc W - Yc||_F^2 + alpha ||W||_F^2
// where Xc, Yc are column-centered copies. Quadratic objective, so the exact
// step is <G,G> / <G, H G> with H G = 2 (X^T X G + alpha G).
inline Matrix ridge_gradient_descent_oracle(const Matrix& features, const Matrix& targets,
                                            double alpha, std::size_t max_iters = 200000,
                                            double grad_tol = 1e-12) {
    const Matrix xc = center_columns_oracle(features);
    const Matrix yc = center_columns_oracle(targets);
    const std::size_t n = xc.rows(), d_in = xc.cols(), d_out = yc.cols();

    auto xtx_times = [&](const Matrix& w) {
        // X^T (X W)
        Matrix xw(n, d_out);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d_out; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < d_in; ++k) s += xc(i, k) * w(k, j);
                xw(i, j) = s;
            }
        }
        Matrix out(d_in, d_out);
        for (std::size_t k = 0; k < d_in; ++k) {
            for (std::size_t j = 0; j < d_out; ++j) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += xc(i, k) * xw(i, j);
                out(k, j) = s;
            }
        }
        return out;
    };

    Matrix xty(d_in, d_out);
    for (std::size_t k = 0; k < d_in; ++k) {
        for (std::size_t j = 0; j < d_out; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += xc(i, k) * yc(i, j);
            xty(k, j) = s;
        }
    }

    Matrix w(d_in, d_out);
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        // G = 2 (X^T X W - X^T Y + alpha W)
        Matrix g = xtx_times(w);
        double gnorm2 = 0.0;
        for (std::size_t k = 0; k < d_in; ++k) {
            for (std::size_t j = 0; j < d_out; ++j) {
                g(k, j) = 2.0 * (g(k, j) - xty(k, j) + alpha * w(k, j));
                gnorm2 += g(k, j) * g(k, j);
            }
        }
        if (gnorm2 <= grad_tol * grad_tol) break;
        Matrix hg = xtx_times(g);
        double ghg = 0.0;
        for (std::size_t k = 0; k < d_in; ++k) {
            for (std::size_t j = 0; j < d_out; ++j) {
                ghg += g(k, j) * 2.0 * (hg(k, j) + alpha * g(k, j));
            }
        }
        if (ghg <= 0.0) break;
        const double step = gnorm2 / ghg;
        for (std::size_t k = 0; k < d_in; ++k) {
            for (std::size_t j = 0; j < d_out; ++j) w(k, j) -= step * g(k, j);
        }
    }
    return w;
}

// Conjugate gradient on (X^T X + alpha I) w_j = (X^T Y)_j per target column,
// again over centered copies. Another iterative minimizer of the same ridge
// objective, fast enough for many random instances.
inline Matrix ridge_conjugate_gradient_oracle(const Matrix& features, const Matrix& targets,
                                              double alpha, double tol = 1e-14) {
    const Matrix xc = center_columns_oracle(features);
    const Matrix yc = center_columns_oracle(targets);
    const std::size_t n = xc.rows(), d_in = xc.cols(), d_out = yc.cols();

    auto apply = [&](const std::vector<double>& v) {
        std::vector<double> xv(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < d_in; ++k) s += xc(i, k) * v[k];
            xv[i] = s;
        }
        std::vector<double> out(d_in, 0.0);
        for (std::size_t k = 0; k < d_in; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += xc(i, k) * xv[i];
            out[k] = s + alpha * v[k];
        }
        return out;
    };

    Matrix w(d_in, d_out);
    for (std::size_t j = 0; j < d_out; ++j) {
        std::vector<double> b(d_in, 0.0);
        for (std::size_t k = 0; k < d_in; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += xc(i, k) * yc(i, j);
            b[k] = s;
        }
        std::vector<double> x(d_in, 0.0), r = b, p = b;
        double rs = 0.0;
        for (double v : r) rs += v * v;
        const double threshold = tol * tol * std::max(1.0, rs);
        for (std::size_t iter = 0; iter < 10 * d_in + 10 && rs > threshold; ++iter) {
            const auto ap = apply(p);
            double pap = 0.0;
            for (std::size_t k = 0; k < d_in; ++k) pap += p[k] * ap[k];
            if (pap <= 0.0) break;
            const double alpha_step = rs / pap;
            for (std::size_t k = 0; k < d_in; ++k) {
                x[k] += alpha_step * p[k];
                r[k] -= alpha_step * ap[k];
            }
            double rs_new = 0.0;
            for (double v : r) rs_new += v * v;
            const double beta = rs_new / rs;
            for (std::size_t k = 0; k < d_in; ++k) p[k] = r[k] + beta * p[k];
            rs = rs_new;
        }
        for (std::size_t k = 0; k < d_in; ++k) w(k, j) = x[k];
    }
    return w;
}

inline double relative_frobenius_error(const Matrix& got, const Matrix& want) {
    double diff = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < got.rows(); ++i) {
        for (std::size_t j = 0; j < got.cols(); ++j) {
            const double d = got(i, j) - want(i, j);
            diff += d * d;
            ref += want(i, j) * want(i, j);
        }
    }
    return ref == 0.0 ? std::sqrt(diff) : std::sqrt(diff / ref);
}

}  // namespace testsupport
