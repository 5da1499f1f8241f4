#include "trajlab/ltc/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/spectral.hpp"

namespace trajlab::ltc {

double matrix_entropy(const Matrix& z, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidConfig("matrix_entropy: alpha must be positive");
    }
    const std::size_t n = z.rows();
    const std::size_t d = z.cols();
    if (n == 0 || d == 0) {
        throw ZeroTrace("matrix_entropy: empty matrix");
    }

    // Z Z^T and Z^T Z share their nonzero spectrum; use the smaller Gram.
    const bool use_rows = n <= d;
    const std::size_t g = use_rows ? n : d;
    Matrix gram(g, g);
    if (use_rows) {
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = i; j < g; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < d; ++k) s += z(i, k) * z(j, k);
                gram(i, j) = s;
                gram(j, i) = s;
            }
        }
    } else {
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = i; j < g; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += z(k, i) * z(k, j);
                gram(i, j) = s;
                gram(j, i) = s;
            }
        }
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < g; ++i) trace += gram(i, i);
    if (trace <= 0.0) {
        throw ZeroTrace("matrix_entropy: tr(ZZ^T) is zero");
    }

    // shares below 1e-12 are beneath eigensolver resolution; dropping them
    // uniformly keeps alpha < 1 from amplifying pure roundoff
    const auto ed = numcore::symmetric_eigendecomposition(gram);
    std::vector<double> shares;
    shares.reserve(g);
    for (double lambda : ed.eigenvalues) {
        const double p = std::max(0.0, lambda) / trace;
        if (p >= 1e-12) shares.push_back(p);
    }

    if (alpha == 1.0) {
        double s = 0.0;
        for (double p : shares) s -= p * std::log(p);
        return std::max(0.0, s);
    }
    double sum = 0.0;
    for (double p : shares) sum += std::pow(p, alpha);
    const double s = std::log(sum) / (1.0 - alpha);
    return std::max(0.0, s);
}

std::vector<double> confidence_series(std::span<const double> entropies, double epsilon) {
    if (entropies.empty()) {
        throw TooFewSteps("confidence_series: empty entropy series");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidConfig("confidence_series: epsilon must be positive");
    }
    double min_entropy = entropies[0];
    for (double s : entropies) {
        if (!std::isfinite(s)) {
            throw NonFiniteInput("confidence_series: entropy is not finite");
        }
        min_entropy = std::min(min_entropy, s);
    }
    std::vector<double> out(entropies.size());
    for (std::size_t k = 0; k < entropies.size(); ++k) {
        out[k] = (min_entropy + epsilon) / (entropies[k] + epsilon);
    }
    return out;
}

}  // namespace trajlab::ltc
