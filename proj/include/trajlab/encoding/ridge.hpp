#pragma once

#include <cstddef>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::encoding {

using numcore::Matrix;

/// One ridge solution. Weights act on mean-centered features; predict adds
/// the stored means back, so fits carry their own centering.
struct RidgeFit {
    Matrix weights;                     // D x d
    std::vector<double> intercept;      // d, equals target_means - feature_means * weights
    std::vector<double> feature_means;  // D
    std::vector<double> target_means;   // d
    double alpha = 0.0;
    std::size_t layer = 0;
    std::size_t fold = 0;
};

/// Closed-form ridge W = (X^T X + alpha I)^-1 X^T Y on centered X, Y.
/// When D > n the equivalent dual form W = X^T (X X^T + alpha I)^-1 Y is
/// solved instead, so wide feature blocks stay cheap. alpha must be > 0.
RidgeFit fit_ridge(const Matrix& features, const Matrix& targets, double alpha);

/// (X - feature_means) W + target_means, row by row.
Matrix predict(const RidgeFit& fit, const Matrix& features);

}  // namespace trajlab::encoding
