#pragma once

#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::numcore {

/// Mean vector plus covariance of one multivariate Gaussian. The constructor
/// enforces a square covariance matching the mean length, symmetry within
/// 1e-10 and eigenvalues >= -1e-10 * max(1, trace).
class GaussianSummary {
public:
    GaussianSummary(std::vector<double> mean, Matrix covariance);

    /// Diagonal covariance from per-dimension variances.
    static GaussianSummary diagonal(std::vector<double> mean, std::vector<double> variances);

    /// Identity covariance.
    static GaussianSummary spherical(std::vector<double> mean);

    /// Sample mean and covariance from rows of `samples` (population
    /// normalization, divide by N). With diagonal_only, off-diagonal
    /// covariance entries are zeroed.
    static GaussianSummary from_samples(const Matrix& samples, bool diagonal_only);

    std::size_t dim() const { return mean_.size(); }
    const std::vector<double>& mean() const { return mean_; }
    const Matrix& covariance() const { return covariance_; }

    bool operator==(const GaussianSummary& other) const = default;

private:
    std::vector<double> mean_;
    Matrix covariance_;
};

/// Closed-form KL(P || Q) in nats. Both covariances are regularized with
/// eps_r * I, eps_r = max(1e-8, 1e-8 * tr(Sigma)/p), before inversion, so
/// rank-deficient sample covariances stay usable. Result clamped at 0.
double gaussian_kl(const GaussianSummary& p, const GaussianSummary& q);

}  // namespace trajlab::numcore
