#pragma once

#include <span>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::ltc {

using numcore::Matrix;

/// Matrix-based entropy S_alpha(Z) in nats over the normalized eigenvalue
/// spectrum of the Gram matrix K = Z Z^T:
///   alpha != 1:  (1 / (1 - alpha)) * ln(sum_i p_i^alpha)
///   alpha == 1:  -sum_i p_i ln p_i   (von Neumann limit)
/// with p_i = lambda_i / tr(K). Shares below 1e-12 are dropped for every
/// alpha (they sit beneath eigensolver resolution). The nonzero spectrum is
/// computed from the smaller of Z Z^T and Z^T Z, which share it. Throws
/// ZeroTrace on an all-zero Z.
double matrix_entropy(const Matrix& z, double alpha = 1.0);

/// C(k) = (1 / (S_k + eps)) / max_k' (1 / (S_k' + eps)); the minimum-entropy
/// step gets exactly 1.
std::vector<double> confidence_series(std::span<const double> entropies,
                                      double epsilon = 1e-8);

}  // namespace trajlab::ltc
