#pragma once

#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::numcore {

/// Eigenvalues in descending order; eigenvectors() column j pairs with
/// eigenvalues[j]. Satisfies ||V diag(w) V^T - K||_F <= 1e-8 ||K||_F.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Throws NotSymmetric when max_ij |K_ij - K_ji| > 1e-8 * max(1, max|K|).
EigenDecomposition symmetric_eigendecomposition(const Matrix& k);

}  // namespace trajlab::numcore
