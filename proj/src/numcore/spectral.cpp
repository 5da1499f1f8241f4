#include "trajlab/numcore/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>

namespace trajlab::numcore {

namespace {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> map_of(const Matrix& m) {
    return Eigen::Map<const EigenRowMajor>(m.values().data(),
                                           static_cast<Eigen::Index>(m.rows()),
                                           static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

EigenDecomposition symmetric_eigendecomposition(const Matrix& k) {
    if (k.rows() != k.cols()) {
        throw NotSymmetric("matrix is not square");
    }
    const std::size_t n = k.rows();
    double max_abs = 0.0;
    double max_asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::abs(k(i, j)));
            if (j > i) {
                max_asym = std::max(max_asym, std::abs(k(i, j) - k(j, i)));
            }
        }
    }
    if (max_asym > 1e-8 * std::max(1.0, max_abs)) {
        throw NotSymmetric("asymmetry " + std::to_string(max_asym) + " exceeds tolerance");
    }

    // Solve on the symmetrized matrix so tiny asymmetries within tolerance
    // cannot leak into the spectrum.
    EigenRowMajor a = map_of(k);
    a = 0.5 * (a + a.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NotPositiveDefinite("eigendecomposition did not converge");
    }

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    // Eigen returns ascending order; emit descending.
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = n - 1 - j;
        out.eigenvalues[j] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, j) = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                           static_cast<Eigen::Index>(src));
        }
    }
    return out;
}

}  // namespace trajlab::numcore
