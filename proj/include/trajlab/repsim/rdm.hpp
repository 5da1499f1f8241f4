#pragma once

#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::repsim {

using numcore::Matrix;

/// Representational dissimilarity matrix: symmetric, zero diagonal,
/// nonnegative pairwise distances between sample rows.
struct RDM {
    Matrix distances;

    std::size_t size() const { return distances.rows(); }

    /// Strict upper triangle flattened row-major.
    std::vector<double> upper_triangle() const;

    void validate() const;
};

enum class DistanceKind { euclidean, cosine };

/// Pairwise distances between rows of X. Euclidean is the default used by
/// the pipeline; cosine is available for sensitivity checks.
RDM compute_rdm(const Matrix& x, DistanceKind kind = DistanceKind::euclidean);

/// Spearman correlation between the strict upper triangles of two RDMs.
/// Throws SizeMismatch for unequal sizes or size < 3 and DegenerateRDM when
/// all distances of one RDM are equal.
double rsa_score(const RDM& a, const RDM& b);

}  // namespace trajlab::repsim
