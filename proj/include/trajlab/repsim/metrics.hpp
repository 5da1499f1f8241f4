#pragma once

#include <cstddef>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::repsim {

using numcore::Matrix;

/// Mean over all entries of the squared difference.
double mse(const Matrix& pred, const Matrix& obs);

struct PearsonScore {
    double value = 0.0;            // mean per-column Pearson r
    std::size_t skipped_columns = 0;  // zero-variance columns excluded
};

/// Mean over feature columns of per-column Pearson between pred and obs.
/// Columns where either side is constant are skipped and counted; throws
/// AllColumnsDegenerate when nothing remains.
PearsonScore pearson_score(const Matrix& pred, const Matrix& obs);

/// Linear CKA: ||A^T B||_F^2 / (||A^T A||_F * ||B^T B||_F) after column
/// mean-centering. Row counts must match; column counts may differ.
double cka(const Matrix& a, const Matrix& b);

}  // namespace trajlab::repsim
