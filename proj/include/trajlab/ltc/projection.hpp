#pragma once

#include <span>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::ltc {

using numcore::Matrix;

/// Column means plus the leading principal axes (columns of `axes`, unit
/// norm) of the row cloud in `stacked`. Axis signs are fixed so the loading
/// with the largest magnitude is positive, keeping projections reproducible.
struct PrincipalAxes {
    std::vector<double> mean;
    Matrix axes;  // D x k

    std::size_t input_dim() const { return mean.size(); }
    std::size_t components() const { return axes.cols(); }
};

/// Throws DegenerateVariance if the rows are all identical. k is clamped to
/// the number of usable components (min(D, rows - 1)).
PrincipalAxes principal_axes(const Matrix& stacked, std::size_t k);

/// Coordinates of `state` in the axes' frame (after mean removal).
std::vector<double> project_state(const PrincipalAxes& axes, std::span<const double> state);

/// One-dimensional shortcut: projection of every row onto the first axis.
std::vector<double> project_rows_first_axis(const PrincipalAxes& axes, const Matrix& rows);

}  // namespace trajlab::ltc
