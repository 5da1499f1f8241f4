#pragma once

#include <cstddef>
#include <span>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::ltc {

using numcore::Matrix;

struct MiResult {
    double value = 0.0;  // nats
    std::size_t bins = 0;
    bool degenerate = false;  // a zero-variance side forced the value to 0
};

/// Discrete mutual information between two state matrices: each side is
/// projected onto its first principal component, discretized into `bins`
/// equal-width bins over its observed range, and the joint-histogram MI sum
/// is evaluated in nats. A zero-variance side makes the result 0 with
/// `degenerate` set instead of failing.
MiResult mutual_info(const Matrix& x_states, const Matrix& final_states, std::size_t bins);

/// Entropy of the same equal-width binning, for the I(X, X) = H(X) identity.
double binned_entropy(std::span<const double> values, std::size_t bins);

/// Equal-width bin index in [0, bins): values at the top edge fall into the
/// last bin.
std::size_t bin_index(double value, double min, double max, std::size_t bins);

}  // namespace trajlab::ltc
