#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::repsim {

using numcore::Matrix;
using numcore::Tensor3;

/// Channel x time-bin map of across-sample correlations; feeds topographic
/// rendering downstream.
struct STCorrelationMap {
    std::vector<std::string> channels;
    std::vector<std::string> time_bins;
    Matrix values;  // c x t, zero where skipped
    std::vector<std::pair<std::size_t, std::size_t>> skipped;  // (channel, bin)
};

/// values[c][t] = Pearson across samples of obs[.][c][t] vs pred[.][c][t].
/// Cells where either side is constant are reported in `skipped` and left 0.
STCorrelationMap st_correlation(const Tensor3& obs_epochs, const Tensor3& pred_epochs,
                                std::vector<std::string> channel_labels = {});

/// Channel-by-channel Pearson within one sliding window.
struct ConnectivityMatrix {
    std::vector<std::string> channels;
    std::size_t window_start = 0;  // sample index of first in-window time point
    std::size_t window_end = 0;    // one past the last in-window time point
    Matrix values;                 // c x c, symmetric, unit diagonal
    std::vector<std::size_t> skipped_channels;  // zero variance inside the window
};

/// Correlations over pooled (sample, in-window time) observations for each
/// window position. Windows tile [0, T) at the given stride; a final partial
/// window is dropped.
std::vector<ConnectivityMatrix> functional_connectivity(
    const Tensor3& epochs, std::size_t window, std::size_t stride,
    std::vector<std::string> channel_labels = {});

}  // namespace trajlab::repsim
