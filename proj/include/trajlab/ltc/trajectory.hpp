#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trajlab/encoding/data.hpp"
#include "trajlab/numcore/matrix.hpp"

namespace trajlab::ltc {

using encoding::EmbeddingTensor;
using encoding::SignalEpochs;
using encoding::SignalMatrix;
using numcore::Matrix;

enum class TrajectoryAxis { time, layer };

/// Ordered sequence of states h_0..h_L with uniform dimension.
struct Trajectory {
    std::vector<std::vector<double>> states;
    TrajectoryAxis axis = TrajectoryAxis::time;
    std::vector<std::string> step_labels;

    std::size_t length() const { return states.size(); }
    std::size_t dim() const { return states.empty() ? 0 : states.front().size(); }

    /// >= 2 states, uniform nonzero dimension, finite entries, label count.
    void validate() const;
};

/// Per-step N x D matrices of per-sample states, aligned with a Trajectory.
struct StateEnsemble {
    std::vector<Matrix> steps;

    std::size_t length() const { return steps.size(); }
    std::size_t samples() const { return steps.empty() ? 0 : steps.front().rows(); }
    std::size_t dim() const { return steps.empty() ? 0 : steps.front().cols(); }

    void validate() const;
};

struct TrajectoryBundle {
    Trajectory trajectory;
    std::optional<StateEnsemble> ensemble;
};

enum class ReduceMode { mean, sample };

struct WindowSpec {
    std::size_t window = 0;
    std::size_t stride = 0;
};

/// Layer-axis trajectory: one state per layer. reduce::mean keeps only the
/// across-sample mean states; reduce::sample also carries the ensemble.
TrajectoryBundle build_trajectory(const EmbeddingTensor& embeddings, ReduceMode reduce);

/// Time-axis trajectory over epochs: each step is the per-channel mean of the
/// time points inside one window position.
TrajectoryBundle build_trajectory(const SignalEpochs& epochs, const WindowSpec& spec,
                                  ReduceMode reduce);

/// Time-axis trajectory over a flat signal matrix, treating the feature
/// columns as time points of a single channel (one-dimensional states).
TrajectoryBundle build_trajectory(const SignalMatrix& signal, const WindowSpec& spec,
                                  ReduceMode reduce);

/// Linear interpolation onto `target_len` equally spaced positions.
std::vector<double> resample_series(const std::vector<double>& series,
                                    std::size_t target_len);
Trajectory resample_trajectory(const Trajectory& traj, std::size_t target_len);
StateEnsemble resample_ensemble(const StateEnsemble& ensemble, std::size_t target_len);

}  // namespace trajlab::ltc
