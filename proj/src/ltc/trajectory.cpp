#include "trajlab/ltc/trajectory.hpp"

#include <cmath>
#include <string>

#include "trajlab/errors.hpp"

namespace trajlab::ltc {

void Trajectory::validate() const {
    if (states.size() < 2) {
        throw TooFewSteps("Trajectory needs at least 2 states");
    }
    const std::size_t d = states.front().size();
    if (d == 0) {
        throw DimensionMismatch("Trajectory states must be nonempty");
    }
    for (const auto& s : states) {
        if (s.size() != d) {
            throw DimensionMismatch("Trajectory states have mixed dimensions");
        }
        for (double v : s) {
            if (!std::isfinite(v)) {
                throw NonFiniteInput("Trajectory state entry is not finite");
            }
        }
    }
    if (!step_labels.empty() && step_labels.size() != states.size()) {
        throw DimMismatch("Trajectory step label count");
    }
}

void StateEnsemble::validate() const {
    if (steps.size() < 2) {
        throw TooFewSteps("StateEnsemble needs at least 2 steps");
    }
    const std::size_t n = steps.front().rows();
    const std::size_t d = steps.front().cols();
    if (n < 2) {
        throw TooShort("StateEnsemble needs at least 2 samples per step");
    }
    for (const auto& m : steps) {
        if (m.rows() != n || m.cols() != d) {
            throw DimensionMismatch("StateEnsemble steps have mixed shapes");
        }
    }
}

namespace {

std::vector<double> mean_state(const Matrix& samples) {
    return samples.column_means();
}

std::size_t window_steps(std::size_t total, const WindowSpec& spec) {
    if (spec.window == 0 || spec.stride == 0) {
        throw InvalidConfig("window and stride must be >= 1");
    }
    if (spec.window > total) {
        throw WindowTooLarge("window " + std::to_string(spec.window) + " for " +
                             std::to_string(total) + " time points");
    }
    return (total - spec.window) / spec.stride + 1;
}

}  // namespace

TrajectoryBundle build_trajectory(const EmbeddingTensor& embeddings, ReduceMode reduce) {
    embeddings.validate();
    if (embeddings.layers() < 2) {
        throw TooFewSteps("layer trajectory needs at least 2 layers");
    }
    TrajectoryBundle bundle;
    bundle.trajectory.axis = TrajectoryAxis::layer;
    StateEnsemble ensemble;
    for (std::size_t l = 0; l < embeddings.layers(); ++l) {
        Matrix layer = embeddings.layer_matrix(l);
        bundle.trajectory.states.push_back(mean_state(layer));
        bundle.trajectory.step_labels.push_back(
            embeddings.layer_names.empty() ? "layer" + std::to_string(l)
                                           : embeddings.layer_names[l]);
        if (reduce == ReduceMode::sample) {
            ensemble.steps.push_back(std::move(layer));
        }
    }
    bundle.trajectory.validate();
    if (reduce == ReduceMode::sample) {
        ensemble.validate();
        bundle.ensemble = std::move(ensemble);
    }
    return bundle;
}

TrajectoryBundle build_trajectory(const SignalEpochs& epochs, const WindowSpec& spec,
                                  ReduceMode reduce) {
    epochs.validate();
    const std::size_t steps = window_steps(epochs.time_points(), spec);
    if (steps < 2) {
        throw TooFewSteps("time trajectory needs at least 2 windows");
    }
    const std::size_t n = epochs.samples();
    const std::size_t c = epochs.channels();

    TrajectoryBundle bundle;
    bundle.trajectory.axis = TrajectoryAxis::time;
    StateEnsemble ensemble;
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t start = s * spec.stride;
        Matrix step_states(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t ch = 0; ch < c; ++ch) {
                double sum = 0.0;
                for (std::size_t t = start; t < start + spec.window; ++t) {
                    sum += epochs.data(i, ch, t);
                }
                step_states(i, ch) = sum / static_cast<double>(spec.window);
            }
        }
        bundle.trajectory.states.push_back(mean_state(step_states));
        bundle.trajectory.step_labels.push_back("w" + std::to_string(s));
        if (reduce == ReduceMode::sample) {
            ensemble.steps.push_back(std::move(step_states));
        }
    }
    bundle.trajectory.validate();
    if (reduce == ReduceMode::sample) {
        ensemble.validate();
        bundle.ensemble = std::move(ensemble);
    }
    return bundle;
}

TrajectoryBundle build_trajectory(const SignalMatrix& signal, const WindowSpec& spec,
                                  ReduceMode reduce) {
    signal.validate();
    // single synthetic channel over the feature axis
    SignalEpochs epochs;
    epochs.data = numcore::Tensor3(
        signal.samples(), 1, signal.features(),
        std::vector<double>(signal.data.values().begin(), signal.data.values().end()));
    epochs.sample_ids = signal.sample_ids;
    epochs.channel_labels = {"signal"};
    return build_trajectory(epochs, spec, reduce);
}

std::vector<double> resample_series(const std::vector<double>& series,
                                    std::size_t target_len) {
    if (series.empty() || target_len == 0) {
        throw TooFewSteps("resample_series: empty input or target");
    }
    if (series.size() == target_len) return series;
    if (series.size() == 1) return std::vector<double>(target_len, series.front());
    std::vector<double> out(target_len);
    const double scale = static_cast<double>(series.size() - 1) /
                         static_cast<double>(target_len - 1 == 0 ? 1 : target_len - 1);
    for (std::size_t j = 0; j < target_len; ++j) {
        const double pos = target_len == 1 ? 0.0 : static_cast<double>(j) * scale;
        const std::size_t i0 = std::min(static_cast<std::size_t>(pos), series.size() - 2);
        const double frac = pos - static_cast<double>(i0);
        out[j] = (1.0 - frac) * series[i0] + frac * series[i0 + 1];
    }
    return out;
}

Trajectory resample_trajectory(const Trajectory& traj, std::size_t target_len) {
    traj.validate();
    if (target_len < 2) {
        throw TooFewSteps("resample_trajectory: target length must be >= 2");
    }
    if (traj.length() == target_len) return traj;
    Trajectory out;
    out.axis = traj.axis;
    const std::size_t d = traj.dim();
    const double scale = static_cast<double>(traj.length() - 1) /
                         static_cast<double>(target_len - 1);
    for (std::size_t j = 0; j < target_len; ++j) {
        const double pos = static_cast<double>(j) * scale;
        const std::size_t i0 = std::min(static_cast<std::size_t>(pos), traj.length() - 2);
        const double frac = pos - static_cast<double>(i0);
        std::vector<double> state(d);
        for (std::size_t k = 0; k < d; ++k) {
            state[k] = (1.0 - frac) * traj.states[i0][k] + frac * traj.states[i0 + 1][k];
        }
        out.states.push_back(std::move(state));
        out.step_labels.push_back("r" + std::to_string(j));
    }
    return out;
}

StateEnsemble resample_ensemble(const StateEnsemble& ensemble, std::size_t target_len) {
    ensemble.validate();
    if (target_len < 2) {
        throw TooFewSteps("resample_ensemble: target length must be >= 2");
    }
    if (ensemble.length() == target_len) return ensemble;
    StateEnsemble out;
    const std::size_t n = ensemble.samples();
    const std::size_t d = ensemble.dim();
    const double scale = static_cast<double>(ensemble.length() - 1) /
                         static_cast<double>(target_len - 1);
    for (std::size_t j = 0; j < target_len; ++j) {
        const double pos = static_cast<double>(j) * scale;
        const std::size_t i0 = std::min(static_cast<std::size_t>(pos), ensemble.length() - 2);
        const double frac = pos - static_cast<double>(i0);
        Matrix step(n, d);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                step(i, k) = (1.0 - frac) * ensemble.steps[i0](i, k) +
                             frac * ensemble.steps[i0 + 1](i, k);
            }
        }
        out.steps.push_back(std::move(step));
    }
    return out;
}

}  // namespace trajlab::ltc
