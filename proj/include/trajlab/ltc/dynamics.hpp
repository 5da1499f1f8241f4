#pragma once

#include <cstddef>
#include <vector>

#include "trajlab/ltc/trajectory.hpp"

namespace trajlab::ltc {

/// Per-transition geometry: magnitudes[l] = ||h_{l+1} - h_l||_2 and
/// angles[l] = arccos of the cosine between h_{l+1} and h_l (clamped into
/// [-1, 1] before arccos). When either adjacent state is the zero vector the
/// angle is undefined: that entry is NaN and the step index is recorded in
/// zero_state_steps while the magnitude is still emitted.
struct StepDynamics {
    std::vector<double> magnitudes;
    std::vector<double> angles;
    std::vector<std::size_t> zero_state_steps;
};

StepDynamics step_dynamics(const Trajectory& trajectory);

/// Trajectory-level indices: magnitude = (1/L) sum_l M_l / z_mag with z_mag
/// the per-trajectory maximum step magnitude (angle likewise over defined
/// angles). A zero maximum yields 0. Pass explicit scales to compare across
/// systems with one shared normalization.
struct NormalizedDynamics {
    double magnitude = 0.0;
    double angle = 0.0;
    double z_mag = 0.0;
    double z_ang = 0.0;
};

NormalizedDynamics normalized_dynamics(const Trajectory& trajectory);
NormalizedDynamics normalized_dynamics(const Trajectory& trajectory, double z_mag,
                                       double z_ang);

}  // namespace trajlab::ltc
