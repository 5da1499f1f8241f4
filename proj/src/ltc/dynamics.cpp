#include "trajlab/ltc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trajlab/errors.hpp"

namespace trajlab::ltc {

StepDynamics step_dynamics(const Trajectory& trajectory) {
    trajectory.validate();
    const std::size_t steps = trajectory.length() - 1;
    const std::size_t d = trajectory.dim();
    StepDynamics out;
    out.magnitudes.resize(steps);
    out.angles.resize(steps);
    for (std::size_t l = 0; l < steps; ++l) {
        const auto& a = trajectory.states[l];
        const auto& b = trajectory.states[l + 1];
        double diff2 = 0.0, dot = 0.0, na = 0.0, nb = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const double dd = b[k] - a[k];
            diff2 += dd * dd;
            dot += a[k] * b[k];
            na += a[k] * a[k];
            nb += b[k] * b[k];
        }
        out.magnitudes[l] = std::sqrt(diff2);
        if (na == 0.0 || nb == 0.0) {
            out.angles[l] = std::numeric_limits<double>::quiet_NaN();
            out.zero_state_steps.push_back(l);
        } else {
            const double cosine = std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
            out.angles[l] = std::acos(cosine);
        }
    }
    return out;
}

namespace {

NormalizedDynamics combine(const StepDynamics& dyn, double z_mag, double z_ang) {
    NormalizedDynamics out;
    out.z_mag = z_mag;
    out.z_ang = z_ang;
    if (z_mag > 0.0) {
        double sum = 0.0;
        for (double m : dyn.magnitudes) sum += m / z_mag;
        out.magnitude = sum / static_cast<double>(dyn.magnitudes.size());
    }
    if (z_ang > 0.0) {
        double sum = 0.0;
        std::size_t count = 0;
        for (double a : dyn.angles) {
            if (!std::isnan(a)) {
                sum += a / z_ang;
                ++count;
            }
        }
        out.angle = count > 0 ? sum / static_cast<double>(count) : 0.0;
    }
    return out;
}

}  // namespace

NormalizedDynamics normalized_dynamics(const Trajectory& trajectory) {
    const StepDynamics dyn = step_dynamics(trajectory);
    double z_mag = 0.0, z_ang = 0.0;
    for (double m : dyn.magnitudes) z_mag = std::max(z_mag, m);
    for (double a : dyn.angles) {
        if (!std::isnan(a)) z_ang = std::max(z_ang, a);
    }
    return combine(dyn, z_mag, z_ang);
}

NormalizedDynamics normalized_dynamics(const Trajectory& trajectory, double z_mag,
                                       double z_ang) {
    if (z_mag < 0.0 || z_ang < 0.0) {
        throw InvalidConfig("normalized_dynamics: scales must be nonnegative");
    }
    return combine(step_dynamics(trajectory), z_mag, z_ang);
}

}  // namespace trajlab::ltc
