#pragma once

#include <cstddef>
#include <vector>

namespace trajlab::numcore {

/// Nonnegative weights over time steps, normalized to sum 1 within 1e-12.
struct WeightSchedule {
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }
};

/// Gamma(t; beta, 1) density evaluated at t = 1..steps and renormalized:
/// w(t) proportional to t^(beta-1) * exp(-t). Evaluated in log domain so
/// large step counts cannot underflow. Throws InvalidBeta for beta <= 0 and
/// TooFewSteps for steps == 0.
WeightSchedule gamma_weights(std::size_t steps, double beta);

}  // namespace trajlab::numcore
