#include "trajlab/numcore/weights.hpp"

#include <algorithm>
#include <cmath>

#include "trajlab/errors.hpp"

namespace trajlab::numcore {

WeightSchedule gamma_weights(std::size_t steps, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw InvalidBeta("gamma_weights: beta must be positive and finite");
    }
    if (steps == 0) {
        throw TooFewSteps("gamma_weights: steps must be >= 1");
    }
    std::vector<double> log_w(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i + 1);
        log_w[i] = (beta - 1.0) * std::log(t) - t;
    }
    const double max_log = *std::max_element(log_w.begin(), log_w.end());
    WeightSchedule schedule;
    schedule.weights.resize(steps);
    long double total = 0.0L;
    for (std::size_t i = 0; i < steps; ++i) {
        schedule.weights[i] = std::exp(log_w[i] - max_log);
        total += schedule.weights[i];
    }
    for (auto& w : schedule.weights) {
        w = static_cast<double>(w / total);
    }
    return schedule;
}

}  // namespace trajlab::numcore
