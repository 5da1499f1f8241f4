#include "trajlab/ltc/information.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trajlab/errors.hpp"
#include "trajlab/ltc/projection.hpp"

namespace trajlab::ltc {

std::size_t bin_index(double value, double min, double max, std::size_t bins) {
    if (value >= max) return bins - 1;
    const double frac = (value - min) / (max - min);
    const auto idx = static_cast<std::size_t>(frac * static_cast<double>(bins));
    return std::min(idx, bins - 1);
}

double binned_entropy(std::span<const double> values, std::size_t bins) {
    if (bins < 2) {
        throw InvalidConfig("binned_entropy: bins must be >= 2");
    }
    if (values.empty()) {
        throw TooShort("binned_entropy: empty input");
    }
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    if (*min_it == *max_it) return 0.0;
    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        ++counts[bin_index(v, *min_it, *max_it, bins)];
    }
    const double n = static_cast<double>(values.size());
    double entropy = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        if (counts[i] == 0) continue;
        const double p = static_cast<double>(counts[i]) / n;
        entropy += p * (0.0 - std::log(p));
    }
    return entropy;
}

MiResult mutual_info(const Matrix& x_states, const Matrix& final_states, std::size_t bins) {
    if (x_states.rows() != final_states.rows()) {
        throw LengthMismatch("mutual_info: sample counts " + std::to_string(x_states.rows()) +
                             " vs " + std::to_string(final_states.rows()));
    }
    if (x_states.rows() < 4) {
        throw TooShort("mutual_info: need at least 4 samples");
    }
    if (bins < 2) {
        throw InvalidConfig("mutual_info: bins must be >= 2");
    }

    MiResult result;
    result.bins = bins;

    auto project = [&](const Matrix& states, std::vector<double>& out) {
        try {
            const PrincipalAxes axes = principal_axes(states, 1);
            out = project_rows_first_axis(axes, states);
        } catch (const DegenerateVariance&) {
            return false;
        }
        const auto [lo, hi] = std::minmax_element(out.begin(), out.end());
        return *lo != *hi;
    };

    std::vector<double> px, py;
    if (!project(x_states, px) || !project(final_states, py)) {
        result.degenerate = true;
        return result;  // zero-variance side: MI defined as 0
    }

    const std::size_t n = x_states.rows();
    const auto [x_lo, x_hi] = std::minmax_element(px.begin(), px.end());
    const auto [y_lo, y_hi] = std::minmax_element(py.begin(), py.end());
    std::vector<std::size_t> joint(bins * bins, 0);
    std::vector<std::size_t> mx(bins, 0), my(bins, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t bx = bin_index(px[i], *x_lo, *x_hi, bins);
        const std::size_t by = bin_index(py[i], *y_lo, *y_hi, bins);
        ++joint[bx * bins + by];
        ++mx[bx];
        ++my[by];
    }

    const double total = static_cast<double>(n);
    double mi = 0.0;
    for (std::size_t bx = 0; bx < bins; ++bx) {
        if (mx[bx] == 0) continue;
        const double lpx = std::log(static_cast<double>(mx[bx]) / total);
        for (std::size_t by = 0; by < bins; ++by) {
            const std::size_t c = joint[bx * bins + by];
            if (c == 0) continue;
            const double p = static_cast<double>(c) / total;
            const double lpy = std::log(static_cast<double>(my[by]) / total);
            mi += p * (std::log(p) - lpx - lpy);
        }
    }
    result.value = std::max(0.0, mi);
    return result;
}

}  // namespace trajlab::ltc
