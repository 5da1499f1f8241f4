#include "trajlab/ltc/lyapunov.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "trajlab/errors.hpp"

namespace trajlab::ltc {

double lyapunov_exponent(std::span<const double> series, const LyapunovOptions& options) {
    const std::size_t n = series.size();
    if (n < 8) {
        throw TooShort("lyapunov_exponent: need at least 8 samples, got " +
                       std::to_string(n));
    }
    if (options.embed_dim < 1 || options.lag < 1) {
        throw InvalidConfig("lyapunov_exponent: embed_dim and lag must be >= 1");
    }
    const std::size_t span_len = (options.embed_dim - 1) * options.lag;
    if (span_len + 2 > n) {
        throw TooShort("lyapunov_exponent: series shorter than the embedding span");
    }
    const std::size_t m = n - span_len;  // number of embedded points

    auto dist2 = [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t k = 0; k < options.embed_dim; ++k) {
            const double d = series[a + k * options.lag] - series[b + k * options.lag];
            s += d * d;
        }
        return s;
    };

    // horizon short enough that at least one pair can survive it end to end
    std::size_t horizon = std::min(options.max_horizon, options.fit_points - 1);
    if (m < options.theiler + 3) {
        throw NoValidPairs("lyapunov_exponent: Theiler window excludes every pair");
    }
    horizon = std::min(horizon, m - 2 - options.theiler);
    if (horizon < 1) {
        throw NoValidPairs("lyapunov_exponent: no room for a divergence horizon");
    }

    // nearest neighbor outside the Theiler window. Only pairs alive for the
    // whole horizon are used, so the averaged population is the same at every
    // k and baseline attrition cannot bias the slope. Zero starting distances
    // carry no divergence information and are skipped.
    std::vector<std::ptrdiff_t> neighbor(m, -1);
    const std::size_t last_start = m - 1 - horizon;
    for (std::size_t i = 0; i <= last_start; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j <= last_start; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap <= options.theiler) continue;
            const double d2 = dist2(i, j);
            if (d2 > 0.0 && d2 < best) {
                best = d2;
                neighbor[i] = static_cast<std::ptrdiff_t>(j);
            }
        }
    }

    // mean log-distance divergence curve over the fixed pair set
    std::vector<double> curve;
    for (std::size_t k = 0; k <= horizon; ++k) {
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i <= last_start; ++i) {
            if (neighbor[i] < 0) continue;
            const std::size_t j = static_cast<std::size_t>(neighbor[i]);
            const double d2 = dist2(i + k, j + k);
            if (d2 <= 0.0) continue;
            sum += 0.5 * std::log(d2);
            ++count;
        }
        if (count == 0) break;
        curve.push_back(sum / static_cast<double>(count));
    }
    if (curve.empty()) {
        // every admissible pair coincides everywhere: flat series
        return 0.0;
    }
    const std::size_t points = curve.size();
    if (points < 2) {
        throw NoValidPairs("lyapunov_exponent: divergence curve too short to fit");
    }

    // least-squares slope over curve[0 .. points-1]
    double mean_k = 0.0, mean_v = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        mean_k += static_cast<double>(k);
        mean_v += curve[k];
    }
    mean_k /= static_cast<double>(points);
    mean_v /= static_cast<double>(points);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        const double dk = static_cast<double>(k) - mean_k;
        num += dk * (curve[k] - mean_v);
        den += dk * dk;
    }
    return num / den;
}

}  // namespace trajlab::ltc
