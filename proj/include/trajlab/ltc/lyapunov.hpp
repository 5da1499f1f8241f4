#pragma once

#include <cstddef>
#include <span>

namespace trajlab::ltc {

struct LyapunovOptions {
    std::size_t embed_dim = 2;    // delay-embedding dimension
    std::size_t lag = 1;          // delay between embedding coordinates
    std::size_t theiler = 1;      // exclude neighbors with |i - j| <= theiler
    std::size_t max_horizon = 12; // longest divergence step tracked
    std::size_t fit_points = 9;   // curve points entering the slope fit
};

/// Largest-Lyapunov estimate (nats per step) via nearest-neighbor divergence:
/// the series is delay-embedded, each point is paired with its nearest
/// neighbor outside the Theiler window, and the slope of the mean
/// log-distance growth curve over its initial points is fitted by least
/// squares. A series whose embedded points all coincide has no observable
/// divergence and returns 0. Throws TooShort below 8 samples and
/// NoValidPairs when no usable divergence curve exists.
double lyapunov_exponent(std::span<const double> series,
                         const LyapunovOptions& options = {});

}  // namespace trajlab::ltc
