#include "trajlab/repsim/spatiotemporal.hpp"

#include <cmath>
#include <string>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/stats.hpp"

namespace trajlab::repsim {

namespace {

std::vector<std::string> default_channel_labels(std::size_t c) {
    std::vector<std::string> labels;
    labels.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
        labels.push_back("ch" + std::to_string(i));
    }
    return labels;
}

}  // namespace

STCorrelationMap st_correlation(const Tensor3& obs_epochs, const Tensor3& pred_epochs,
                                std::vector<std::string> channel_labels) {
    if (obs_epochs.dim0() != pred_epochs.dim0() || obs_epochs.dim1() != pred_epochs.dim1() ||
        obs_epochs.dim2() != pred_epochs.dim2()) {
        throw ShapeMismatch("st_correlation: epoch tensors differ in shape");
    }
    const std::size_t n = obs_epochs.dim0();
    const std::size_t c = obs_epochs.dim1();
    const std::size_t t = obs_epochs.dim2();
    if (n < 2) {
        throw ShapeMismatch("st_correlation: need at least 2 samples");
    }

    STCorrelationMap map;
    map.channels =
        channel_labels.empty() ? default_channel_labels(c) : std::move(channel_labels);
    if (map.channels.size() != c) {
        throw DimMismatch("st_correlation: channel label count");
    }
    map.time_bins.reserve(t);
    for (std::size_t tb = 0; tb < t; ++tb) map.time_bins.push_back("t" + std::to_string(tb));
    map.values = Matrix(c, t);

    std::vector<double> ov(n), pv(n);
    for (std::size_t ch = 0; ch < c; ++ch) {
        for (std::size_t tb = 0; tb < t; ++tb) {
            for (std::size_t i = 0; i < n; ++i) {
                ov[i] = obs_epochs(i, ch, tb);
                pv[i] = pred_epochs(i, ch, tb);
            }
            try {
                map.values(ch, tb) = numcore::pearson(ov, pv);
            } catch (const ZeroVariance&) {
                map.values(ch, tb) = 0.0;
                map.skipped.emplace_back(ch, tb);
            }
        }
    }
    return map;
}

std::vector<ConnectivityMatrix> functional_connectivity(
    const Tensor3& epochs, std::size_t window, std::size_t stride,
    std::vector<std::string> channel_labels) {
    const std::size_t n = epochs.dim0();
    const std::size_t c = epochs.dim1();
    const std::size_t t = epochs.dim2();
    if (window == 0 || window > t) {
        throw WindowTooLarge("functional_connectivity: window " + std::to_string(window) +
                             " for " + std::to_string(t) + " time points");
    }
    if (stride == 0) {
        throw InvalidConfig("functional_connectivity: stride must be >= 1");
    }
    auto labels = channel_labels.empty() ? default_channel_labels(c) : std::move(channel_labels);
    if (labels.size() != c) {
        throw DimMismatch("functional_connectivity: channel label count");
    }

    std::vector<ConnectivityMatrix> out;
    for (std::size_t start = 0; start + window <= t; start += stride) {
        ConnectivityMatrix cm;
        cm.channels = labels;
        cm.window_start = start;
        cm.window_end = start + window;
        cm.values = Matrix(c, c);

        // pooled (sample, time) observations per channel
        const std::size_t obs_count = n * window;
        Matrix pooled(c, obs_count);
        for (std::size_t ch = 0; ch < c; ++ch) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t tb = start; tb < start + window; ++tb) {
                    pooled(ch, idx++) = epochs(i, ch, tb);
                }
            }
        }
        std::vector<bool> degenerate(c, false);
        for (std::size_t ch = 0; ch < c; ++ch) {
            const auto row = pooled.row(ch);
            bool constant = true;
            for (std::size_t i = 1; i < row.size(); ++i) {
                if (row[i] != row[0]) {
                    constant = false;
                    break;
                }
            }
            if (constant) {
                degenerate[ch] = true;
                cm.skipped_channels.push_back(ch);
            }
        }
        for (std::size_t i = 0; i < c; ++i) {
            cm.values(i, i) = 1.0;
            for (std::size_t j = i + 1; j < c; ++j) {
                double r = 0.0;
                if (!degenerate[i] && !degenerate[j]) {
                    r = numcore::pearson(pooled.row(i), pooled.row(j));
                }
                cm.values(i, j) = r;
                cm.values(j, i) = r;
            }
        }
        out.push_back(std::move(cm));
    }
    return out;
}

}  // namespace trajlab::repsim
