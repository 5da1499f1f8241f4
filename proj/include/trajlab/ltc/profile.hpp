#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trajlab/ltc/trajectory.hpp"

namespace trajlab::ltc {

struct ProfileOptions {
    double entropy_alpha = 1.0;
    double epsilon = 1e-8;
    std::size_t mi_bins = 0;  // 0 = ceil(sqrt(samples))
};

/// Per-step dynamic series plus scalar descriptors of one trajectory.
/// magnitude/angle series have length L (transitions); entropy, confidence
/// and MI series have length L + 1 (states). Undefined scalars (constant
/// data, too few steps) are left empty rather than faked.
struct TrajectoryProfile {
    TrajectoryAxis axis = TrajectoryAxis::time;
    std::vector<std::string> step_labels;

    std::vector<double> step_magnitudes;
    std::vector<double> step_angles;  // NaN where a zero state leaves it undefined
    double magnitude_index = 0.0;     // normalized mean step magnitude
    double angle_index = 0.0;
    double z_mag = 0.0;
    double z_ang = 0.0;

    std::vector<double> entropy_series;     // nats
    std::vector<double> confidence_series;  // (0, 1], max exactly 1
    std::vector<double> mi_series;          // nats, vs the final state

    std::optional<double> skewness;         // pooled state values
    std::optional<double> excess_kurtosis;
    std::optional<double> lyapunov;         // nats per step, on the PCA-1 series
    bool lyapunov_low_confidence = false;   // fewer than 32 steps

    std::vector<double> pca1;  // per-step PCA-1 coordinates

    bool ensemble_based = false;
    std::size_t ensemble_samples = 0;
    std::size_t mi_bins = 0;
    double entropy_alpha = 1.0;
    double epsilon = 1e-8;
    std::vector<std::size_t> zero_state_steps;
    std::vector<std::string> degeneracies;
    // heuristic annotation: step index of the largest absolute change
    std::map<std::string, std::size_t> max_delta_step;
};

TrajectoryProfile build_profile(const TrajectoryBundle& bundle,
                                const ProfileOptions& options = {});

/// Per-metric Pearson alignment between two profiles (series resampled to a
/// common length by linear interpolation) plus signed scalar differences
/// (first argument minus second). Constant series leave the alignment unset.
struct AlignmentProfile {
    std::optional<double> entropy;
    std::optional<double> confidence;
    std::optional<double> magnitude;
    std::optional<double> angle;
    std::optional<double> mi;
    std::optional<double> delta_skewness;
    std::optional<double> delta_kurtosis;
    std::optional<double> delta_lyapunov;
};

AlignmentProfile align_profiles(const TrajectoryProfile& a, const TrajectoryProfile& b);

/// One PCA-1 coordinate per step: states stacked and mean-centered, projected
/// on the first principal axis, sign fixed so the last step's coordinate is
/// >= the first's. The ensemble overload projects every sample and averages
/// per step. Throws DegenerateVariance when all states coincide.
std::vector<double> pca_trajectory(const Trajectory& trajectory);
std::vector<double> pca_trajectory(const StateEnsemble& ensemble);

}  // namespace trajlab::ltc
