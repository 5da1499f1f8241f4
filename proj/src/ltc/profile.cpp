#include "trajlab/ltc/profile.hpp"

#include <algorithm>
#include <cmath>

#include "trajlab/errors.hpp"
#include "trajlab/ltc/dynamics.hpp"
#include "trajlab/ltc/entropy.hpp"
#include "trajlab/ltc/information.hpp"
#include "trajlab/ltc/lyapunov.hpp"
#include "trajlab/ltc/projection.hpp"
#include "trajlab/numcore/stats.hpp"

namespace trajlab::ltc {

namespace {

std::vector<double> pca_series_from_stack(const Matrix& stacked, std::size_t steps,
                                          std::size_t samples_per_step) {
    const PrincipalAxes axes = principal_axes(stacked, 1);
    const std::vector<double> proj = project_rows_first_axis(axes, stacked);
    std::vector<double> series(steps, 0.0);
    for (std::size_t s = 0; s < steps; ++s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < samples_per_step; ++i) {
            sum += proj[s * samples_per_step + i];
        }
        series[s] = sum / static_cast<double>(samples_per_step);
    }
    if (series.back() < series.front()) {
        for (auto& v : series) v = -v;
    }
    return series;
}

std::size_t arg_max_abs_delta(const std::vector<double>& series) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        if (std::isnan(series[i]) || std::isnan(series[i + 1])) continue;
        const double d = std::abs(series[i + 1] - series[i]);
        if (d > best) {
            best = d;
            arg = i + 1;
        }
    }
    return arg;
}

}  // namespace

std::vector<double> pca_trajectory(const Trajectory& trajectory) {
    trajectory.validate();
    Matrix stacked(trajectory.length(), trajectory.dim());
    for (std::size_t s = 0; s < trajectory.length(); ++s) {
        std::copy(trajectory.states[s].begin(), trajectory.states[s].end(),
                  stacked.row(s).begin());
    }
    return pca_series_from_stack(stacked, trajectory.length(), 1);
}

std::vector<double> pca_trajectory(const StateEnsemble& ensemble) {
    ensemble.validate();
    const std::size_t n = ensemble.samples();
    Matrix stacked(ensemble.length() * n, ensemble.dim());
    for (std::size_t s = 0; s < ensemble.length(); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            std::copy(ensemble.steps[s].row(i).begin(), ensemble.steps[s].row(i).end(),
                      stacked.row(s * n + i).begin());
        }
    }
    return pca_series_from_stack(stacked, ensemble.length(), n);
}

TrajectoryProfile build_profile(const TrajectoryBundle& bundle,
                                const ProfileOptions& options) {
    const Trajectory& traj = bundle.trajectory;
    traj.validate();
    if (bundle.ensemble) bundle.ensemble->validate();

    TrajectoryProfile profile;
    profile.axis = traj.axis;
    profile.step_labels = traj.step_labels;
    profile.entropy_alpha = options.entropy_alpha;
    profile.epsilon = options.epsilon;
    profile.ensemble_based = bundle.ensemble.has_value();
    profile.ensemble_samples = bundle.ensemble ? bundle.ensemble->samples() : 0;

    const StepDynamics dyn = step_dynamics(traj);
    profile.step_magnitudes = dyn.magnitudes;
    profile.step_angles = dyn.angles;
    profile.zero_state_steps = dyn.zero_state_steps;
    if (!dyn.zero_state_steps.empty()) {
        profile.degeneracies.push_back("angle undefined at zero states");
    }
    const NormalizedDynamics norm = normalized_dynamics(traj);
    profile.magnitude_index = norm.magnitude;
    profile.angle_index = norm.angle;
    profile.z_mag = norm.z_mag;
    profile.z_ang = norm.z_ang;

    const std::size_t steps = traj.length();
    profile.entropy_series.resize(steps, 0.0);
    for (std::size_t s = 0; s < steps; ++s) {
        Matrix z = bundle.ensemble
                       ? bundle.ensemble->steps[s]
                       : Matrix(1, traj.dim(),
                                std::vector<double>(traj.states[s].begin(),
                                                    traj.states[s].end()));
        try {
            profile.entropy_series[s] = matrix_entropy(z, options.entropy_alpha);
        } catch (const ZeroTrace&) {
            profile.entropy_series[s] = 0.0;
            profile.degeneracies.push_back("entropy zero-trace at step " +
                                           std::to_string(s));
        }
    }
    profile.confidence_series = confidence_series(profile.entropy_series, options.epsilon);

    if (bundle.ensemble) {
        const std::size_t n = bundle.ensemble->samples();
        profile.mi_bins = options.mi_bins != 0
                              ? options.mi_bins
                              : static_cast<std::size_t>(
                                    std::ceil(std::sqrt(static_cast<double>(n))));
        profile.mi_bins = std::max<std::size_t>(2, profile.mi_bins);
        profile.mi_series.resize(steps, 0.0);
        const Matrix& final_states = bundle.ensemble->steps.back();
        for (std::size_t s = 0; s < steps; ++s) {
            const MiResult mi =
                mutual_info(bundle.ensemble->steps[s], final_states, profile.mi_bins);
            profile.mi_series[s] = mi.value;
            if (mi.degenerate) {
                profile.degeneracies.push_back("mi degenerate at step " + std::to_string(s));
            }
        }
    } else {
        profile.mi_series.assign(steps, 0.0);
        profile.degeneracies.push_back("mi requires an ensemble; series left at 0");
    }

    // pooled-value moments: feature asymmetry and peakedness
    {
        std::vector<double> pooled;
        if (bundle.ensemble) {
            for (const auto& step : bundle.ensemble->steps) {
                pooled.insert(pooled.end(), step.values().begin(), step.values().end());
            }
        } else {
            for (const auto& state : traj.states) {
                pooled.insert(pooled.end(), state.begin(), state.end());
            }
        }
        try {
            const auto m = numcore::moments(pooled);
            profile.skewness = m.skewness;
            profile.excess_kurtosis = m.excess_kurtosis;
        } catch (const DataError&) {
            profile.degeneracies.push_back("moments undefined on pooled values");
        }
    }

    try {
        profile.pca1 = bundle.ensemble ? pca_trajectory(*bundle.ensemble)
                                       : pca_trajectory(traj);
    } catch (const DegenerateVariance&) {
        profile.pca1.assign(steps, 0.0);
        profile.degeneracies.push_back("pca1 undefined: constant trajectory");
    }

    profile.lyapunov_low_confidence = steps < 32;
    if (steps >= 8) {
        try {
            profile.lyapunov = lyapunov_exponent(profile.pca1);
        } catch (const DataError&) {
            profile.degeneracies.push_back("lyapunov estimate unavailable");
        }
    } else {
        profile.degeneracies.push_back("lyapunov needs >= 8 steps");
    }

    profile.max_delta_step = {
        {"magnitude", arg_max_abs_delta(profile.step_magnitudes)},
        {"angle", arg_max_abs_delta(profile.step_angles)},
        {"entropy", arg_max_abs_delta(profile.entropy_series)},
        {"confidence", arg_max_abs_delta(profile.confidence_series)},
        {"mi", arg_max_abs_delta(profile.mi_series)},
    };
    return profile;
}

namespace {

std::optional<double> series_alignment(const std::vector<double>& a,
                                       const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2) return std::nullopt;
    // drop undefined entries pairwise after resampling
    const std::size_t len = std::max(a.size(), b.size());
    const auto ra = resample_series(a, len);
    const auto rb = resample_series(b, len);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < len; ++i) {
        if (std::isnan(ra[i]) || std::isnan(rb[i])) continue;
        xs.push_back(ra[i]);
        ys.push_back(rb[i]);
    }
    if (xs.size() < 2) return std::nullopt;
    try {
        return numcore::pearson(xs, ys);
    } catch (const ZeroVariance&) {
        return std::nullopt;  // constant series: alignment undefined
    }
}

std::optional<double> difference(const std::optional<double>& a,
                                 const std::optional<double>& b) {
    if (!a || !b) return std::nullopt;
    return *a - *b;
}

}  // namespace

AlignmentProfile align_profiles(const TrajectoryProfile& a, const TrajectoryProfile& b) {
    AlignmentProfile out;
    out.magnitude = series_alignment(a.step_magnitudes, b.step_magnitudes);
    out.angle = series_alignment(a.step_angles, b.step_angles);
    out.entropy = series_alignment(a.entropy_series, b.entropy_series);
    out.confidence = series_alignment(a.confidence_series, b.confidence_series);
    out.mi = series_alignment(a.mi_series, b.mi_series);
    out.delta_skewness = difference(a.skewness, b.skewness);
    out.delta_kurtosis = difference(a.excess_kurtosis, b.excess_kurtosis);
    out.delta_lyapunov = difference(a.lyapunov, b.lyapunov);
    return out;
}

}  // namespace trajlab::ltc
