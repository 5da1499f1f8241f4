#include "trajlab/ltc/dra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trajlab/errors.hpp"
#include "trajlab/ltc/projection.hpp"
#include "trajlab/numcore/gaussian.hpp"

namespace trajlab::ltc {

void DraConfig::validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw InvalidConfig("dra: beta must be positive");
    }
    if (!(alpha_penalty > 0.0) || alpha_penalty > 5.0) {
        throw InvalidConfig("dra: alpha_penalty must lie in (0, 5]");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidConfig("dra: epsilon must be positive");
    }
}

DraResult dra_combine(const std::vector<double>& cosines,
                      const std::vector<double>& coherences,
                      const std::vector<double>& kls, const DraConfig& cfg) {
    cfg.validate();
    const std::size_t t = cosines.size();
    if (t < 2) {
        throw TooFewSteps("dra: need at least 2 steps");
    }
    if (coherences.size() != t || kls.size() != t) {
        throw LengthMismatch("dra: per-step series lengths differ");
    }
    const numcore::WeightSchedule weights = numcore::gamma_weights(t, cfg.beta);

    DraResult result;
    result.common_length = t;
    result.steps.resize(t);
    double convex = 0.0, unclamped = 0.0, sum_ws2 = 0.0, sum_w2 = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        DraStep& step = result.steps[i];
        step.cosine = cosines[i];
        step.coherence = coherences[i];
        step.kl = kls[i];
        step.weight = weights[i];
        step.score = step.cosine * step.coherence * std::exp(-cfg.alpha_penalty * step.kl);
        step.score_clamped = cfg.clamp_negative ? std::max(0.0, step.score) : step.score;
        convex += step.weight * step.score_clamped;
        unclamped += step.weight * step.score;
        const double ws = step.weight * step.score_clamped;
        sum_ws2 += ws * ws;
        sum_w2 += step.weight * step.weight;
    }
    result.value_convex = convex;
    result.value_unclamped = unclamped;
    result.value_l2 = convex / std::sqrt(sum_ws2 + sum_w2);
    result.value =
        cfg.normalization == DraNormalization::convex ? result.value_convex : result.value_l2;
    return result;
}

namespace {

struct PreparedSide {
    Trajectory trajectory;
    std::optional<StateEnsemble> ensemble;
};

PreparedSide project_side(const Trajectory& traj, const std::optional<StateEnsemble>& ens,
                          std::size_t target_dim) {
    // basis from the richer point cloud when an ensemble exists
    Matrix stacked;
    if (ens) {
        const std::size_t n = ens->samples();
        stacked = Matrix(ens->length() * n, ens->dim());
        for (std::size_t s = 0; s < ens->length(); ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                std::copy(ens->steps[s].row(i).begin(), ens->steps[s].row(i).end(),
                          stacked.row(s * n + i).begin());
            }
        }
    } else {
        stacked = Matrix(traj.length(), traj.dim());
        for (std::size_t s = 0; s < traj.length(); ++s) {
            std::copy(traj.states[s].begin(), traj.states[s].end(), stacked.row(s).begin());
        }
    }
    const PrincipalAxes axes = principal_axes(stacked, target_dim);

    PreparedSide out;
    out.trajectory.axis = traj.axis;
    out.trajectory.step_labels = traj.step_labels;
    for (const auto& state : traj.states) {
        out.trajectory.states.push_back(project_state(axes, state));
    }
    if (ens) {
        StateEnsemble projected;
        for (const auto& step : ens->steps) {
            Matrix p(step.rows(), axes.components());
            for (std::size_t i = 0; i < step.rows(); ++i) {
                const auto coords = project_state(axes, step.row(i));
                std::copy(coords.begin(), coords.end(), p.row(i).begin());
            }
            projected.steps.push_back(std::move(p));
        }
        out.ensemble = std::move(projected);
    }
    return out;
}

}  // namespace

DraResult dra(const TrajectoryBundle& e, const TrajectoryBundle& l, const DraConfig& cfg) {
    cfg.validate();
    e.trajectory.validate();
    l.trajectory.validate();

    // common length: resample the shorter onto the longer grid
    const std::size_t t = std::max(e.trajectory.length(), l.trajectory.length());
    PreparedSide se{resample_trajectory(e.trajectory, t),
                    e.ensemble ? std::optional<StateEnsemble>(resample_ensemble(*e.ensemble, t))
                               : std::nullopt};
    PreparedSide sl{resample_trajectory(l.trajectory, t),
                    l.ensemble ? std::optional<StateEnsemble>(resample_ensemble(*l.ensemble, t))
                               : std::nullopt};

    // common dimension
    std::string mapping = "identity";
    std::size_t dim = se.trajectory.dim();
    const bool dims_differ = se.trajectory.dim() != sl.trajectory.dim();
    const bool forced = cfg.common_dim != 0 &&
                        (cfg.common_dim < se.trajectory.dim() ||
                         cfg.common_dim < sl.trajectory.dim());
    if (dims_differ || forced) {
        std::size_t target = cfg.common_dim != 0
                                 ? cfg.common_dim
                                 : std::min(se.trajectory.dim(), sl.trajectory.dim());
        target = std::min({target, se.trajectory.dim(), sl.trajectory.dim()});
        target = std::max<std::size_t>(1, target);
        se = project_side(se.trajectory, se.ensemble, target);
        sl = project_side(sl.trajectory, sl.ensemble, target);
        // principal_axes may cap the rank further; align both sides on the min
        const std::size_t got = std::min(se.trajectory.dim(), sl.trajectory.dim());
        if (se.trajectory.dim() != got) se = project_side(se.trajectory, se.ensemble, got);
        if (sl.trajectory.dim() != got) sl = project_side(sl.trajectory, sl.ensemble, got);
        mapping = "pca";
        dim = got;
    }

    const bool use_ensembles = se.ensemble.has_value() && sl.ensemble.has_value();

    std::vector<double> cosines(t), coherences(t), kls(t);
    for (std::size_t i = 0; i < t; ++i) {
        const auto& es = se.trajectory.states[i];
        const auto& ls = sl.trajectory.states[i];
        double dot = 0.0, ne = 0.0, nl = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            dot += es[k] * ls[k];
            ne += es[k] * es[k];
            nl += ls[k] * ls[k];
        }
        if (ne == 0.0 || nl == 0.0) {
            throw ZeroState("dra: zero state at step " + std::to_string(i));
        }
        cosines[i] = std::clamp(dot / std::sqrt(ne * nl), -1.0, 1.0);

        // delta at the first step reuses the second step's difference
        const std::size_t hi = i == 0 ? 1 : i;
        double ddot = 0.0, nde = 0.0, ndl = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double de = se.trajectory.states[hi][k] - se.trajectory.states[hi - 1][k];
            const double dl = sl.trajectory.states[hi][k] - sl.trajectory.states[hi - 1][k];
            ddot += de * dl;
            nde += de * de;
            ndl += dl * dl;
        }
        coherences[i] = ddot / (std::sqrt(nde) * std::sqrt(ndl) + cfg.epsilon);

        if (use_ensembles) {
            const auto p = numcore::GaussianSummary::from_samples(se.ensemble->steps[i], true);
            const auto q = numcore::GaussianSummary::from_samples(sl.ensemble->steps[i], true);
            kls[i] = numcore::gaussian_kl(p, q);
        } else {
            const auto p = numcore::GaussianSummary::spherical(es);
            const auto q = numcore::GaussianSummary::spherical(ls);
            kls[i] = numcore::gaussian_kl(p, q);
        }
    }

    DraResult result = dra_combine(cosines, coherences, kls, cfg);
    result.common_dim = dim;
    result.mapping = mapping;
    return result;
}

DraResult dra(const Trajectory& e, const Trajectory& l, const DraConfig& cfg) {
    return dra(TrajectoryBundle{e, std::nullopt}, TrajectoryBundle{l, std::nullopt}, cfg);
}

}  // namespace trajlab::ltc
