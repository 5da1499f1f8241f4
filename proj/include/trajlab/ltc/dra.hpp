#pragma once

#include <string>
#include <vector>

#include "trajlab/ltc/trajectory.hpp"
#include "trajlab/numcore/weights.hpp"

namespace trajlab::ltc {

enum class DraNormalization { convex, l2 };

struct DraConfig {
    double beta = 1.0;          // Gamma shape for the step weights
    double alpha_penalty = 1.0; // divergence penalty, in (0, 5]
    double epsilon = 1e-8;
    DraNormalization normalization = DraNormalization::convex;
    bool clamp_negative = true;
    std::size_t common_dim = 0;  // 0 = auto (min of both dims, capped by rank)

    void validate() const;
};

struct DraStep {
    double cosine = 0.0;     // cos(E_t, L_t) in the common space
    double coherence = 0.0;  // <dE, dL> / (|dE| |dL| + eps)
    double kl = 0.0;         // KL(P_t || Q_t)
    double weight = 0.0;     // Gamma step weight
    double score = 0.0;      // cosine * coherence * exp(-alpha * kl)
    double score_clamped = 0.0;
};

struct DraResult {
    double value = 0.0;            // under the configured normalization
    double value_convex = 0.0;     // sum_t w_t * clamped score, in [0, 1]
    double value_l2 = 0.0;         // convex sum / sqrt(sum (w s)^2 + sum w^2)
    double value_unclamped = 0.0;  // convex sum without clamping (diagnostic)
    std::vector<DraStep> steps;
    std::size_t common_length = 0;
    std::size_t common_dim = 0;
    std::string mapping;  // "identity" or "pca"
};

/// Combines per-step cosines, coherences and KL values into the DRA score.
/// This is the normalization-and-weighting core of the metric, exposed so
/// its order properties can be tested directly.
DraResult dra_combine(const std::vector<double>& cosines,
                      const std::vector<double>& coherences,
                      const std::vector<double>& kls, const DraConfig& cfg);

/// Full metric between two trajectories. The shorter trajectory is linearly
/// resampled to the longer length. When dimensions differ (or common_dim
/// forces it) both sides are projected onto their own leading principal
/// axes of a shared dimension; otherwise states are compared as-is. Step
/// deltas use the second step's difference at t = 1. Per-step Gaussians come
/// from the ensembles (diagonal covariance) when both are provided and are
/// identity-covariance otherwise, which reduces the KL term to half the
/// squared mean distance. Throws ZeroState if any compared state is zero.
DraResult dra(const TrajectoryBundle& e, const TrajectoryBundle& l, const DraConfig& cfg);
DraResult dra(const Trajectory& e, const Trajectory& l, const DraConfig& cfg);

}  // namespace trajlab::ltc
