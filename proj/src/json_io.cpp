#include "trajlab/json_io.hpp"

#include <cmath>

namespace trajlab {

namespace {

using nlohmann::json;

json number_or_null(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

json optional_number(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

json series_json(const std::vector<double>& series) {
    json out = json::array();
    for (double v : series) out.push_back(number_or_null(v));
    return out;
}

}  // namespace

json to_json(const encoding::EncodingReport& report) {
    json j;
    j["config"] = {
        {"outer_folds", report.config.outer_folds},
        {"inner_folds", report.config.inner_folds},
        {"alpha_grid", report.config.alpha_grid},
        {"seed", report.config.seed},
    };
    j["folds"] = report.folds;
    json cells = json::array();
    for (const auto& c : report.cells) {
        cells.push_back({
            {"layer", c.layer},
            {"fold", c.fold},
            {"alpha", c.alpha},
            {"mse", c.mse},
            {"r", c.mean_r},
            {"skipped_columns", c.skipped_columns},
            {"rsa", c.rsa_valid ? json(c.rsa) : json(nullptr)},
            {"cka", c.cka_valid ? json(c.cka) : json(nullptr)},
        });
    }
    j["cells"] = std::move(cells);
    json layers = json::array();
    for (const auto& l : report.layers) {
        layers.push_back({
            {"layer", l.layer},
            {"mse", l.mse},
            {"r", l.mean_r},
            {"rsa", l.rsa_valid ? json(l.rsa) : json(nullptr)},
            {"cka", l.cka_valid ? json(l.cka) : json(nullptr)},
        });
    }
    j["layers"] = std::move(layers);
    j["best_layer"] = report.best_layer;
    return j;
}

json to_json(const ltc::TrajectoryProfile& profile) {
    json j;
    j["axis"] = profile.axis == ltc::TrajectoryAxis::time ? "time" : "layer";
    j["step_labels"] = profile.step_labels;
    j["series"] = {
        {"magnitude", series_json(profile.step_magnitudes)},
        {"angle", series_json(profile.step_angles)},
        {"entropy", series_json(profile.entropy_series)},
        {"confidence", series_json(profile.confidence_series)},
        {"mi", series_json(profile.mi_series)},
    };
    j["magnitude_index"] = profile.magnitude_index;
    j["angle_index"] = profile.angle_index;
    j["z_mag"] = profile.z_mag;
    j["z_ang"] = profile.z_ang;
    j["skewness"] = optional_number(profile.skewness);
    j["excess_kurtosis"] = optional_number(profile.excess_kurtosis);
    j["lyapunov"] = optional_number(profile.lyapunov);
    j["lyapunov_low_confidence"] = profile.lyapunov_low_confidence;
    j["pca1"] = series_json(profile.pca1);
    j["estimators"] = {
        {"entropy_alpha", profile.entropy_alpha},
        {"epsilon", profile.epsilon},
        {"mi_bins", profile.mi_bins},
        {"mi_estimator", "pca1-equal-width-histogram"},
        {"lyapunov_estimator", "nearest-neighbor-divergence-embed2-lag1"},
        {"normalization", "per-trajectory-max"},
        {"ensemble_based", profile.ensemble_based},
        {"ensemble_samples", profile.ensemble_samples},
    };
    j["zero_state_steps"] = profile.zero_state_steps;
    j["degeneracies"] = profile.degeneracies;
    // heuristic annotation only: the step with the largest absolute change
    j["max_delta_step"] = profile.max_delta_step;
    return j;
}

json to_json(const ltc::AlignmentProfile& alignment) {
    json j;
    j["alignment"] = {
        {"magnitude", optional_number(alignment.magnitude)},
        {"angle", optional_number(alignment.angle)},
        {"entropy", optional_number(alignment.entropy)},
        {"confidence", optional_number(alignment.confidence)},
        {"mi", optional_number(alignment.mi)},
    };
    j["deltas"] = {
        {"skewness", optional_number(alignment.delta_skewness)},
        {"kurtosis", optional_number(alignment.delta_kurtosis)},
        {"lyapunov", optional_number(alignment.delta_lyapunov)},
    };
    return j;
}

json to_json(const ltc::DraResult& result, const ltc::DraConfig& cfg) {
    json steps = json::array();
    for (const auto& s : result.steps) {
        steps.push_back({
            {"cosine", s.cosine},
            {"coherence", s.coherence},
            {"kl", s.kl},
            {"weight", s.weight},
            {"score", s.score},
            {"score_clamped", s.score_clamped},
        });
    }
    json j;
    j["value"] = result.value;
    j["value_convex"] = result.value_convex;
    j["value_l2"] = result.value_l2;
    j["value_unclamped"] = result.value_unclamped;
    j["common_length"] = result.common_length;
    j["common_dim"] = result.common_dim;
    j["mapping"] = result.mapping;
    j["config"] = {
        {"beta", cfg.beta},
        {"alpha_penalty", cfg.alpha_penalty},
        {"epsilon", cfg.epsilon},
        {"normalization",
         cfg.normalization == ltc::DraNormalization::convex ? "convex" : "l2"},
        {"clamp_negative", cfg.clamp_negative},
        {"common_dim_requested", cfg.common_dim},
    };
    j["steps"] = std::move(steps);
    return j;
}

json to_json(const ingest::SynthGroundTruth& truth) {
    json j;
    j["seed"] = truth.seed;
    j["coupled_layer"] = truth.coupled_layer;
    j["noise_sigma"] = truth.noise_sigma;
    j["w_true"] = {
        {"rows", truth.w_true.rows()},
        {"cols", truth.w_true.cols()},
        {"values", std::vector<double>(truth.w_true.values().begin(),
                                       truth.w_true.values().end())},
    };
    return j;
}

std::string json_text(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace trajlab
