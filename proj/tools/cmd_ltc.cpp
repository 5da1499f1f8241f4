#include <cmath>
#include <memory>
#include <string>

#include "commands.hpp"
#include "trajlab/errors.hpp"
#include "trajlab/ingest/csv.hpp"
#include "trajlab/ingest/tensor_io.hpp"
#include "trajlab/json_io.hpp"
#include "trajlab/ltc/dra.hpp"
#include "trajlab/ltc/dynamics.hpp"
#include "trajlab/ltc/profile.hpp"
#include "trajlab/ltc/trajectory.hpp"

namespace trajlab::cli {

namespace {

struct LtcFlags {
    std::string manifest;
    std::string predicted;  // optional: compare in signal space instead of layers
    std::size_t window = 0;  // 0 -> time points / 16
    std::size_t stride = 0;  // 0 -> window
    double beta = 1.0;
    double alpha_penalty = 1.0;
    double epsilon = 1e-8;
    double entropy_alpha = 1.0;
    std::size_t bins = 0;
    std::size_t common_dim = 0;
    std::string normalization = "convex";
    bool no_clamp = false;
};

ltc::WindowSpec window_spec(std::size_t time_points, const LtcFlags& flags) {
    ltc::WindowSpec spec;
    spec.window =
        flags.window != 0 ? flags.window : std::max<std::size_t>(1, time_points / 16);
    spec.stride = flags.stride != 0 ? flags.stride : spec.window;
    return spec;
}

ltc::TrajectoryBundle signal_bundle(const ingest::Dataset& ds, const LtcFlags& flags) {
    if (ds.epochs) {
        return ltc::build_trajectory(*ds.epochs, window_spec(ds.epochs->time_points(), flags),
                                     ltc::ReduceMode::sample);
    }
    return ltc::build_trajectory(ds.signals, window_spec(ds.signals.features(), flags),
                                 ltc::ReduceMode::sample);
}

void run_ltc(const LtcFlags& flags, const GlobalOptions& global) {
    const auto out = resolve_out_dir(global.out_dir);
    const ingest::Dataset ds = load_dataset(flags.manifest, global.verbosity);

    const ltc::TrajectoryBundle signal_side = signal_bundle(ds, flags);

    ltc::TrajectoryBundle model_side;
    std::string model_source;
    if (!flags.predicted.empty()) {
        // predicted signals live in the signal space: same windowing
        const ingest::TensorData pred = ingest::read_tensor(flags.predicted);
        ingest::Dataset pred_ds;
        if (pred.dims.size() == 3) {
            encoding::SignalEpochs epochs;
            epochs.data = pred.to_tensor3();
            epochs.sample_ids = ds.signals.sample_ids;
            epochs.channel_labels =
                ds.epochs ? ds.epochs->channel_labels
                          : std::vector<std::string>{};
            if (epochs.channel_labels.empty()) {
                for (std::size_t c = 0; c < epochs.channels(); ++c) {
                    epochs.channel_labels.push_back("ch" + std::to_string(c));
                }
            }
            model_side = ltc::build_trajectory(
                epochs, window_spec(epochs.time_points(), flags), ltc::ReduceMode::sample);
        } else {
            encoding::SignalMatrix signal;
            signal.data = pred.to_matrix();
            signal.sample_ids = ds.signals.sample_ids;
            for (std::size_t f = 0; f < signal.features(); ++f) {
                signal.feature_labels.push_back("f" + std::to_string(f));
            }
            model_side = ltc::build_trajectory(
                signal, window_spec(signal.features(), flags), ltc::ReduceMode::sample);
        }
        model_source = "predicted-signal";
    } else {
        model_side = ltc::build_trajectory(ds.embeddings, ltc::ReduceMode::sample);
        model_source = "embedding-layers";
    }

    ltc::ProfileOptions popts;
    popts.entropy_alpha = flags.entropy_alpha;
    popts.epsilon = flags.epsilon;
    popts.mi_bins = flags.bins;
    const ltc::TrajectoryProfile signal_profile = ltc::build_profile(signal_side, popts);
    const ltc::TrajectoryProfile model_profile = ltc::build_profile(model_side, popts);
    write_json(out / "profile_signal.json", to_json(signal_profile));
    write_json(out / "profile_model.json", to_json(model_profile));

    const ltc::AlignmentProfile alignment = align_profiles(signal_profile, model_profile);
    nlohmann::json alignment_json = to_json(alignment);
    alignment_json["systems"] = {{"a", "signal"}, {"b", model_source}};
    alignment_json["resampling"] = "linear-to-longer";
    {
        // per-trajectory maxima are the default normalization; the shared-scale
        // variant (one max across both systems) is reported alongside
        const double z_mag = std::max(signal_profile.z_mag, model_profile.z_mag);
        const double z_ang = std::max(signal_profile.z_ang, model_profile.z_ang);
        const auto shared_signal =
            ltc::normalized_dynamics(signal_side.trajectory, z_mag, z_ang);
        const auto shared_model =
            ltc::normalized_dynamics(model_side.trajectory, z_mag, z_ang);
        alignment_json["shared_scale"] = {
            {"z_mag", z_mag},
            {"z_ang", z_ang},
            {"signal",
             {{"magnitude_index", shared_signal.magnitude},
              {"angle_index", shared_signal.angle}}},
            {"model",
             {{"magnitude_index", shared_model.magnitude},
              {"angle_index", shared_model.angle}}},
        };
    }
    write_json(out / "alignment.json", alignment_json);

    ltc::DraConfig dra_cfg;
    dra_cfg.beta = flags.beta;
    dra_cfg.alpha_penalty = flags.alpha_penalty;
    dra_cfg.epsilon = flags.epsilon;
    dra_cfg.normalization = flags.normalization == "l2" ? ltc::DraNormalization::l2
                                                        : ltc::DraNormalization::convex;
    dra_cfg.clamp_negative = !flags.no_clamp;
    dra_cfg.common_dim = flags.common_dim;

    nlohmann::json dra_json;
    try {
        const ltc::DraResult result = ltc::dra(signal_side, model_side, dra_cfg);
        dra_json = to_json(result, dra_cfg);
    } catch (const DataError& e) {
        // per-metric degeneracy: report it and keep the run alive
        dra_json["value"] = nullptr;
        dra_json["error"] = e.what();
    }
    dra_json["systems"] = {{"e", "signal"}, {"l", model_source}};
    dra_json["resampling"] = "linear-to-longer";
    write_json(out / "dra.json", dra_json);

    // long-format series table: step, system, metric, value
    {
        std::vector<std::vector<std::string>> rows;
        auto emit = [&rows](const std::string& system, const std::string& metric,
                            const std::vector<double>& series) {
            for (std::size_t i = 0; i < series.size(); ++i) {
                rows.push_back({std::to_string(i), system, metric,
                                std::isnan(series[i]) ? "nan"
                                                      : ingest::format_double(series[i])});
            }
        };
        for (const auto& [system, profile] :
             {std::pair<std::string, const ltc::TrajectoryProfile&>{"signal", signal_profile},
              {"model", model_profile}}) {
            emit(system, "magnitude", profile.step_magnitudes);
            emit(system, "angle", profile.step_angles);
            emit(system, "entropy", profile.entropy_series);
            emit(system, "confidence", profile.confidence_series);
            emit(system, "mi", profile.mi_series);
        }
        write_csv_rows(out / "ltc_series.csv", {"step", "system", "metric", "value"}, rows);
    }

    // PCA-1 coordinates per step and system
    {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < signal_profile.pca1.size(); ++i) {
            rows.push_back({std::to_string(i), "signal",
                            ingest::format_double(signal_profile.pca1[i])});
        }
        for (std::size_t i = 0; i < model_profile.pca1.size(); ++i) {
            rows.push_back({std::to_string(i), "model",
                            ingest::format_double(model_profile.pca1[i])});
        }
        write_csv_rows(out / "pca_trajectory.csv", {"step", "system", "pca1"}, rows);
    }
}

}  // namespace

void register_ltc(CLI::App& app, GlobalOptions& global, int& exit_code) {
    auto flags = std::make_shared<LtcFlags>();
    CLI::App* cmd = app.add_subcommand(
        "ltc", "latent trajectory comparison: dynamics, profiles, alignment, DRA");
    cmd->fallthrough();
    cmd->add_option("-m,--manifest", flags->manifest, "dataset manifest")->required();
    cmd->add_option("-p,--predicted", flags->predicted,
                    "optional predicted-signal tensor; compares in signal space "
                    "instead of embedding layers");
    cmd->add_option("--window", flags->window,
                    "signal window length (default: time points / 16)");
    cmd->add_option("--stride", flags->stride, "signal window stride (default: window)");
    cmd->add_option("--beta", flags->beta, "Gamma shape for DRA step weights")
        ->default_val(1.0);
    cmd->add_option("--alpha", flags->alpha_penalty, "DRA divergence penalty in (0,5]")
        ->default_val(1.0);
    cmd->add_option("--epsilon", flags->epsilon, "numerical stability constant")
        ->default_val(1e-8);
    cmd->add_option("--entropy-alpha", flags->entropy_alpha, "matrix-entropy order")
        ->default_val(1.0);
    cmd->add_option("--bins", flags->bins, "MI histogram bins (default: ceil(sqrt(N)))");
    cmd->add_option("--common-dim", flags->common_dim,
                    "shared dimension for cross-space DRA (default: auto)");
    cmd->add_option("--dra-normalization", flags->normalization, "convex or l2")
        ->check(CLI::IsMember({"convex", "l2"}))
        ->default_val("convex");
    cmd->add_flag("--no-clamp", flags->no_clamp,
                  "keep negative per-step DRA scores instead of clamping to 0");
    cmd->callback([flags, &global, &exit_code]() {
        exit_code = run_command([&]() { run_ltc(*flags, global); });
    });
}

}  // namespace trajlab::cli
