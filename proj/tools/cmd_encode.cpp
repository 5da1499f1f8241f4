#include <memory>
#include <string>

#include "commands.hpp"
#include "trajlab/encoding/nested_cv.hpp"
#include "trajlab/ingest/csv.hpp"
#include "trajlab/ingest/tensor_io.hpp"
#include "trajlab/json_io.hpp"

namespace trajlab::cli {

namespace {

struct EncodeFlags {
    std::string manifest;
    std::size_t outer_folds = 5;
    std::size_t inner_folds = 3;
    std::vector<double> alphas;  // empty -> default grid
    std::uint64_t seed = 0;
    bool no_predictions = false;
};

void run_encode(const EncodeFlags& flags, const GlobalOptions& global) {
    const auto out = resolve_out_dir(global.out_dir);
    const ingest::Dataset ds = load_dataset(flags.manifest, global.verbosity);

    encoding::EncodingConfig cfg;
    cfg.outer_folds = flags.outer_folds;
    cfg.inner_folds = flags.inner_folds;
    if (!flags.alphas.empty()) cfg.alpha_grid = flags.alphas;
    cfg.seed = flags.seed;

    log_info(global, "encoding " + std::to_string(ds.embeddings.layers()) + " layers");
    const auto report =
        encoding::nested_cv_encode(ds.embeddings, ds.signals, cfg, global.threads);

    write_json(out / "encoding_report.json", to_json(report));

    // aggregated per-layer table
    numcore::Matrix table(report.layers.size(), 5);
    for (std::size_t l = 0; l < report.layers.size(); ++l) {
        const auto& s = report.layers[l];
        table(l, 0) = static_cast<double>(s.layer);
        table(l, 1) = s.mse;
        table(l, 2) = s.mean_r;
        table(l, 3) = s.rsa_valid ? s.rsa : std::nan("");
        table(l, 4) = s.cka_valid ? s.cka : std::nan("");
    }
    atomic_write_file(out / "encoding_layers.csv", [&](const std::filesystem::path& p) {
        ingest::write_csv_matrix(p, {"layer", "mse", "r", "rsa", "cka"}, table);
    });

    if (!flags.no_predictions) {
        // pooled out-of-fold predictions of the best layer, signal-shaped
        const numcore::Matrix& pred = report.oof_predictions[report.best_layer];
        atomic_write_file(out / "predicted_best.trjl", [&](const std::filesystem::path& p) {
            if (ds.epochs) {
                numcore::Tensor3 shaped(ds.epochs->samples(), ds.epochs->channels(),
                                        ds.epochs->time_points(),
                                        std::vector<double>(pred.values().begin(),
                                                            pred.values().end()));
                ingest::write_tensor(p, ingest::TensorData::from_tensor3(shaped));
            } else {
                ingest::write_tensor(p, ingest::TensorData::from_matrix(pred));
            }
        });
    }
}

}  // namespace

void register_encode(CLI::App& app, GlobalOptions& global, int& exit_code) {
    auto flags = std::make_shared<EncodeFlags>();
    CLI::App* cmd = app.add_subcommand(
        "encode", "layerwise ridge encoding with nested cross-validation");
    cmd->fallthrough();
    cmd->add_option("-m,--manifest", flags->manifest, "dataset manifest")->required();
    cmd->add_option("--outer-folds", flags->outer_folds)->default_val(5);
    cmd->add_option("--inner-folds", flags->inner_folds)->default_val(3);
    cmd->add_option("--alphas", flags->alphas,
                    "ridge penalties, ascending (default: 13 log-spaced 1e-3..1e3)")
        ->delimiter(',');
    cmd->add_option("--seed", flags->seed, "fold-assignment seed")->default_val(0);
    cmd->add_flag("--no-predictions", flags->no_predictions,
                  "skip writing predicted_best.trjl");
    cmd->callback([flags, &global, &exit_code]() {
        exit_code = run_command([&]() { run_encode(*flags, global); });
    });
}

}  // namespace trajlab::cli
