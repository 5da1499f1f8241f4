#include <cmath>
#include <memory>
#include <string>

#include "commands.hpp"
#include "trajlab/ingest/csv.hpp"
#include "trajlab/ingest/tensor_io.hpp"
#include "trajlab/json_io.hpp"
#include "trajlab/numcore/stats.hpp"
#include "trajlab/repsim/metrics.hpp"
#include "trajlab/repsim/rdm.hpp"
#include "trajlab/repsim/spatiotemporal.hpp"

namespace trajlab::cli {

namespace {

struct RepsimFlags {
    std::string manifest;
    std::string predicted;
    std::size_t window = 0;  // 0 -> time_points / 4
    std::size_t stride = 0;  // 0 -> window
    std::string distance = "euclidean";
};

void write_labeled_square(const std::filesystem::path& path,
                          const std::vector<std::string>& labels,
                          const numcore::Matrix& values) {
    std::vector<std::string> header{"id"};
    header.insert(header.end(), labels.begin(), labels.end());
    std::vector<std::vector<std::string>> rows;
    rows.reserve(values.rows());
    for (std::size_t i = 0; i < values.rows(); ++i) {
        std::vector<std::string> row{labels[i]};
        for (std::size_t j = 0; j < values.cols(); ++j) {
            row.push_back(ingest::format_double(values(i, j)));
        }
        rows.push_back(std::move(row));
    }
    write_csv_rows(path, header, rows);
}

void run_repsim(const RepsimFlags& flags, const GlobalOptions& global) {
    const auto out = resolve_out_dir(global.out_dir);
    const ingest::Dataset ds = load_dataset(flags.manifest, global.verbosity);

    const ingest::TensorData pred_data = ingest::read_tensor(flags.predicted);
    numcore::Matrix pred_flat;
    std::optional<numcore::Tensor3> pred_epochs;
    if (pred_data.dims.size() == 3) {
        pred_epochs = pred_data.to_tensor3();
        pred_flat = numcore::Matrix(
            pred_data.dims[0], pred_data.dims[1] * pred_data.dims[2], pred_data.values);
    } else {
        pred_flat = pred_data.to_matrix();
        if (ds.epochs && pred_flat.cols() ==
                             ds.epochs->channels() * ds.epochs->time_points()) {
            pred_epochs = numcore::Tensor3(pred_flat.rows(), ds.epochs->channels(),
                                           ds.epochs->time_points(), pred_data.values);
        }
    }
    if (!pred_flat.same_shape(ds.signals.data)) {
        throw DimMismatch("predicted tensor shape does not match the observed signal");
    }

    const repsim::DistanceKind kind = flags.distance == "cosine"
                                          ? repsim::DistanceKind::cosine
                                          : repsim::DistanceKind::euclidean;
    const repsim::RDM rdm_obs = repsim::compute_rdm(ds.signals.data, kind);
    const repsim::RDM rdm_pred = repsim::compute_rdm(pred_flat, kind);
    write_labeled_square(out / "rdm_observed.csv", ds.signals.sample_ids,
                         rdm_obs.distances);
    write_labeled_square(out / "rdm_predicted.csv", ds.signals.sample_ids,
                         rdm_pred.distances);

    nlohmann::json summary;
    summary["mse"] = repsim::mse(pred_flat, ds.signals.data);
    const auto score = repsim::pearson_score(pred_flat, ds.signals.data);
    summary["pearson_r"] = score.value;
    summary["skipped_columns"] = score.skipped_columns;
    summary["rsa_spearman"] = repsim::rsa_score(rdm_pred, rdm_obs);
    // the Pearson variant over the same upper triangles, reported alongside
    summary["rdm_upper_pearson"] =
        numcore::pearson(rdm_pred.upper_triangle(), rdm_obs.upper_triangle());
    summary["cka"] = repsim::cka(pred_flat, ds.signals.data);
    summary["rdm_distance"] = flags.distance;

    if (ds.epochs && pred_epochs) {
        const std::size_t t = ds.epochs->time_points();
        const std::size_t window = flags.window != 0 ? flags.window : std::max<std::size_t>(1, t / 4);
        const std::size_t stride = flags.stride != 0 ? flags.stride : window;
        summary["window"] = window;
        summary["stride"] = stride;

        const auto st = repsim::st_correlation(ds.epochs->data, *pred_epochs,
                                               ds.epochs->channel_labels);
        write_labeled_square(out / "st_map.csv", st.channels, st.values);
        summary["st_map_skipped_cells"] = st.skipped.size();

        const auto conn_obs = repsim::functional_connectivity(
            ds.epochs->data, window, stride, ds.epochs->channel_labels);
        const auto conn_pred = repsim::functional_connectivity(
            *pred_epochs, window, stride, ds.epochs->channel_labels);
        for (std::size_t w = 0; w < conn_obs.size(); ++w) {
            char suffix[32];
            std::snprintf(suffix, sizeof(suffix), "w%03zu.csv", w);
            write_labeled_square(out / ("connectivity_observed_" + std::string(suffix)),
                                 conn_obs[w].channels, conn_obs[w].values);
            write_labeled_square(out / ("connectivity_predicted_" + std::string(suffix)),
                                 conn_pred[w].channels, conn_pred[w].values);
        }
        summary["connectivity_windows"] = conn_obs.size();
    } else {
        summary["window"] = nullptr;
        summary["stride"] = nullptr;
        summary["connectivity_windows"] = 0;
        summary["note"] = "signal is 2-axis; ST map and connectivity need epochs";
    }
    write_json(out / "repsim_summary.json", summary);
}

}  // namespace

void register_repsim(CLI::App& app, GlobalOptions& global, int& exit_code) {
    auto flags = std::make_shared<RepsimFlags>();
    CLI::App* cmd = app.add_subcommand(
        "repsim", "representation similarity between observed and predicted signals");
    cmd->fallthrough();
    cmd->add_option("-m,--manifest", flags->manifest, "dataset manifest")->required();
    cmd->add_option("-p,--predicted", flags->predicted,
                    "predicted signal tensor (e.g. predicted_best.trjl from encode)")
        ->required();
    cmd->add_option("--window", flags->window,
                    "connectivity window length (default: time points / 4)");
    cmd->add_option("--stride", flags->stride, "connectivity stride (default: window)");
    cmd->add_option("--rdm-distance", flags->distance, "euclidean or cosine")
        ->check(CLI::IsMember({"euclidean", "cosine"}))
        ->default_val("euclidean");
    cmd->callback([flags, &global, &exit_code]() {
        exit_code = run_command([&]() { run_repsim(*flags, global); });
    });
}

}  // namespace trajlab::cli
