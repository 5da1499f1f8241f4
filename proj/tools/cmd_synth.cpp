#include <fstream>
#include <memory>
#include <string>

#include "commands.hpp"
#include "trajlab/ingest/synth.hpp"
#include "trajlab/ingest/tensor_io.hpp"
#include "trajlab/json_io.hpp"

namespace trajlab::cli {

namespace {

struct SynthFlags {
    std::size_t n = 200;
    std::size_t d = 16;
    std::size_t layers = 8;
    std::size_t dim = 32;
    std::size_t coupled_layer = 0;
    double noise = 0.5;
    std::uint64_t seed = 0;
    std::size_t channels = 0;
};

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    std::string text;
    for (const auto& l : lines) {
        text += l;
        text += '\n';
    }
    atomic_write_text(path, text);
}

void run_synth(const SynthFlags& flags, const GlobalOptions& global) {
    ingest::SynthConfig cfg;
    cfg.samples = flags.n;
    cfg.signal_dim = flags.d;
    cfg.layer_count = flags.layers;
    cfg.embed_dim = flags.dim;
    cfg.coupled_layer = flags.coupled_layer;
    cfg.noise_sigma = flags.noise;
    cfg.seed = flags.seed;
    cfg.channels = flags.channels;
    cfg.validate();

    const auto out = resolve_out_dir(global.out_dir);
    const auto data = ingest::synth_generate(cfg);
    log_info(global, "writing dataset to " + out.string());

    atomic_write_file(out / "embeddings.trjl", [&](const std::filesystem::path& p) {
        ingest::write_tensor(p, ingest::TensorData::from_tensor3(data.embeddings.data));
    });
    atomic_write_file(out / "signals.trjl", [&](const std::filesystem::path& p) {
        if (data.epochs) {
            ingest::write_tensor(p, ingest::TensorData::from_tensor3(data.epochs->data));
        } else {
            ingest::write_tensor(p, ingest::TensorData::from_matrix(data.signals.data));
        }
    });
    write_lines(out / "sample_ids.txt", data.signals.sample_ids);
    write_lines(out / "layers.txt", data.embeddings.layer_names);

    ingest::DatasetManifest manifest;
    manifest.base_dir = out;
    manifest.signal_path = out / "signals.trjl";
    manifest.embedding_path = out / "embeddings.trjl";
    manifest.sample_ids_path = out / "sample_ids.txt";
    manifest.layer_names_path = out / "layers.txt";
    if (data.epochs) {
        write_lines(out / "channels.txt", data.epochs->channel_labels);
        manifest.channel_labels_path = out / "channels.txt";
    }
    atomic_write_file(out / "manifest.txt", [&](const std::filesystem::path& p) {
        ingest::write_manifest(p, manifest);
    });

    nlohmann::json truth = to_json(data.truth);
    truth["config"] = {
        {"n", cfg.samples},       {"d", cfg.signal_dim},
        {"layers", cfg.layer_count}, {"dim", cfg.embed_dim},
        {"coupled_layer", cfg.coupled_layer}, {"noise", cfg.noise_sigma},
        {"seed", cfg.seed},       {"channels", cfg.channels},
    };
    write_json(out / "ground_truth.json", truth);
}

}  // namespace

void register_synth(CLI::App& app, GlobalOptions& global, int& exit_code) {
    auto flags = std::make_shared<SynthFlags>();
    CLI::App* cmd = app.add_subcommand(
        "synth", "generate a seeded synthetic dataset with a known coupled layer");
    cmd->fallthrough();
    cmd->add_option("--n", flags->n, "samples")->default_val(200);
    cmd->add_option("--d", flags->d, "signal features")->default_val(16);
    cmd->add_option("--layers", flags->layers, "embedding layers")->default_val(8);
    cmd->add_option("--dim", flags->dim, "embedding dimension")->default_val(32);
    cmd->add_option("--coupled-layer", flags->coupled_layer,
                    "layer whose embedding drives the signal")
        ->default_val(0);
    cmd->add_option("--noise", flags->noise, "noise sigma")->default_val(0.5);
    cmd->add_option("--seed", flags->seed, "rng seed")->default_val(0);
    cmd->add_option("--channels", flags->channels,
                    "reshape signals to n x channels x (d/channels) epochs")
        ->default_val(0);
    cmd->callback([flags, &global, &exit_code]() {
        exit_code = run_command([&]() { run_synth(*flags, global); });
    });
}

}  // namespace trajlab::cli
