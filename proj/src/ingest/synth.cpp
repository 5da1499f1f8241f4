#include "trajlab/ingest/synth.hpp"

#include <cmath>
#include <string>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/rng.hpp"

namespace trajlab::ingest {

void SynthConfig::validate() const {
    if (samples < 2 || signal_dim == 0 || layer_count == 0 || embed_dim == 0) {
        throw InvalidConfig("synth: samples >= 2 and nonzero d, layers, dim required");
    }
    if (coupled_layer >= layer_count) {
        throw InvalidConfig("synth: coupled_layer " + std::to_string(coupled_layer) +
                            " out of range for " + std::to_string(layer_count) + " layers");
    }
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
        throw InvalidConfig("synth: noise_sigma must be >= 0");
    }
    if (channels > 0 && signal_dim % channels != 0) {
        throw InvalidConfig("synth: channels must divide signal_dim");
    }
}

SynthData synth_generate(const SynthConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.samples;
    const std::size_t d = cfg.signal_dim;
    const std::size_t layers = cfg.layer_count;
    const std::size_t dim = cfg.embed_dim;

    numcore::Xoshiro256pp rng(cfg.seed);

    std::vector<double> emb_data(n * layers * dim);
    for (auto& v : emb_data) v = rng.normal();

    const double w_scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<double> w_data(dim * d);
    for (auto& v : w_data) v = w_scale * rng.normal();

    std::vector<double> noise(n * d);
    for (auto& v : noise) v = rng.normal();

    numcore::Tensor3 embeddings(n, layers, dim, std::move(emb_data));
    Matrix w_true(dim, d, std::move(w_data));

    Matrix signals(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        const auto features = embeddings.inner(i, cfg.coupled_layer);
        for (std::size_t j = 0; j < d; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                sum += features[k] * w_true(k, j);
            }
            signals(i, j) = sum + cfg.noise_sigma * noise[i * d + j];
        }
    }

    SynthData out;
    out.truth = SynthGroundTruth{w_true, cfg.coupled_layer, cfg.noise_sigma, cfg.seed};

    std::vector<std::string> sample_ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "s%04zu", i);
        sample_ids[i] = buf;
    }
    std::vector<std::string> layer_names(layers);
    for (std::size_t l = 0; l < layers; ++l) {
        layer_names[l] = "layer" + std::to_string(l);
    }

    out.embeddings = EmbeddingTensor{std::move(embeddings), sample_ids, std::move(layer_names)};
    out.embeddings.validate();

    if (cfg.channels > 0) {
        const std::size_t t = d / cfg.channels;
        std::vector<std::string> channel_labels(cfg.channels);
        for (std::size_t c = 0; c < cfg.channels; ++c) {
            channel_labels[c] = "ch" + std::to_string(c);
        }
        numcore::Tensor3 ep(n, cfg.channels, t,
                            std::vector<double>(signals.values().begin(),
                                                signals.values().end()));
        out.epochs = SignalEpochs{std::move(ep), sample_ids, std::move(channel_labels)};
        out.epochs->validate();
        out.signals = out.epochs->flatten();
    } else {
        std::vector<std::string> feature_labels(d);
        for (std::size_t j = 0; j < d; ++j) {
            feature_labels[j] = "f" + std::to_string(j);
        }
        out.signals = SignalMatrix{std::move(signals), std::move(sample_ids),
                                   std::move(feature_labels)};
        out.signals.validate();
    }
    return out;
}

}  // namespace trajlab::ingest
