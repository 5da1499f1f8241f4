#pragma once

#include <cstdint>
#include <optional>

#include "trajlab/encoding/data.hpp"

namespace trajlab::ingest {

using encoding::EmbeddingTensor;
using encoding::SignalEpochs;
using encoding::SignalMatrix;
using numcore::Matrix;

struct SynthConfig {
    std::size_t samples = 0;       // N
    std::size_t signal_dim = 0;    // d
    std::size_t layer_count = 0;   // L
    std::size_t embed_dim = 0;     // D
    std::size_t coupled_layer = 0; // layer whose embedding drives the signal
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    std::size_t channels = 0;      // optional: reshape signals to N x channels x (d/channels)

    void validate() const;
};

struct SynthGroundTruth {
    Matrix w_true;  // D x d
    std::size_t coupled_layer = 0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

struct SynthData {
    EmbeddingTensor embeddings;
    SignalMatrix signals;
    std::optional<SignalEpochs> epochs;  // present when cfg.channels > 0
    SynthGroundTruth truth;
};

/// Seeded synthetic dataset with a known linear readout. Draw order is
/// fixed: embeddings (row-major N x L x D), then W_true (D x d, scaled
/// 1/sqrt(D)), then noise (row-major N x d); all standard normals from one
/// xoshiro256++ stream, so a seed pins every byte of the output.
/// signals = embeddings[:, coupled_layer, :] * W_true + noise_sigma * eps.
SynthData synth_generate(const SynthConfig& cfg);

}  // namespace trajlab::ingest
