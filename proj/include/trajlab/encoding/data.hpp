#pragma once

#include <string>
#include <vector>

#include "trajlab/numcore/matrix.hpp"

namespace trajlab::encoding {

using numcore::Matrix;
using numcore::Tensor3;

/// N samples x d signal features (flattened channel/time features).
struct SignalMatrix {
    Matrix data;
    std::vector<std::string> sample_ids;
    std::vector<std::string> feature_labels;

    std::size_t samples() const { return data.rows(); }
    std::size_t features() const { return data.cols(); }

    /// N >= 2, unique labels, label counts matching data, finite entries.
    void validate() const;
};

/// N samples x c channels x t time points, the epoch view of a signal.
struct SignalEpochs {
    Tensor3 data;
    std::vector<std::string> sample_ids;
    std::vector<std::string> channel_labels;

    std::size_t samples() const { return data.dim0(); }
    std::size_t channels() const { return data.dim1(); }
    std::size_t time_points() const { return data.dim2(); }

    void validate() const;

    /// Flatten to N x (c*t) with feature labels "<channel>:t<bin>".
    SignalMatrix flatten() const;
};

/// N samples x L layers x D dims of model embeddings.
struct EmbeddingTensor {
    Tensor3 data;
    std::vector<std::string> sample_ids;
    std::vector<std::string> layer_names;

    std::size_t samples() const { return data.dim0(); }
    std::size_t layers() const { return data.dim1(); }
    std::size_t dim() const { return data.dim2(); }

    void validate() const;

    /// Copy of the N x D slice for one layer.
    Matrix layer_matrix(std::size_t layer) const { return data.slice_middle(layer); }
};

}  // namespace trajlab::encoding
