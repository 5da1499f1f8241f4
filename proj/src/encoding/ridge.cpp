#include "trajlab/encoding/ridge.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "trajlab/errors.hpp"

namespace trajlab::encoding {

namespace {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> map_of(const Matrix& m) {
    return Eigen::Map<const EigenRowMajor>(m.values().data(),
                                           static_cast<Eigen::Index>(m.rows()),
                                           static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

RidgeFit fit_ridge(const Matrix& features, const Matrix& targets, double alpha) {
    const std::size_t n = features.rows();
    const std::size_t d_in = features.cols();
    const std::size_t d_out = targets.cols();
    if (targets.rows() != n) {
        throw DimensionMismatch("fit_ridge: " + std::to_string(n) + " feature rows vs " +
                                std::to_string(targets.rows()) + " target rows");
    }
    if (n < 2) {
        throw InsufficientSamples("fit_ridge: need at least 2 samples");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw SingularSystem("fit_ridge: alpha must be positive and finite");
    }

    RidgeFit fit;
    fit.alpha = alpha;
    fit.feature_means = features.column_means();
    fit.target_means = targets.column_means();

    EigenRowMajor x = map_of(features);
    EigenRowMajor y = map_of(targets);
    for (std::size_t j = 0; j < d_in; ++j) {
        x.col(static_cast<Eigen::Index>(j)).array() -= fit.feature_means[j];
    }
    for (std::size_t j = 0; j < d_out; ++j) {
        y.col(static_cast<Eigen::Index>(j)).array() -= fit.target_means[j];
    }

    EigenRowMajor w;
    if (d_in <= n) {
        EigenRowMajor gram = x.transpose() * x;
        gram.diagonal().array() += alpha;
        Eigen::LLT<EigenRowMajor> llt(gram);
        if (llt.info() != Eigen::Success) {
            throw SingularSystem("fit_ridge: primal system not positive definite");
        }
        w = llt.solve(x.transpose() * y);
    } else {
        EigenRowMajor gram = x * x.transpose();
        gram.diagonal().array() += alpha;
        Eigen::LLT<EigenRowMajor> llt(gram);
        if (llt.info() != Eigen::Success) {
            throw SingularSystem("fit_ridge: dual system not positive definite");
        }
        w = x.transpose() * llt.solve(y);
    }

    fit.weights = Matrix(d_in, d_out,
                         std::vector<double>(w.data(), w.data() + w.size()));
    fit.intercept.resize(d_out);
    for (std::size_t j = 0; j < d_out; ++j) {
        double dot = 0.0;
        for (std::size_t i = 0; i < d_in; ++i) {
            dot += fit.feature_means[i] * fit.weights(i, j);
        }
        fit.intercept[j] = fit.target_means[j] - dot;
    }
    return fit;
}

Matrix predict(const RidgeFit& fit, const Matrix& features) {
    const std::size_t d_in = fit.weights.rows();
    const std::size_t d_out = fit.weights.cols();
    if (features.cols() != d_in) {
        throw DimensionMismatch("predict: " + std::to_string(features.cols()) +
                                " feature columns, fit expects " + std::to_string(d_in));
    }
    const std::size_t m = features.rows();
    Matrix out(m, d_out);
    for (std::size_t i = 0; i < m; ++i) {
        const auto row = features.row(i);
        for (std::size_t j = 0; j < d_out; ++j) {
            double sum = fit.target_means[j];
            for (std::size_t k = 0; k < d_in; ++k) {
                sum += (row[k] - fit.feature_means[k]) * fit.weights(k, j);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

}  // namespace trajlab::encoding
