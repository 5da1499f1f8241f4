#include "trajlab/repsim/metrics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/stats.hpp"

namespace trajlab::repsim {

double mse(const Matrix& pred, const Matrix& obs) {
    if (!pred.same_shape(obs)) {
        throw ShapeMismatch("mse: " + std::to_string(pred.rows()) + "x" +
                            std::to_string(pred.cols()) + " vs " +
                            std::to_string(obs.rows()) + "x" + std::to_string(obs.cols()));
    }
    if (pred.size() == 0) {
        throw ShapeMismatch("mse: empty input");
    }
    double sum = 0.0;
    const auto pv = pred.values();
    const auto ov = obs.values();
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const double d = pv[i] - ov[i];
        sum += d * d;
    }
    return sum / static_cast<double>(pv.size());
}

PearsonScore pearson_score(const Matrix& pred, const Matrix& obs) {
    if (!pred.same_shape(obs)) {
        throw ShapeMismatch("pearson_score: shape mismatch");
    }
    const std::size_t n = pred.rows();
    const std::size_t d = pred.cols();
    if (n < 2) {
        throw ShapeMismatch("pearson_score: need at least 2 rows");
    }
    PearsonScore score;
    double sum = 0.0;
    std::size_t used = 0;
    std::vector<double> pc(n), oc(n);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            pc[i] = pred(i, j);
            oc[i] = obs(i, j);
        }
        try {
            sum += numcore::pearson(pc, oc);
            ++used;
        } catch (const ZeroVariance&) {
            ++score.skipped_columns;
        }
    }
    if (used == 0) {
        throw AllColumnsDegenerate("pearson_score: every column has zero variance");
    }
    score.value = sum / static_cast<double>(used);
    return score;
}

double cka(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw ShapeMismatch("cka: row counts " + std::to_string(a.rows()) + " vs " +
                            std::to_string(b.rows()));
    }
    if (a.rows() < 2) {
        throw ShapeMismatch("cka: need at least 2 rows");
    }
    using EigenRowMajor =
        Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    EigenRowMajor ac = Eigen::Map<const EigenRowMajor>(
        a.values().data(), static_cast<Eigen::Index>(a.rows()),
        static_cast<Eigen::Index>(a.cols()));
    EigenRowMajor bc = Eigen::Map<const EigenRowMajor>(
        b.values().data(), static_cast<Eigen::Index>(b.rows()),
        static_cast<Eigen::Index>(b.cols()));
    ac.rowwise() -= ac.colwise().mean();
    bc.rowwise() -= bc.colwise().mean();

    const double cross = (ac.transpose() * bc).squaredNorm();
    const double norm_a = (ac.transpose() * ac).norm();
    const double norm_b = (bc.transpose() * bc).norm();
    if (norm_a == 0.0 || norm_b == 0.0) {
        throw ZeroMatrix("cka: an input is zero after mean-centering");
    }
    return cross / (norm_a * norm_b);
}

}  // namespace trajlab::repsim
