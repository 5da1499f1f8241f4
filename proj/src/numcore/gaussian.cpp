#include "trajlab/numcore/gaussian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace trajlab::numcore {

namespace {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenRowMajor to_eigen(const Matrix& m) {
    return Eigen::Map<const EigenRowMajor>(m.values().data(),
                                           static_cast<Eigen::Index>(m.rows()),
                                           static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

GaussianSummary::GaussianSummary(std::vector<double> mean, Matrix covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
    const std::size_t p = mean_.size();
    if (covariance_.rows() != p || covariance_.cols() != p) {
        throw DimensionMismatch("GaussianSummary: covariance is " +
                                std::to_string(covariance_.rows()) + "x" +
                                std::to_string(covariance_.cols()) + " for mean length " +
                                std::to_string(p));
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < p; ++i) trace += covariance_(i, i);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            if (std::abs(covariance_(i, j) - covariance_(j, i)) > 1e-10) {
                throw NotSymmetric("GaussianSummary covariance");
            }
        }
    }
    if (p > 0) {
        Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(to_eigen(covariance_),
                                                            Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (min_eig < -1e-10 * std::max(1.0, std::abs(trace))) {
            throw NotPositiveDefinite("GaussianSummary covariance has eigenvalue " +
                                      std::to_string(min_eig));
        }
    }
}

GaussianSummary GaussianSummary::diagonal(std::vector<double> mean,
                                          std::vector<double> variances) {
    if (mean.size() != variances.size()) {
        throw DimensionMismatch("GaussianSummary::diagonal: length mismatch");
    }
    Matrix cov(mean.size(), mean.size());
    for (std::size_t i = 0; i < mean.size(); ++i) cov(i, i) = variances[i];
    return GaussianSummary(std::move(mean), std::move(cov));
}

GaussianSummary GaussianSummary::spherical(std::vector<double> mean) {
    std::vector<double> ones(mean.size(), 1.0);
    return diagonal(std::move(mean), std::move(ones));
}

GaussianSummary GaussianSummary::from_samples(const Matrix& samples, bool diagonal_only) {
    const std::size_t n = samples.rows();
    const std::size_t p = samples.cols();
    if (n < 1) {
        throw TooShort("GaussianSummary::from_samples: no samples");
    }
    std::vector<double> mean = samples.column_means();
    Matrix cov(p, p);
    for (std::size_t s = 0; s < n; ++s) {
        const auto row = samples.row(s);
        if (diagonal_only) {
            for (std::size_t i = 0; i < p; ++i) {
                const double d = row[i] - mean[i];
                cov(i, i) += d * d;
            }
        } else {
            for (std::size_t i = 0; i < p; ++i) {
                const double di = row[i] - mean[i];
                for (std::size_t j = i; j < p; ++j) {
                    cov(i, j) += di * (row[j] - mean[j]);
                }
            }
        }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i; j < p; ++j) {
            cov(i, j) *= inv_n;
            cov(j, i) = cov(i, j);
        }
    }
    return GaussianSummary(std::move(mean), std::move(cov));
}

double gaussian_kl(const GaussianSummary& p, const GaussianSummary& q) {
    if (p.dim() != q.dim()) {
        throw DimensionMismatch("gaussian_kl: dims " + std::to_string(p.dim()) + " vs " +
                                std::to_string(q.dim()));
    }
    const std::size_t dim = p.dim();
    if (dim == 0) return 0.0;

    auto regularized = [dim](const Matrix& cov) {
        EigenRowMajor s = to_eigen(cov);
        const double eps = std::max(1e-8, 1e-8 * s.trace() / static_cast<double>(dim));
        s.diagonal().array() += eps;
        return s;
    };
    const EigenRowMajor sp = regularized(p.covariance());
    const EigenRowMajor sq = regularized(q.covariance());

    Eigen::LLT<EigenRowMajor> llt_q(sq);
    if (llt_q.info() != Eigen::Success) {
        throw NotPositiveDefinite("gaussian_kl: Q covariance not positive definite");
    }
    Eigen::LLT<EigenRowMajor> llt_p(sp);
    if (llt_p.info() != Eigen::Success) {
        throw NotPositiveDefinite("gaussian_kl: P covariance not positive definite");
    }

    const EigenRowMajor solved = llt_q.solve(sp);
    const double trace_term = solved.trace();

    Eigen::VectorXd diff(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        diff(static_cast<Eigen::Index>(i)) = q.mean()[i] - p.mean()[i];
    }
    const double quad = diff.dot(llt_q.solve(diff));

    auto log_det = [](const Eigen::LLT<EigenRowMajor>& llt) {
        double sum = 0.0;
        const auto& l = llt.matrixLLT();
        for (Eigen::Index i = 0; i < l.rows(); ++i) sum += std::log(l(i, i));
        return 2.0 * sum;
    };
    const double kl =
        0.5 * (trace_term + quad - static_cast<double>(dim) + log_det(llt_q) - log_det(llt_p));
    return std::max(0.0, kl);
}

}  // namespace trajlab::numcore
