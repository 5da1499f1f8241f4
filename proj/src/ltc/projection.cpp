#include "trajlab/ltc/projection.hpp"

#include <algorithm>
#include <cmath>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/spectral.hpp"

namespace trajlab::ltc {

PrincipalAxes principal_axes(const Matrix& stacked, std::size_t k) {
    const std::size_t m = stacked.rows();
    const std::size_t d = stacked.cols();
    if (m < 2) {
        throw TooShort("principal_axes: need at least 2 rows");
    }
    PrincipalAxes out;
    out.mean = stacked.column_means();

    Matrix centered = stacked;
    double total_var = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            centered(i, j) -= out.mean[j];
            total_var += centered(i, j) * centered(i, j);
        }
    }
    if (total_var == 0.0) {
        throw DegenerateVariance("principal_axes: all rows identical");
    }

    const std::size_t usable = std::min(d, m - 1);
    k = std::max<std::size_t>(1, std::min(k, usable));
    out.axes = Matrix(d, k);

    if (d <= m) {
        // covariance route: D x D
        Matrix cov(d, d);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t a = 0; a < d; ++a) {
                const double va = centered(i, a);
                for (std::size_t b = a; b < d; ++b) {
                    cov(a, b) += va * centered(i, b);
                }
            }
        }
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a; b < d; ++b) {
                cov(a, b) /= static_cast<double>(m);
                cov(b, a) = cov(a, b);
            }
        }
        const auto ed = numcore::symmetric_eigendecomposition(cov);
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t a = 0; a < d; ++a) {
                out.axes(a, c) = ed.eigenvectors(a, c);
            }
        }
    } else {
        // Gram route: eigenvectors u of (Xc Xc^T)/m lift to axes Xc^T u
        Matrix gram(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                double s = 0.0;
                for (std::size_t a = 0; a < d; ++a) s += centered(i, a) * centered(j, a);
                gram(i, j) = s / static_cast<double>(m);
                gram(j, i) = gram(i, j);
            }
        }
        const auto ed = numcore::symmetric_eigendecomposition(gram);
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<double> axis(d, 0.0);
            for (std::size_t i = 0; i < m; ++i) {
                const double u = ed.eigenvectors(i, c);
                for (std::size_t a = 0; a < d; ++a) axis[a] += centered(i, a) * u;
            }
            double norm = 0.0;
            for (double v : axis) norm += v * v;
            norm = std::sqrt(norm);
            if (norm > 0.0) {
                for (auto& v : axis) v /= norm;
            }
            for (std::size_t a = 0; a < d; ++a) out.axes(a, c) = axis[a];
        }
    }

    // deterministic sign: largest-magnitude loading positive
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t arg = 0;
        double best = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            if (std::abs(out.axes(a, c)) > best) {
                best = std::abs(out.axes(a, c));
                arg = a;
            }
        }
        if (out.axes(arg, c) < 0.0) {
            for (std::size_t a = 0; a < d; ++a) out.axes(a, c) = -out.axes(a, c);
        }
    }
    return out;
}

std::vector<double> project_state(const PrincipalAxes& axes, std::span<const double> state) {
    const std::size_t d = axes.input_dim();
    if (state.size() != d) {
        throw DimensionMismatch("project_state: state dimension");
    }
    std::vector<double> out(axes.components(), 0.0);
    for (std::size_t c = 0; c < axes.components(); ++c) {
        double s = 0.0;
        for (std::size_t a = 0; a < d; ++a) {
            s += (state[a] - axes.mean[a]) * axes.axes(a, c);
        }
        out[c] = s;
    }
    return out;
}

std::vector<double> project_rows_first_axis(const PrincipalAxes& axes, const Matrix& rows) {
    std::vector<double> out(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        double s = 0.0;
        const auto r = rows.row(i);
        for (std::size_t a = 0; a < axes.input_dim(); ++a) {
            s += (r[a] - axes.mean[a]) * axes.axes(a, 0);
        }
        out[i] = s;
    }
    return out;
}

}  // namespace trajlab::ltc
