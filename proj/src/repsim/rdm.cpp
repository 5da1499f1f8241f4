#include "trajlab/repsim/rdm.hpp"

#include <cmath>
#include <string>

#include "trajlab/errors.hpp"
#include "trajlab/numcore/stats.hpp"

namespace trajlab::repsim {

std::vector<double> RDM::upper_triangle() const {
    const std::size_t n = size();
    std::vector<double> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(distances(i, j));
        }
    }
    return out;
}

void RDM::validate() const {
    const std::size_t n = size();
    if (distances.cols() != n) {
        throw SizeMismatch("RDM must be square");
    }
    distances.validate_finite("RDM");
    for (std::size_t i = 0; i < n; ++i) {
        if (distances(i, i) != 0.0) {
            throw DegenerateRDM("RDM diagonal must be zero");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (distances(i, j) < 0.0 || distances(i, j) != distances(j, i)) {
                throw DegenerateRDM("RDM must be symmetric and nonnegative");
            }
        }
    }
}

RDM compute_rdm(const Matrix& x, DistanceKind kind) {
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    if (n < 2) {
        throw SizeMismatch("compute_rdm: need at least 2 rows");
    }
    x.validate_finite("compute_rdm input");
    RDM rdm{Matrix(n, n)};
    std::vector<double> norms;
    if (kind == DistanceKind::cosine) {
        norms.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (double v : x.row(i)) s += v * v;
            norms[i] = std::sqrt(s);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto ri = x.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto rj = x.row(j);
            double dist = 0.0;
            if (kind == DistanceKind::euclidean) {
                for (std::size_t k = 0; k < d; ++k) {
                    const double diff = ri[k] - rj[k];
                    dist += diff * diff;
                }
                dist = std::sqrt(dist);
            } else {
                double dot = 0.0;
                for (std::size_t k = 0; k < d; ++k) dot += ri[k] * rj[k];
                const double denom = norms[i] * norms[j];
                if (denom == 0.0) {
                    throw ZeroState("compute_rdm: zero row makes cosine distance undefined");
                }
                dist = 1.0 - dot / denom;
                dist = std::max(0.0, dist);
            }
            rdm.distances(i, j) = dist;
            rdm.distances(j, i) = dist;
        }
    }
    return rdm;
}

double rsa_score(const RDM& a, const RDM& b) {
    if (a.size() != b.size()) {
        throw SizeMismatch("rsa_score: RDM sizes " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
    }
    if (a.size() < 3) {
        throw SizeMismatch("rsa_score: need at least 3 samples");
    }
    const auto ua = a.upper_triangle();
    const auto ub = b.upper_triangle();
    try {
        return numcore::spearman(ua, ub);
    } catch (const AllTied&) {
        throw DegenerateRDM("rsa_score: all distances equal in one RDM");
    }
}

}  // namespace trajlab::repsim
