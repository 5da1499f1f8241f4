#include "trajlab/numcore/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trajlab/errors.hpp"

namespace trajlab::numcore {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("pearson: " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw LengthMismatch("pearson: need at least 2 samples");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw ZeroVariance("pearson: constant input vector");
    }
    double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        // positions i..j (0-based) share the mean 1-based rank
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw LengthMismatch("spearman: " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw LengthMismatch("spearman: need at least 2 samples");
    }
    auto all_equal = [](std::span<const double> v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] != v[0]) return false;
        }
        return true;
    };
    if (all_equal(x) || all_equal(y)) {
        throw AllTied("spearman: all entries of one vector are equal");
    }
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

Moments moments(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 3) {
        throw TooShort("moments: need at least 3 samples, got " + std::to_string(n));
    }
    Moments m;
    for (double v : x) m.mean += v;
    m.mean /= static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - m.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    if (m2 == 0.0) {
        throw ZeroVariance("moments: constant input");
    }
    m.variance = m2;
    const double sigma = std::sqrt(m2);
    m.skewness = m3 / (sigma * sigma * sigma);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    return m;
}

}  // namespace trajlab::numcore
