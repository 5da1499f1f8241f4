#pragma once

#include <span>
#include <vector>

namespace trajlab::numcore {

/// Sample Pearson correlation. Throws LengthMismatch for unequal lengths or
/// n < 2, ZeroVariance if either vector is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// Average ranks (1-based); exact ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> x);

/// Spearman rank correlation with average ranks for ties. Throws AllTied if
/// every entry of one vector is equal.
double spearman(std::span<const double> x, std::span<const double> y);

/// Central-moment summary. variance is the population second moment, and the
/// sigma inside skewness / kurtosis is its square root, so the quadruple is
/// internally consistent. excess_kurtosis is Fisher-style (normal -> 0).
struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

/// Throws TooShort for n < 3 and ZeroVariance for constant input. The
/// kurtosis value needs n >= 4 to be statistically meaningful; at n == 3 the
/// formula value is still returned.
Moments moments(std::span<const double> x);

}  // namespace trajlab::numcore
