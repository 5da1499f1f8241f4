#pragma once

#include <cstdint>
#include <vector>

namespace trajlab::numcore {

/// xoshiro256++ generator seeded through SplitMix64, so a 64-bit seed fully
/// determines every stream. The algorithms are pinned here (not delegated to
/// std::) because <random> distributions are implementation-defined and the
/// output files this feeds must be byte-identical across toolchains.
///
/// Derived draws are fixed too:
///   uniform01      = (next() >> 11) * 2^-53            in [0, 1)
///   uniform_open01 = ((next() >> 11) + 1) * 2^-53      in (0, 1]
///   normal         = Box-Muller on (uniform_open01, uniform01),
///                    returning r*cos(theta) first and caching r*sin(theta)
///   below(n)       = next() % n
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);

    std::uint64_t next();

    double uniform01();
    double uniform_open01();
    double normal();
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates, iterating i = n-1 .. 1 with j = below(i + 1).
    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace trajlab::numcore
