#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hkit {

/// Deterministic random scalars on top of mt19937_64. The standard
/// distributions are implementation defined, so tests and fixtures draw
/// through these helpers to keep outputs byte-stable across platforms.
inline double rand_unit(std::mt19937_64& rng) {
    // 53 uniform mantissa bits in [0,1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rand_uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * rand_unit(rng);
}

inline double rand_normal(std::mt19937_64& rng) {
    // Box-Muller; one value per call keeps the draw order obvious.
    double u1 = rand_unit(rng);
    double u2 = rand_unit(rng);
    while (u1 <= 0.0) u1 = rand_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
}

inline int rand_index(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

} // namespace hkit
