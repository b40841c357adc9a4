#ifndef RISBEAM_RNG_HPP
#define RISBEAM_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

#include "risbeam/geometry.hpp"

// Deterministic randomness helpers. Standard-library distributions are
// implementation-defined, so every draw used in outputs goes through the
// explicit constructions below; results are identical across platforms and
// independent of execution order when streams are derived per work item.

namespace risbeam::rng {

inline std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based stream split: hashes (seed, path...) into an engine seed.
inline std::mt19937_64 derive_stream(std::uint64_t seed,
                                     std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(seed);
    for (const std::uint64_t id : path) {
        h = splitmix64(h ^ (id * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
    }
    return std::mt19937_64(h);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; consumes exactly two draws.
inline double gaussian(std::mt19937_64& engine) {
    const double u1 = 1.0 - uniform01(engine);  // (0, 1]
    const double u2 = uniform01(engine);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Uniform direction on the unit sphere (normalised Gaussian triple).
inline Vec3 unit_sphere(std::mt19937_64& engine) {
    for (;;) {
        const Vec3 g{gaussian(engine), gaussian(engine), gaussian(engine)};
        const double n = norm(g);
        if (n > 1e-9) {
            return g / n;
        }
    }
}

/// Uniform point on the unit circle.
inline void unit_circle(std::mt19937_64& engine, double& c, double& s) {
    const double phi = 2.0 * 3.14159265358979323846 * uniform01(engine);
    c = std::cos(phi);
    s = std::sin(phi);
}

/// Fair coin.
inline bool coin(std::mt19937_64& engine) { return (engine() >> 63) != 0; }

}  // namespace risbeam::rng

#endif
