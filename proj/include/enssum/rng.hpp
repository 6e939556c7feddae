#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace enssum {

// splitmix64 mixer; used to derive decorrelated stream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed for stream `index` of a master seed. Nearby master seeds
// and nearby indices give unrelated streams.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

// Uniform double in [0,1) from the top 53 bits of the engine output.
inline double uniform_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller. Hand-rolled instead of
// std::normal_distribution so sequences are identical across standard library
// implementations; mt19937_64 itself is fully specified.
inline double standard_normal(std::mt19937_64& eng) {
    double u1 = uniform_unit(eng);
    const double u2 = uniform_unit(eng);
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace enssum
