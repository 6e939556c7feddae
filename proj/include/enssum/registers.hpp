#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "enssum/errors.hpp"

namespace enssum {

// Implementation limits. They keep dense ensembles desk-sized and keep code
// words exact in 64-bit integer arithmetic.
inline constexpr int max_input_spins = 24;
inline constexpr int max_output_spins = 32;

// Sizes of the two spin registers. The input register enumerates the sample
// points (2^n of them); the output register stores function values on a
// fixed-point grid with step 2^-k.
struct RegisterSpec {
    int input_spins;   // n
    int output_spins;  // k

    RegisterSpec(int n, int k) : input_spins(n), output_spins(k) {
        if (n < 1 || n > max_input_spins)
            throw CapacityError("input spin count " + std::to_string(n) + " outside [1, " +
                                std::to_string(max_input_spins) + "]");
        if (k < 1 || k > max_output_spins)
            throw CapacityError("output spin count " + std::to_string(k) + " outside [1, " +
                                std::to_string(max_output_spins) + "]");
    }

    std::uint64_t sample_count() const { return std::uint64_t{1} << input_spins; }
    double precision() const { return std::ldexp(1.0, -output_spins); }

    friend bool operator==(const RegisterSpec&, const RegisterSpec&) = default;
};

// Fixed-point code held in the k output spins. Spin j carries weight 2^(j-1),
// so spin 1 is the least significant bit and the code word is the integer
// index of the value's grid interval.
struct OutputCode {
    std::uint64_t word = 0;
    int width = 0;  // k

    bool bit(int j) const { return (word >> (j - 1)) & 1u; }  // j in [1, width]

    std::vector<std::uint8_t> bits() const {
        std::vector<std::uint8_t> b(static_cast<std::size_t>(width));
        for (int j = 1; j <= width; ++j) b[static_cast<std::size_t>(j - 1)] = bit(j) ? 1 : 0;
        return b;
    }

    friend bool operator==(const OutputCode&, const OutputCode&) = default;
};

// Floor encoding of x in [0,1] onto the k-spin grid: the code of the half-open
// interval [m*2^-k, (m+1)*2^-k) containing x. The top interval is closed, so
// x = 1 maps to the all-ones code.
inline OutputCode encode_value(double x, int k) {
    if (k < 1 || k > max_output_spins)
        throw CapacityError("output spin count " + std::to_string(k) + " outside [1, " +
                            std::to_string(max_output_spins) + "]");
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("function value " + std::to_string(x) + " outside [0,1]");
    // ldexp scales by a power of two without rounding, so the floor below is
    // exactly floor(x / delta).
    const std::uint64_t cells = std::uint64_t{1} << k;
    auto cell = static_cast<std::uint64_t>(std::floor(std::ldexp(x, k)));
    if (cell >= cells) cell = cells - 1;
    return OutputCode{cell, k};
}

// Value represented by a code: 2^-k * sum_j 2^(j-1) b_j. Exact in a double for
// widths up to 32; the image is the grid {0, delta, ..., 1 - delta}.
inline double decode_code(const OutputCode& c) {
    return std::ldexp(static_cast<double>(c.word), -c.width);
}

// Binary digits of (i-1) for an input index i in {1..2^n}, most significant
// digit first. Note the two registers use opposite bit orders: input bits are
// written MSB-first, output spins are numbered from the LSB.
inline std::vector<std::uint8_t> index_to_bits(std::uint64_t i, int n) {
    if (n < 1 || n > max_input_spins)
        throw CapacityError("input spin count " + std::to_string(n) + " outside [1, " +
                            std::to_string(max_input_spins) + "]");
    const std::uint64_t count = std::uint64_t{1} << n;
    if (i < 1 || i > count)
        throw DomainError("input index " + std::to_string(i) + " outside [1, " +
                          std::to_string(count) + "]");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    const std::uint64_t v = i - 1;
    for (int pos = 0; pos < n; ++pos)
        bits[static_cast<std::size_t>(pos)] = (v >> (n - 1 - pos)) & 1u;
    return bits;
}

inline std::uint64_t bits_to_index(const std::vector<std::uint8_t>& bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(max_input_spins))
        throw DomainError("bit sequence length " + std::to_string(bits.size()) +
                          " outside [1, " + std::to_string(max_input_spins) + "]");
    std::uint64_t v = 0;
    for (const auto b : bits) {
        if (b > 1) throw DomainError("bit values must be 0 or 1");
        v = (v << 1) | b;
    }
    return v + 1;
}

}  // namespace enssum
