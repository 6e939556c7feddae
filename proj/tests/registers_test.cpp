#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "enssum/registers.hpp"

using namespace enssum;

TEST_CASE("register spec derives sizes exactly") {
    const RegisterSpec spec(3, 4);
    CHECK(spec.sample_count() == 8);
    CHECK(spec.precision() == 0.0625);

    CHECK_THROWS_AS(RegisterSpec(0, 4), CapacityError);
    CHECK_THROWS_AS(RegisterSpec(25, 4), CapacityError);
    CHECK_THROWS_AS(RegisterSpec(3, 0), CapacityError);
    CHECK_THROWS_AS(RegisterSpec(3, 33), CapacityError);
    CHECK(RegisterSpec(24, 32).sample_count() == (1u << 24));
}

TEST_CASE("encode_value follows the floor rule") {
    CHECK(encode_value(0.0, 3) == OutputCode{0, 3});
    // top interval is closed: one maps to the all-ones code
    CHECK(encode_value(1.0, 3) == OutputCode{7, 3});
    CHECK(decode_code(encode_value(1.0, 3)) == 0.875);
    // floor(0.3 / 0.125) = 2 -> bits (0,1,0)
    const OutputCode c = encode_value(0.3, 3);
    CHECK(c.word == 2);
    CHECK(c.bits() == std::vector<std::uint8_t>{0, 1, 0});
    CHECK(decode_code(c) == 0.25);

    CHECK_THROWS_AS(encode_value(-0.1, 3), DomainError);
    CHECK_THROWS_AS(encode_value(1.1, 3), DomainError);
    CHECK_THROWS_AS(encode_value(std::nan(""), 3), DomainError);
    CHECK_THROWS_AS(encode_value(0.5, 0), CapacityError);
}

TEST_CASE("decode_code evaluates the binary weights") {
    CHECK(decode_code(OutputCode{0, 3}) == 0.0);
    CHECK(decode_code(OutputCode{7, 3}) == 0.875);
    CHECK(decode_code(OutputCode{2, 3}) == 0.25);
    // spin 1 is the least significant bit
    CHECK(decode_code(OutputCode{1, 4}) == 0.0625);
}

TEST_CASE("floor rule holds on a dense grid, top interval closed") {
    for (const int k : {1, 4, 9, 16}) {
        const double delta = std::ldexp(1.0, -k);
        for (int step = 0; step <= 20000; ++step) {
            const double x = static_cast<double>(step) / 20000.0;
            const double err = x - decode_code(encode_value(x, k));
            if (x < 1.0) {
                REQUIRE(err >= 0.0);
                REQUIRE(err < delta);
            } else {
                REQUIRE(err == delta);
            }
        }
        // exact grid points sit at the bottom of their interval
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            const double x = std::ldexp(static_cast<double>(m), -k);
            REQUIRE(encode_value(x, k).word == m);
        }
    }
}

TEST_CASE("encode_value is monotone non-decreasing") {
    std::mt19937_64 eng(11);
    for (int round = 0; round < 2000; ++round) {
        const int k = 1 + static_cast<int>(eng() % 16);
        double x = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        double y = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        if (x > y) std::swap(x, y);
        REQUIRE(encode_value(x, k).word <= encode_value(y, k).word);
    }
}

TEST_CASE("decode_code is injective with image on the delta grid") {
    const int k = 10;
    const double delta = std::ldexp(1.0, -k);
    double prev = -1.0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
        const double v = decode_code(OutputCode{m, k});
        REQUIRE(v == static_cast<double>(m) * delta);
        REQUIRE(v > prev);
        prev = v;
    }
}

TEST_CASE("input index bits use the written MSB-first order") {
    CHECK(index_to_bits(1, 2) == std::vector<std::uint8_t>{0, 0});
    CHECK(index_to_bits(4, 2) == std::vector<std::uint8_t>{1, 1});
    // i = 3 -> i-1 = 2 -> binary 10
    CHECK(index_to_bits(3, 2) == std::vector<std::uint8_t>{1, 0});

    CHECK_THROWS_AS(index_to_bits(0, 2), DomainError);
    CHECK_THROWS_AS(index_to_bits(5, 2), DomainError);
    CHECK_THROWS_AS(index_to_bits(1, 0), CapacityError);
}

TEST_CASE("index/bits round trip") {
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t i = 1; i <= (std::uint64_t{1} << n); ++i)
            REQUIRE(bits_to_index(index_to_bits(i, n)) == i);

    CHECK_THROWS_AS(bits_to_index({}), DomainError);
    CHECK_THROWS_AS(bits_to_index({0, 2}), DomainError);
}
