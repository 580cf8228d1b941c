#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dhci/bitcore.hpp"

using dhci::BitStream;
using dhci::Configuration;
using dhci::flip;
using dhci::from_decimal;
using dhci::hamming_distance;
using dhci::to_decimal;

TEST_CASE("to_decimal: bit 1 is the least significant position") {
    CHECK(to_decimal(Configuration{0, 0}) == 0);
    CHECK(to_decimal(Configuration{1, 0}) == 1);
    CHECK(to_decimal(Configuration{1, 1, 0, 1}) == 11);  // 1 + 2 + 8
}

TEST_CASE("from_decimal inverts to_decimal") {
    CHECK(from_decimal(0, 3) == Configuration{0, 0, 0});
    CHECK(from_decimal(1, 3) == Configuration{1, 0, 0});
    CHECK(from_decimal(11, 4) == Configuration{1, 1, 0, 1});
    CHECK_THROWS_AS(from_decimal(8, 3), std::out_of_range);
    CHECK_THROWS_AS(from_decimal(0, 0), std::out_of_range);
}

TEST_CASE("decimal bijection, exhaustive through l = 12") {
    for (int l = 1; l <= 12; ++l) {
        const std::uint64_t states = std::uint64_t{1} << l;
        for (std::uint64_t v = 0; v < states; ++v) {
            const Configuration x = from_decimal(v, l);
            REQUIRE(x.length() == l);
            REQUIRE(to_decimal(x) == v);
            REQUIRE(from_decimal(to_decimal(x), l) == x);
        }
    }
}

TEST_CASE("flip complements exactly one bit and is an involution") {
    CHECK(flip(Configuration{0, 0}, 1) == Configuration{1, 0});
    CHECK(flip(Configuration{1, 1}, 2) == Configuration{1, 0});
    CHECK(flip(flip(Configuration{1, 0, 1}, 2), 2) == Configuration{1, 0, 1});
    CHECK_THROWS_AS(flip(Configuration{1, 0}, 3), std::out_of_range);
    CHECK_THROWS_AS(flip(Configuration{1, 0}, 0), std::out_of_range);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int l = 1 + static_cast<int>(rng() % 24);
        Configuration x(l);
        for (int i = 1; i <= l; ++i) x.set_bit(i, rng() & 1);
        const int i = 1 + static_cast<int>(rng() % l);
        const Configuration y = flip(x, i);
        CHECK(hamming_distance(x, y) == 1);
        CHECK(flip(y, i) == x);
    }
}

TEST_CASE("bit streams pack and unpack MSB-first") {
    const BitStream s = BitStream::from_bytes({0x80, 0x03});
    REQUIRE(s.size() == 16);
    CHECK(s.bit(0));
    CHECK_FALSE(s.bit(1));
    CHECK(s.bit(14));
    CHECK(s.bit(15));
    CHECK(s.to_bytes() == std::vector<std::uint8_t>{0x80, 0x03});

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> bytes(1 + rng() % 64);
        for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
        const BitStream round = BitStream::from_bytes(bytes);
        CHECK(round.size() == bytes.size() * 8);
        CHECK(round.to_bytes() == bytes);
    }
}

TEST_CASE("bit stream indexing is bounds-checked") {
    BitStream s(4);
    CHECK_THROWS_AS(s.bit(4), std::out_of_range);
    CHECK_THROWS_AS(s.set_bit(5, true), std::out_of_range);
}

TEST_CASE("partial trailing bytes are zero-padded") {
    BitStream s(10);
    s.set_bit(0, true);
    s.set_bit(9, true);
    CHECK(s.to_bytes() == std::vector<std::uint8_t>{0x80, 0x40});
}

TEST_CASE("decimal indexing at the width limit") {
    const std::uint64_t top = (std::uint64_t{1} << 63) - 1;  // all 63 bits set
    CHECK(to_decimal(from_decimal(top, 63)) == top);
    Configuration wide(64);
    CHECK_THROWS_AS(to_decimal(wide), std::out_of_range);
    CHECK_THROWS_AS(from_decimal(0, 64), std::out_of_range);
}
