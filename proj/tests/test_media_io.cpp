#include <doctest.h>

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "dhci/errors.hpp"
#include "dhci/media_io.hpp"
#include "dhci/significance.hpp"

using dhci::BitStream;
using dhci::bits_to_image;
using dhci::encode_pgm;
using dhci::GrayImage;
using dhci::image_to_bits;
using dhci::parse_pgm;
using dhci::PgmError;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

PgmError::Code code_of(const std::vector<std::uint8_t>& data) {
    try {
        parse_pgm(data);
    } catch (const PgmError& e) {
        return e.code;
    }
    FAIL("expected a PgmError");
    return PgmError::Code::BadMagic;
}

}  // namespace

TEST_CASE("minimal PGM parses") {
    const GrayImage img = parse_pgm(bytes_of(std::string("P5 1 1 255 ") + '\0'));
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.pixels == std::vector<std::uint8_t>{0});
}

TEST_CASE("header comments are skipped") {
    const std::string text = "P5\n# a comment\n2 1\n# another\n255\n\x11\x22";
    const GrayImage img = parse_pgm(bytes_of(text));
    CHECK(img.width == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{0x11, 0x22});
}

TEST_CASE("each malformed input reports its own error code") {
    CHECK(code_of(bytes_of("P6 1 1 255 x")) == PgmError::Code::BadMagic);
    CHECK(code_of(bytes_of("P5 1 1 65535 xx")) == PgmError::Code::UnsupportedDepth);
    CHECK(code_of(bytes_of("P5 2 2 255 abc")) == PgmError::Code::Truncated);
    CHECK(code_of(bytes_of("P5 a b 255 x")) == PgmError::Code::BadHeader);
}

TEST_CASE("encode emits the documented header") {
    GrayImage px(1, 1);
    px.pixels[0] = 0xAB;
    const auto data = encode_pgm(px);
    // "P5\n1 1\n255\n" is 11 header bytes plus the single pixel.
    CHECK(data.size() == 12);
    CHECK(std::string(data.begin(), data.begin() + 11) == "P5\n1 1\n255\n");
    CHECK(data.back() == 0xAB);
}

TEST_CASE("PGM round trip is byte-identical") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 16);
        const int h = 1 + static_cast<int>(rng() % 16);
        GrayImage img(w, h);
        for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
        const auto encoded = encode_pgm(img);
        CHECK(parse_pgm(encoded) == img);
        CHECK(encode_pgm(parse_pgm(encoded)) == encoded);
    }
}

TEST_CASE("file round trip on 100 random images") {
    const std::string path = "test_media_roundtrip.pgm";
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 32);
        const int h = 1 + static_cast<int>(rng() % 32);
        GrayImage img(w, h);
        for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
        dhci::write_pgm(img, path);
        CHECK(dhci::read_pgm(path) == img);
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(dhci::read_pgm(path), dhci::IoError);
}

TEST_CASE("zero dimensions are rejected at construction") {
    CHECK_THROWS_AS(GrayImage(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(2, 2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("pixels convert to bits MSB-first") {
    GrayImage img(2, 1);
    img.pixels = {0x80, 0x03};
    const BitStream bits = image_to_bits(img);
    REQUIRE(bits.size() == 16);
    CHECK(bits.bit(0));
    for (int k = 1; k < 8; ++k) CHECK_FALSE(bits.bit(k));
    for (int k = 8; k < 14; ++k) CHECK_FALSE(bits.bit(k));
    CHECK(bits.bit(14));
    CHECK(bits.bit(15));

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 8);
        const int h = 1 + static_cast<int>(rng() % 8);
        GrayImage random_img(w, h);
        for (auto& p : random_img.pixels) p = static_cast<std::uint8_t>(rng());
        CHECK(bits_to_image(image_to_bits(random_img), w, h) == random_img);
    }

    CHECK_THROWS_AS(bits_to_image(BitStream(15), 2, 1), std::invalid_argument);
}

TEST_CASE("default thresholds select the two low-order bits of every pixel") {
    const auto c = dhci::classify(dhci::SignificationFunction::bitplane8(), 2, 6, 4 * 8);
    std::vector<std::size_t> expected;
    for (std::size_t byte = 0; byte < 4; ++byte) {
        expected.push_back(8 * byte + 6);
        expected.push_back(8 * byte + 7);
    }
    CHECK(c.lsc == expected);
}
