#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhci/bitcore.hpp"

namespace dhci {

// 8-bit grayscale image, row-major.
struct GrayImage {
    GrayImage(int width, int height);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width;
    int height;
    std::vector<std::uint8_t> pixels;

    bool operator==(const GrayImage&) const = default;
};

// Binary PGM (P5), maxval 255 only; '#' comments allowed in the header.
GrayImage parse_pgm(const std::vector<std::uint8_t>& data);
GrayImage read_pgm(const std::string& path);

// Header "P5\n<width> <height>\n255\n" followed by the raw bytes.
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
void write_pgm(const GrayImage& img, const std::string& path);

// Bit k of the stream is bit (7 - (k mod 8)) of pixel floor(k/8), MSB first,
// so the bit-plane signification lines up with pixel bit weights.
BitStream image_to_bits(const GrayImage& img);
GrayImage bits_to_image(const BitStream& bits, int width, int height);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& data);

}  // namespace dhci
