#include "dhci/media_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "dhci/errors.hpp"

namespace dhci {

GrayImage::GrayImage(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    pixels.assign(static_cast<std::size_t>(w) * h, 0);
}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> px)
    : width(w), height(h), pixels(std::move(px)) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    if (pixels.size() != static_cast<std::size_t>(w) * h)
        throw std::invalid_argument("pixel count does not match dimensions");
}

namespace {

// Header tokens are separated by whitespace; '#' starts a comment running to
// end of line.
struct HeaderScanner {
    const std::vector<std::uint8_t>& data;
    std::size_t pos = 0;

    bool is_space(std::uint8_t c) const {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
    }

    void skip_separators() {
        while (pos < data.size()) {
            if (is_space(data[pos])) {
                ++pos;
            } else if (data[pos] == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long next_number() {
        skip_separators();
        if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
            throw PgmError(PgmError::Code::BadHeader, "expected a decimal header field");
        long value = 0;
        while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
            value = value * 10 + (data[pos] - '0');
            if (value > 1 << 30) throw PgmError(PgmError::Code::BadHeader, "header field overflow");
            ++pos;
        }
        return value;
    }
};

}  // namespace

GrayImage parse_pgm(const std::vector<std::uint8_t>& data) {
    if (data.size() < 2 || data[0] != 'P' || data[1] != '5')
        throw PgmError(PgmError::Code::BadMagic, "not a binary PGM (missing P5 magic)");
    HeaderScanner scan{data, 2};
    const long width = scan.next_number();
    const long height = scan.next_number();
    const long maxval = scan.next_number();
    if (width < 1 || height < 1)
        throw PgmError(PgmError::Code::BadHeader, "dimensions must be positive");
    if (maxval != 255)
        throw PgmError(PgmError::Code::UnsupportedDepth,
                       "maxval " + std::to_string(maxval) + " unsupported (only 255)");
    // Exactly one whitespace byte separates the header from the raster.
    if (scan.pos >= data.size() || !scan.is_space(data[scan.pos]))
        throw PgmError(PgmError::Code::BadHeader, "missing separator before pixel data");
    ++scan.pos;
    const std::size_t expected = static_cast<std::size_t>(width) * height;
    if (data.size() - scan.pos < expected)
        throw PgmError(PgmError::Code::Truncated,
                       "pixel data truncated: need " + std::to_string(expected) + " bytes, have " +
                           std::to_string(data.size() - scan.pos));
    return GrayImage(static_cast<int>(width), static_cast<int>(height),
                     std::vector<std::uint8_t>(data.begin() + scan.pos,
                                               data.begin() + scan.pos + expected));
}

GrayImage read_pgm(const std::string& path) { return parse_pgm(read_file(path)); }

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    const std::string header = "P5\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

void write_pgm(const GrayImage& img, const std::string& path) {
    write_file(path, encode_pgm(img));
}

BitStream image_to_bits(const GrayImage& img) { return BitStream::from_bytes(img.pixels); }

GrayImage bits_to_image(const BitStream& bits, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be positive");
    if (bits.size() != static_cast<std::size_t>(width) * height * 8)
        throw std::invalid_argument("bit count does not match 8 * width * height");
    return GrayImage(width, height, bits.to_bytes());
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw IoError("write failed: " + path);
    }
}

}  // namespace dhci
