#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dhci {

// Widest state for which the decimal bijection is available.
inline constexpr int kMaxDecimalBits = 63;

// An l-bit state of the Boolean system. Bits are indexed 1..l; bit 1 maps to
// the least significant position of the decimal index, and every module
// (truth tables, matrix indices, tests) uses that convention.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int length);              // all bits zero
    Configuration(std::initializer_list<int> bits);  // {x1, x2, ...}

    int length() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const;  // 1-based
    void set_bit(int i, bool value);

    bool operator==(const Configuration&) const = default;

private:
    void check_index(int i) const;
    std::vector<std::uint8_t> bits_;
};

std::uint64_t to_decimal(const Configuration& x);
Configuration from_decimal(std::uint64_t value, int length);

// x with bit i complemented; an involution.
Configuration flip(Configuration x, int i);

int hamming_distance(const Configuration& a, const Configuration& b);

// A finite bit sequence indexed from 0: the carrier for hosts and messages
// before decomposition. Byte packing is MSB-first.
class BitStream {
public:
    BitStream() = default;
    explicit BitStream(std::size_t length) : bits_(length, 0) {}
    explicit BitStream(std::vector<std::uint8_t> bits);

    static BitStream from_bytes(const std::vector<std::uint8_t>& bytes);
    std::vector<std::uint8_t> to_bytes() const;  // zero-padded at the tail

    std::size_t size() const { return bits_.size(); }
    bool bit(std::size_t k) const;
    void set_bit(std::size_t k, bool value);

    bool operator==(const BitStream&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace dhci
