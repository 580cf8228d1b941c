#include "dhci/bitcore.hpp"

#include <stdexcept>
#include <string>

namespace dhci {

Configuration::Configuration(int length) {
    if (length < 1) throw std::invalid_argument("configuration length must be >= 1");
    bits_.assign(static_cast<std::size_t>(length), 0);
}

Configuration::Configuration(std::initializer_list<int> bits) {
    if (bits.size() == 0) throw std::invalid_argument("configuration length must be >= 1");
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(b ? 1 : 0);
}

void Configuration::check_index(int i) const {
    if (i < 1 || i > length())
        throw std::out_of_range("bit index " + std::to_string(i) + " outside [1, " +
                                std::to_string(length()) + "]");
}

bool Configuration::bit(int i) const {
    check_index(i);
    return bits_[static_cast<std::size_t>(i - 1)] != 0;
}

void Configuration::set_bit(int i, bool value) {
    check_index(i);
    bits_[static_cast<std::size_t>(i - 1)] = value ? 1 : 0;
}

std::uint64_t to_decimal(const Configuration& x) {
    if (x.length() > kMaxDecimalBits)
        throw std::out_of_range("configuration too wide for decimal indexing");
    std::uint64_t value = 0;
    for (int i = x.length(); i >= 1; --i) value = (value << 1) | (x.bit(i) ? 1u : 0u);
    return value;
}

Configuration from_decimal(std::uint64_t value, int length) {
    if (length < 1 || length > kMaxDecimalBits)
        throw std::out_of_range("length outside [1, " + std::to_string(kMaxDecimalBits) + "]");
    if (length < 64 && value >> length)
        throw std::out_of_range("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(length) + " bits");
    Configuration x(length);
    for (int i = 1; i <= length; ++i) x.set_bit(i, (value >> (i - 1)) & 1u);
    return x;
}

Configuration flip(Configuration x, int i) {
    x.set_bit(i, !x.bit(i));
    return x;
}

int hamming_distance(const Configuration& a, const Configuration& b) {
    if (a.length() != b.length()) throw std::invalid_argument("length mismatch");
    int d = 0;
    for (int i = 1; i <= a.length(); ++i) d += a.bit(i) != b.bit(i);
    return d;
}

BitStream::BitStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b = b ? 1 : 0;
}

BitStream BitStream::from_bytes(const std::vector<std::uint8_t>& bytes) {
    BitStream s;
    s.bits_.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes)
        for (int j = 7; j >= 0; --j) s.bits_.push_back((byte >> j) & 1u);
    return s;
}

std::vector<std::uint8_t> BitStream::to_bytes() const {
    std::vector<std::uint8_t> bytes((bits_.size() + 7) / 8, 0);
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k]) bytes[k / 8] |= static_cast<std::uint8_t>(1u << (7 - k % 8));
    return bytes;
}

bool BitStream::bit(std::size_t k) const {
    if (k >= bits_.size()) throw std::out_of_range("bit position out of range");
    return bits_[k] != 0;
}

void BitStream::set_bit(std::size_t k, bool value) {
    if (k >= bits_.size()) throw std::out_of_range("bit position out of range");
    bits_[k] = value ? 1 : 0;
}

}  // namespace dhci
