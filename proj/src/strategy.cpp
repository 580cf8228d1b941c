#include "dhci/strategy.hpp"

#include <limits>
#include <stdexcept>

namespace dhci {

std::uint64_t fnv1a(std::uint64_t state, const std::uint8_t* data, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) {
        state ^= data[i];
        state *= kFnvPrime;
    }
    return state;
}

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

SecretKey key_from_hex(std::string_view hex) {
    if (hex.empty()) throw std::invalid_argument("key must not be empty");
    if (hex.size() % 2 != 0) throw std::invalid_argument("key hex must have even length");
    SecretKey key;
    key.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_nibble(hex[i]);
        const int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("key must be lowercase hexadecimal bytes");
        key.bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return key;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::uint64_t derive_seed(const SecretKey& key, const BitStream& message) {
    if (key.bytes.empty()) throw std::invalid_argument("key must not be empty");
    std::uint64_t seed = fnv1a(kFnvOffsetBasis, key.bytes.data(), key.bytes.size());
    const auto packed = message.to_bytes();
    seed = fnv1a(seed, packed.data(), packed.size());
    return seed == 0 ? kFnvOffsetBasis : seed;
}

RawStream::RawStream(std::uint64_t seed) : state_(seed == 0 ? kFnvOffsetBasis : seed) {}

std::uint64_t RawStream::next_word() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ull;
}

std::uint64_t RawStream::next_bounded(std::uint64_t range) {
    if (range == 0) throw std::invalid_argument("range must be >= 1");
    // Reject the top partial bucket: accept w <= 2^64 - (2^64 mod range) - 1.
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    for (;;) {
        const std::uint64_t w = next_word();
        if (w <= limit) return w % range;
    }
}

bool RawStream::next_bit() {
    if (bits_left_ == 0) {
        bit_pool_ = next_word();
        bits_left_ = 64;
    }
    const bool b = bit_pool_ & 1u;
    bit_pool_ >>= 1;
    --bits_left_;
    return b;
}

StrategyStream::StrategyStream(std::uint64_t seed, int range) : raw_(seed), range_(range) {
    if (range < 1) throw std::invalid_argument("strategy range must be >= 1");
}

int StrategyStream::next_index() {
    return static_cast<int>(raw_.next_bounded(static_cast<std::uint64_t>(range_))) + 1;
}

StrategyStream make_strategy(const SecretKey& key, const BitStream& message, int range) {
    return StrategyStream(derive_seed(key, message), range);
}

}  // namespace dhci
