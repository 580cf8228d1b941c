#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dhci/bitcore.hpp"

namespace dhci {

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::uint64_t state, const std::uint8_t* data, std::size_t size);

// The embedding key K.
struct SecretKey {
    std::vector<std::uint8_t> bytes;
};

SecretKey key_from_hex(std::string_view hex);  // lowercase hex, non-empty
std::string to_hex(const std::vector<std::uint8_t>& bytes);

// FNV-1a over the key bytes, then the message bytes (bits packed MSB-first,
// zero-padded). A zero result is replaced by the offset basis so the stream
// state is never zero.
std::uint64_t derive_seed(const SecretKey& key, const BitStream& message);

// xorshift64* word stream: the raw generator behind strategies, mode
// generation and the uniformity sampler. A zero seed is replaced by the FNV
// offset basis.
class RawStream {
public:
    explicit RawStream(std::uint64_t seed);

    std::uint64_t next_word();
    // Unbiased draw from [0, range) by rejection.
    std::uint64_t next_bounded(std::uint64_t range);
    // Bits peeled from successive words, least significant first.
    bool next_bit();

private:
    std::uint64_t state_;
    std::uint64_t bit_pool_ = 0;
    int bits_left_ = 0;
};

// A strategy: an infinite sequence of update directions in [1, l].
class IndexSource {
public:
    virtual ~IndexSource() = default;
    virtual int next_index() = 0;
};

// Keyed deterministic strategy, uniform on [1, l] by rejection sampling and
// independent of any cover content by construction.
class StrategyStream final : public IndexSource {
public:
    StrategyStream(std::uint64_t seed, int range);

    int next_index() override;
    int range() const { return range_; }

private:
    RawStream raw_;
    int range_;
};

StrategyStream make_strategy(const SecretKey& key, const BitStream& message, int range);

}  // namespace dhci
