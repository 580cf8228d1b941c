#pragma once

#include <cstdint>
#include <vector>

#include "dhci/bitcore.hpp"
#include "dhci/modes.hpp"
#include "dhci/significance.hpp"
#include "dhci/strategy.hpp"

namespace dhci {

struct EmbeddingParams {
    Mode mode = Mode::negation();
    SignificationFunction signification = SignificationFunction::bitplane8();
    double lsc_threshold = 2.0;          // m
    double msc_threshold = 6.0;          // M
    std::uint64_t iterations = 17;       // q
    SecretKey key;
    double similarity_threshold = 0.95;  // tau
};

// m < M, q >= 1, tau in [0, 1], key non-empty.
void validate_params(const EmbeddingParams& p);

// The q-th asynchronous iterate of the host's LSC vector under the mode
// instantiated at l = |LSC| and the (key, message)-derived strategy. Returns
// l bits aligned with the LSC positions.
std::vector<std::uint8_t> compute_watermark(const BitStream& host, const BitStream& message,
                                            const EmbeddingParams& p);

// Replace the host's LSC bits with the watermark; output length equals input
// length and all non-LSC bits are untouched.
BitStream dhci_embed(const BitStream& host, const BitStream& message, const EmbeddingParams& p);

struct CheckResult {
    double similarity = 0.0;
    bool marked = false;
};

// Non-blind verification: recompute the watermark from the original host and
// report the fraction of LSC positions where the candidate agrees.
CheckResult dhci_check(const BitStream& host, const BitStream& candidate,
                       const BitStream& message, const EmbeddingParams& p);

}  // namespace dhci
