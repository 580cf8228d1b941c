#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dhci/bitcore.hpp"

namespace dhci {

// Attaches a significance weight u^k to every bit position k of a host
// stream.
class SignificationFunction {
public:
    // u^k = 8 - (k mod 8): bit-plane weights of 8-bit samples, position 0 at
    // the most significant bit of the first byte.
    static SignificationFunction bitplane8();
    // Explicit finite weight table; positions beyond the table are an error.
    static SignificationFunction explicit_table(std::vector<double> weights);

    double value(std::size_t k) const;

private:
    SignificationFunction() = default;

    bool bitplane_ = true;
    std::vector<double> table_;
};

struct SignificanceClasses {
    std::vector<std::size_t> msc;      // u^k >= M: relevant content
    std::vector<std::size_t> lsc;      // u^k <= m: modifiable content
    std::vector<std::size_t> passive;  // m < u^k < M: untouched padding
};

// Positions below total_bits split by the thresholds; each list ascending,
// the three lists partition [0, total_bits).
SignificanceClasses classify(const SignificationFunction& u, double m, double M,
                             std::size_t total_bits);

struct DecomposedHost {
    std::vector<std::size_t> msc_positions, lsc_positions, passive_positions;
    std::vector<std::uint8_t> msc_bits, lsc_bits, passive_bits;
    std::size_t total_bits = 0;
};

DecomposedHost decompose(const BitStream& x, const SignificationFunction& u, double m, double M);

// Inverse of decompose; validates the partition and length invariants.
BitStream recompose(const DecomposedHost& d);

// Recompose with the LSC bits replaced: MSC and passive bits stay identical
// to the host.
BitStream embed_coefficients(const DecomposedHost& d,
                             const std::vector<std::uint8_t>& lsc_replacement);

}  // namespace dhci
