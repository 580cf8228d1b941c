#include "dhci/significance.hpp"

#include <stdexcept>
#include <string>

#include "dhci/errors.hpp"

namespace dhci {

SignificationFunction SignificationFunction::bitplane8() { return SignificationFunction(); }

SignificationFunction SignificationFunction::explicit_table(std::vector<double> weights) {
    SignificationFunction u;
    u.bitplane_ = false;
    u.table_ = std::move(weights);
    return u;
}

double SignificationFunction::value(std::size_t k) const {
    if (bitplane_) return 8.0 - static_cast<double>(k % 8);
    if (k >= table_.size())
        throw std::out_of_range("signification table has no weight for position " +
                                std::to_string(k));
    return table_[k];
}

SignificanceClasses classify(const SignificationFunction& u, double m, double M,
                             std::size_t total_bits) {
    if (!(m < M)) throw std::invalid_argument("thresholds require m < M");
    SignificanceClasses c;
    for (std::size_t k = 0; k < total_bits; ++k) {
        const double w = u.value(k);
        if (w >= M)
            c.msc.push_back(k);
        else if (w <= m)
            c.lsc.push_back(k);
        else
            c.passive.push_back(k);
    }
    return c;
}

DecomposedHost decompose(const BitStream& x, const SignificationFunction& u, double m, double M) {
    const SignificanceClasses c = classify(u, m, M, x.size());
    DecomposedHost d;
    d.total_bits = x.size();
    d.msc_positions = c.msc;
    d.lsc_positions = c.lsc;
    d.passive_positions = c.passive;
    auto gather = [&x](const std::vector<std::size_t>& positions) {
        std::vector<std::uint8_t> bits;
        bits.reserve(positions.size());
        for (std::size_t k : positions) bits.push_back(x.bit(k) ? 1 : 0);
        return bits;
    };
    d.msc_bits = gather(d.msc_positions);
    d.lsc_bits = gather(d.lsc_positions);
    d.passive_bits = gather(d.passive_positions);
    return d;
}

namespace {

void validate_decomposition(const DecomposedHost& d) {
    if (d.msc_positions.size() != d.msc_bits.size() ||
        d.lsc_positions.size() != d.lsc_bits.size() ||
        d.passive_positions.size() != d.passive_bits.size())
        throw ContractError("position/bit vector length mismatch");
    // The three index sets must partition [0, total_bits).
    std::vector<std::uint8_t> seen(d.total_bits, 0);
    std::size_t covered = 0;
    for (const auto* positions : {&d.msc_positions, &d.lsc_positions, &d.passive_positions}) {
        for (std::size_t k : *positions) {
            if (k >= d.total_bits) throw ContractError("position outside the host");
            if (seen[k]) throw ContractError("position " + std::to_string(k) + " assigned twice");
            seen[k] = 1;
            ++covered;
        }
    }
    if (covered != d.total_bits) throw ContractError("positions do not cover the host");
}

}  // namespace

BitStream recompose(const DecomposedHost& d) {
    validate_decomposition(d);
    BitStream x(d.total_bits);
    for (std::size_t i = 0; i < d.msc_positions.size(); ++i)
        x.set_bit(d.msc_positions[i], d.msc_bits[i]);
    for (std::size_t i = 0; i < d.lsc_positions.size(); ++i)
        x.set_bit(d.lsc_positions[i], d.lsc_bits[i]);
    for (std::size_t i = 0; i < d.passive_positions.size(); ++i)
        x.set_bit(d.passive_positions[i], d.passive_bits[i]);
    return x;
}

BitStream embed_coefficients(const DecomposedHost& d,
                             const std::vector<std::uint8_t>& lsc_replacement) {
    if (lsc_replacement.size() != d.lsc_positions.size())
        throw ContractError("replacement holds " + std::to_string(lsc_replacement.size()) +
                            " bits, LSC set holds " + std::to_string(d.lsc_positions.size()));
    DecomposedHost replaced = d;
    replaced.lsc_bits = lsc_replacement;
    for (auto& b : replaced.lsc_bits) b = b ? 1 : 0;
    return recompose(replaced);
}

}  // namespace dhci
