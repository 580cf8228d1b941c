#include "dhci/dhci.hpp"

#include <stdexcept>
#include <string>

#include "dhci/errors.hpp"

namespace dhci {

void validate_params(const EmbeddingParams& p) {
    if (!(p.lsc_threshold < p.msc_threshold))
        throw std::invalid_argument("thresholds require m < M");
    if (p.iterations < 1) throw std::invalid_argument("iteration count q must be >= 1");
    if (p.similarity_threshold < 0.0 || p.similarity_threshold > 1.0)
        throw std::invalid_argument("similarity threshold must lie in [0, 1]");
    if (p.key.bytes.empty()) throw std::invalid_argument("key must not be empty");
}

namespace {

Configuration lsc_configuration(const DecomposedHost& d) {
    const std::size_t l = d.lsc_positions.size();
    if (l == 0) throw ContractError("host has no LSC positions under these thresholds");
    Configuration phi(static_cast<int>(l));
    for (std::size_t i = 0; i < l; ++i) phi.set_bit(static_cast<int>(i) + 1, d.lsc_bits[i]);
    return phi;
}

std::vector<std::uint8_t> watermark_from(const DecomposedHost& d, const BitStream& message,
                                         const EmbeddingParams& p) {
    const Configuration phi = lsc_configuration(d);
    const int l = phi.length();
    if (!p.mode.accepts(l))
        throw ContractError("mode " + p.mode.name() + " does not instantiate at l = " +
                            std::to_string(l));
    StrategyStream strategy = make_strategy(p.key, message, l);
    const Configuration iterated = iterate(p.mode, strategy, phi, p.iterations);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) bits[static_cast<std::size_t>(i) - 1] = iterated.bit(i) ? 1 : 0;
    return bits;
}

}  // namespace

std::vector<std::uint8_t> compute_watermark(const BitStream& host, const BitStream& message,
                                            const EmbeddingParams& p) {
    validate_params(p);
    return watermark_from(decompose(host, p.signification, p.lsc_threshold, p.msc_threshold),
                          message, p);
}

BitStream dhci_embed(const BitStream& host, const BitStream& message, const EmbeddingParams& p) {
    validate_params(p);
    const DecomposedHost d =
        decompose(host, p.signification, p.lsc_threshold, p.msc_threshold);
    return embed_coefficients(d, watermark_from(d, message, p));
}

CheckResult dhci_check(const BitStream& host, const BitStream& candidate,
                       const BitStream& message, const EmbeddingParams& p) {
    validate_params(p);
    if (candidate.size() != host.size())
        throw ContractError("candidate length " + std::to_string(candidate.size()) +
                            " != host length " + std::to_string(host.size()));
    const DecomposedHost d =
        decompose(host, p.signification, p.lsc_threshold, p.msc_threshold);
    const std::vector<std::uint8_t> expected = watermark_from(d, message, p);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < d.lsc_positions.size(); ++i)
        agree += candidate.bit(d.lsc_positions[i]) == (expected[i] != 0);
    const double similarity =
        static_cast<double>(agree) / static_cast<double>(d.lsc_positions.size());
    return {similarity, similarity >= p.similarity_threshold};
}

}  // namespace dhci
