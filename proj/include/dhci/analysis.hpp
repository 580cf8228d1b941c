#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dhci/markov.hpp"
#include "dhci/modes.hpp"

namespace dhci {

// (1 - alpha) quantile of the chi-square distribution with `dof` degrees of
// freedom, via the regularized lower incomplete gamma.
double chi_square_critical(int dof, double alpha);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double critical = 0.0;  // alpha = 0.01
    bool pass = false;
};

// Draw `samples` l-bit states uniformly (rejection sampling from a raw stream
// seeded by sampler_seed), push each through q asynchronous steps driven by
// the fixed (key, message) strategy, and test the output histogram against
// uniform at alpha = 0.01. Requires l <= kMaxAnalysisBits and
// samples >= 10 * 2^l.
ChiSquareResult uniformity_experiment(const Mode& mode, int l, const SecretKey& key,
                                      const BitStream& message, std::uint64_t q,
                                      std::uint64_t samples, std::uint64_t sampler_seed);

// Strong connectivity of the iteration graph: the Devaney-chaos criterion for
// the asynchronous dynamics.
bool chaos_security_verdict(const ModeInstance& f);

struct ExperimentParams {
    SecretKey key{{0x00}};
    BitStream message;
    std::uint64_t q = 17;
    std::uint64_t samples = 0;  // 0: 100 * 2^n
    std::uint64_t sampler_seed = 1;
    double epsilon = 0.01;
    std::uint64_t t_max = 0;  // 0: 4^n
};

struct SecurityReport {
    std::string mode_name;
    int n = 0;
    bool strongly_connected = false;
    bool doubly_stochastic = false;
    std::optional<std::uint64_t> period;  // absent when not strongly connected
    bool primitive = false;
    std::optional<std::uint64_t> mixing_steps;
    double final_tv = 0.0;
    ChiSquareResult chi_square;
    bool chaos_secure = false;             // = strongly_connected
    bool stego_secure_hypotheses = false;  // = strongly_connected && doubly_stochastic
};

SecurityReport full_report(const Mode& mode, int n, const ExperimentParams& params);

std::string report_to_json(const SecurityReport& r);

}  // namespace dhci
