#include "dhci/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "dhci/errors.hpp"
#include "dhci/strategy.hpp"

namespace dhci {

namespace {

// Regularized lower incomplete gamma P(a, x): series for x < a + 1, Lentz
// continued fraction for the complement otherwise.
double regularized_gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("bad incomplete gamma arguments");
    if (x == 0.0) return 0.0;
    const double log_gamma_a = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - log_gamma_a);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + a * std::log(x) - log_gamma_a) * h;
    return 1.0 - q;
}

}  // namespace

double chi_square_critical(int dof, double alpha) {
    if (dof < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
    if (alpha <= 0.0 || alpha >= 1.0) throw std::invalid_argument("alpha must lie in (0, 1)");
    const double target = 1.0 - alpha;
    const double a = dof / 2.0;
    double lo = 0.0;
    double hi = dof + 10.0 * std::sqrt(2.0 * dof) + 10.0;
    while (regularized_gamma_p(a, hi / 2.0) < target) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (regularized_gamma_p(a, mid / 2.0) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ChiSquareResult uniformity_experiment(const Mode& mode, int l, const SecretKey& key,
                                      const BitStream& message, std::uint64_t q,
                                      std::uint64_t samples, std::uint64_t sampler_seed) {
    if (l < 1 || l > kMaxAnalysisBits)
        throw CapacityError("uniformity experiment limited to l <= " +
                            std::to_string(kMaxAnalysisBits));
    const std::uint64_t states = std::uint64_t{1} << l;
    if (samples < 10 * states)
        throw ContractError("need at least 10 * 2^l = " + std::to_string(10 * states) +
                            " samples, got " + std::to_string(samples));

    const ModeInstance f = mode.instantiate(l);

    // The strategy is fixed by (key, message); every sample replays the same
    // first q directions.
    std::vector<int> directions;
    directions.reserve(q);
    {
        StrategyStream s = make_strategy(key, message, l);
        for (std::uint64_t t = 0; t < q; ++t) directions.push_back(s.next_index());
    }

    RawStream sampler(sampler_seed);
    std::vector<std::uint64_t> observed(states, 0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t x = sampler.next_bounded(states);
        for (int k : directions) x = component_update_decimal(f, k, x);
        ++observed[x];
    }

    const double expected = static_cast<double>(samples) / static_cast<double>(states);
    double statistic = 0.0;
    for (std::uint64_t count : observed) {
        const double diff = static_cast<double>(count) - expected;
        statistic += diff * diff / expected;
    }
    ChiSquareResult result;
    result.statistic = statistic;
    result.dof = static_cast<int>(states) - 1;
    result.critical = chi_square_critical(result.dof, 0.01);
    result.pass = statistic < result.critical;
    return result;
}

bool chaos_security_verdict(const ModeInstance& f) {
    return is_strongly_connected(build_iteration_graph(f));
}

SecurityReport full_report(const Mode& mode, int n, const ExperimentParams& params) {
    if (n < 1 || n > kMaxAnalysisBits)
        throw CapacityError("analysis limited to n <= " + std::to_string(kMaxAnalysisBits) +
                            ", got n = " + std::to_string(n));
    const ModeInstance f = mode.instantiate(n);

    SecurityReport r;
    r.mode_name = mode.name();
    r.n = n;
    r.strongly_connected = is_strongly_connected(build_iteration_graph(f));
    const MarkovMatrix m = build_markov(f);
    r.doubly_stochastic = is_doubly_stochastic(m);
    if (r.strongly_connected) {
        const PeriodResult pr = period_and_primitivity(m);
        r.period = pr.period;
        r.primitive = pr.primitive;
    }
    const std::uint64_t t_max = params.t_max ? params.t_max : default_t_max(n);
    const MixingResult mix = mixing_time(m, params.epsilon, t_max);
    r.mixing_steps = mix.steps;
    r.final_tv = mix.final_tv;
    const std::uint64_t samples =
        params.samples ? params.samples : 100 * (std::uint64_t{1} << n);
    r.chi_square = uniformity_experiment(mode, n, params.key, params.message, params.q, samples,
                                         params.sampler_seed);
    r.chaos_secure = r.strongly_connected;
    r.stego_secure_hypotheses = r.strongly_connected && r.doubly_stochastic;
    return r;
}

std::string report_to_json(const SecurityReport& r) {
    nlohmann::ordered_json doc;
    doc["mode"] = r.mode_name;
    doc["n"] = r.n;
    doc["strongly_connected"] = r.strongly_connected;
    doc["doubly_stochastic"] = r.doubly_stochastic;
    if (r.period)
        doc["period"] = *r.period;
    else
        doc["period"] = nullptr;
    doc["primitive"] = r.primitive;
    if (r.mixing_steps)
        doc["mixing_q"] = *r.mixing_steps;
    else
        doc["mixing_q"] = nullptr;
    doc["final_tv"] = r.final_tv;
    doc["chi_square"] = r.chi_square.statistic;
    doc["chi_square_dof"] = r.chi_square.dof;
    doc["chi_square_critical"] = r.chi_square.critical;
    doc["chi_square_pass"] = r.chi_square.pass;
    doc["chaos_secure"] = r.chaos_secure;
    doc["stego_secure_hypotheses"] = r.stego_secure_hypotheses;
    return doc.dump();
}

}  // namespace dhci
