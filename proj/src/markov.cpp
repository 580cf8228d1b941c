#include "dhci/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dhci/errors.hpp"

namespace dhci {

MarkovMatrix::MarkovMatrix(int n, std::vector<std::vector<Entry>> rows)
    : n_(n), rows_(std::move(rows)) {
    if (n_ < 1 || n_ > kMaxAnalysisBits) throw std::invalid_argument("matrix size out of range");
    if (rows_.size() != states()) throw std::invalid_argument("row count != 2^n");
    for (const auto& row : rows_) {
        std::uint64_t sum = 0;
        for (const Entry& e : row) {
            if (e.target >= states()) throw std::invalid_argument("target outside [0, 2^n)");
            sum += e.count;
        }
        if (sum != static_cast<std::uint64_t>(n_))
            throw std::invalid_argument("row counts must sum to n");
    }
}

std::uint32_t MarkovMatrix::count(std::uint64_t j, std::uint64_t i) const {
    for (const Entry& e : rows_[j])
        if (e.target == i) return e.count;
    return 0;
}

std::vector<std::uint64_t> MarkovMatrix::column_counts() const {
    std::vector<std::uint64_t> sums(states(), 0);
    for (const auto& row : rows_)
        for (const Entry& e : row) sums[e.target] += e.count;
    return sums;
}

std::vector<std::vector<std::uint32_t>> MarkovMatrix::dense_counts() const {
    std::vector<std::vector<std::uint32_t>> dense(states(),
                                                  std::vector<std::uint32_t>(states(), 0));
    for (std::uint64_t j = 0; j < states(); ++j)
        for (const Entry& e : rows_[j]) dense[j][e.target] = e.count;
    return dense;
}

MarkovMatrix build_markov(const ModeInstance& f) {
    validate_instance(f);
    if (f.n > kMaxAnalysisBits)
        throw CapacityError("Markov matrix limited to n <= " + std::to_string(kMaxAnalysisBits) +
                            ", got n = " + std::to_string(f.n));
    const std::uint64_t states = std::uint64_t{1} << f.n;
    std::vector<std::vector<MarkovMatrix::Entry>> rows(states);
    std::vector<std::uint32_t> targets;
    for (std::uint64_t j = 0; j < states; ++j) {
        targets.clear();
        for (int k = 1; k <= f.n; ++k)
            targets.push_back(static_cast<std::uint32_t>(component_update_decimal(f, k, j)));
        std::sort(targets.begin(), targets.end());
        auto& row = rows[j];
        for (std::size_t a = 0; a < targets.size();) {
            std::size_t b = a;
            while (b < targets.size() && targets[b] == targets[a]) ++b;
            row.push_back({targets[a], static_cast<std::uint32_t>(b - a)});
            a = b;
        }
    }
    return MarkovMatrix(f.n, std::move(rows));
}

bool is_doubly_stochastic(const MarkovMatrix& m) {
    const auto sums = m.column_counts();
    return std::all_of(sums.begin(), sums.end(),
                       [&m](std::uint64_t s) { return s == static_cast<std::uint64_t>(m.n()); });
}

PeriodResult period_and_primitivity(const MarkovMatrix& m) {
    const std::uint64_t states = m.states();
    std::vector<std::vector<std::uint32_t>> adj(states);
    for (std::uint64_t j = 0; j < states; ++j)
        for (const auto& e : m.row(j)) adj[j].push_back(e.target);
    if (!is_strongly_connected(adj))
        throw ContractError("period undefined: support graph is not strongly connected");

    // BFS levels from state 0; on a strongly connected graph the gcd of
    // (level[u] + 1 - level[v]) over all arcs equals the gcd of all cycle
    // lengths.
    std::vector<std::int64_t> level(states, -1);
    std::vector<std::uint32_t> frontier{0};
    level[0] = 0;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t u : frontier)
            for (std::uint32_t v : adj[u])
                if (level[v] < 0) {
                    level[v] = level[u] + 1;
                    next.push_back(v);
                }
        frontier = std::move(next);
    }
    std::uint64_t g = 0;
    for (std::uint64_t u = 0; u < states; ++u)
        for (std::uint32_t v : adj[u])
            g = std::gcd(g, static_cast<std::uint64_t>(std::llabs(level[u] + 1 - level[v])));
    return {g, g == 1};
}

DistributionVector uniform_distribution(int n) {
    const std::uint64_t states = std::uint64_t{1} << n;
    return DistributionVector(states, 1.0 / static_cast<double>(states));
}

DistributionVector point_mass(int n, std::uint64_t state) {
    const std::uint64_t states = std::uint64_t{1} << n;
    if (state >= states) throw std::out_of_range("state outside [0, 2^n)");
    DistributionVector pi(states, 0.0);
    pi[state] = 1.0;
    return pi;
}

void validate_distribution(const DistributionVector& pi) {
    double sum = 0.0;
    for (double p : pi) {
        if (p < 0.0) throw std::invalid_argument("negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
}

namespace {

DistributionVector step(const DistributionVector& pi, const MarkovMatrix& m) {
    DistributionVector next(pi.size(), 0.0);
    const double inv_n = 1.0 / static_cast<double>(m.n());
    for (std::uint64_t j = 0; j < pi.size(); ++j) {
        const double pj = pi[j];
        if (pj == 0.0) continue;
        for (const auto& e : m.row(j)) next[e.target] += pj * (e.count * inv_n);
    }
    return next;
}

}  // namespace

DistributionVector evolve(const DistributionVector& pi0, const MarkovMatrix& m, std::uint64_t t) {
    if (pi0.size() != m.states()) throw std::invalid_argument("distribution size != 2^n");
    validate_distribution(pi0);
    DistributionVector pi = pi0;
    for (std::uint64_t s = 0; s < t; ++s) pi = step(pi, m);
    return pi;
}

double total_variation_from_uniform(const DistributionVector& pi) {
    const double u = 1.0 / static_cast<double>(pi.size());
    double sum = 0.0;
    for (double p : pi) sum += std::abs(p - u);
    return 0.5 * sum;
}

MixingResult mixing_time_from(const MarkovMatrix& m, std::uint64_t start, double epsilon,
                              std::uint64_t t_max) {
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    DistributionVector pi = point_mass(m.n(), start);
    double tv = total_variation_from_uniform(pi);
    if (tv < epsilon) return {0, tv};
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        pi = step(pi, m);
        tv = total_variation_from_uniform(pi);
        if (tv < epsilon) return {t, tv};
    }
    return {std::nullopt, tv};
}

MixingResult mixing_time(const MarkovMatrix& m, double epsilon, std::uint64_t t_max) {
    return mixing_time_from(m, 0, epsilon, t_max);
}

std::uint64_t default_t_max(int n) { return std::uint64_t{1} << (2 * n); }

}  // namespace dhci
