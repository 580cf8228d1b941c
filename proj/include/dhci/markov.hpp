#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dhci/dynamics.hpp"

namespace dhci {

// Exact transition counts of the uniform-strategy asynchronous walk: entry
// (j, i) counts the directions k with F_f(k, j) = i, so the stochastic matrix
// is counts / n and every entry is an integer multiple of 1/n. Rows are kept
// sparse; a row has at most n distinct targets.
class MarkovMatrix {
public:
    struct Entry {
        std::uint32_t target;
        std::uint32_t count;

        bool operator==(const Entry&) const = default;
    };

    MarkovMatrix(int n, std::vector<std::vector<Entry>> rows);

    int n() const { return n_; }
    std::uint64_t states() const { return std::uint64_t{1} << n_; }
    const std::vector<Entry>& row(std::uint64_t j) const { return rows_[j]; }
    std::uint32_t count(std::uint64_t j, std::uint64_t i) const;
    std::vector<std::uint64_t> column_counts() const;
    std::vector<std::vector<std::uint32_t>> dense_counts() const;  // small n only

private:
    int n_;
    std::vector<std::vector<Entry>> rows_;
};

MarkovMatrix build_markov(const ModeInstance& f);  // n <= kMaxAnalysisBits

// Integer check, no tolerance: every column of counts sums to n.
bool is_doubly_stochastic(const MarkovMatrix& m);

struct PeriodResult {
    std::uint64_t period = 0;
    bool primitive = false;
};

// Period of the chain (gcd of all cycle lengths in the positive-support
// graph); primitive iff 1. Requires the support graph to be strongly
// connected.
PeriodResult period_and_primitivity(const MarkovMatrix& m);

using DistributionVector = std::vector<double>;

DistributionVector uniform_distribution(int n);
DistributionVector point_mass(int n, std::uint64_t state);
// Entries nonnegative, sum within 1e-12 of 1.
void validate_distribution(const DistributionVector& pi);

// pi0 * M^t by repeated vector-matrix products; summation order is fixed, so
// results are bit-identical across runs.
DistributionVector evolve(const DistributionVector& pi0, const MarkovMatrix& m, std::uint64_t t);

// Half the L1 distance to the uniform vector.
double total_variation_from_uniform(const DistributionVector& pi);

struct MixingResult {
    std::optional<std::uint64_t> steps;  // least q with TV < epsilon, if reached
    double final_tv = 0.0;               // TV at steps, or at t_max when not reached
};

// Convergence of a point mass at `start` toward uniform; `steps` stays empty
// for periodic chains.
MixingResult mixing_time_from(const MarkovMatrix& m, std::uint64_t start, double epsilon,
                              std::uint64_t t_max);
MixingResult mixing_time(const MarkovMatrix& m, double epsilon, std::uint64_t t_max);

std::uint64_t default_t_max(int n);  // 4^n

}  // namespace dhci
