#pragma once

#include <cstdint>
#include <vector>

#include "dhci/bitcore.hpp"
#include "dhci/errors.hpp"
#include "dhci/strategy.hpp"

namespace dhci {

// Largest n for which truth tables are materialized.
inline constexpr int kMaxTableBits = 24;
// Largest n for which the iteration graph and the Markov matrix are built.
inline constexpr int kMaxAnalysisBits = 12;

// A Boolean map f: B^n -> B^n as a full truth table; entry j is
// to_decimal(f(from_decimal(j, n))).
struct ModeInstance {
    int n = 0;
    std::vector<std::uint32_t> truth_table;

    bool operator==(const ModeInstance&) const = default;
};

// Throws std::invalid_argument when the table is malformed.
void validate_instance(const ModeInstance& f);

// f_i(x), read from the truth table.
bool component_bit(const ModeInstance& f, int i, const Configuration& x);

// x with bit i replaced by f_i(x); every other bit unchanged.
Configuration component_update(const ModeInstance& f, int i, const Configuration& x);

// Decimal fast path of component_update.
std::uint64_t component_update_decimal(const ModeInstance& f, int i, std::uint64_t state);

// Shared asynchronous engine: q steps, each updating the single component the
// strategy selects. ComponentFn is bool(int i, const Configuration& x).
template <typename ComponentFn>
Configuration iterate_with(ComponentFn&& f, IndexSource& s, Configuration x, std::uint64_t q) {
    const int n = x.length();
    for (std::uint64_t t = 0; t < q; ++t) {
        const int i = s.next_index();
        if (i < 1 || i > n)
            throw ContractError("strategy produced index " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
        x.set_bit(i, f(i, x));
    }
    return x;
}

// Configuration component of G_f^q(s, x0); q = 0 returns x0.
Configuration iterate(const ModeInstance& f, IndexSource& s, Configuration x0, std::uint64_t q);

struct Arc {
    std::uint32_t source;
    int direction;
    std::uint32_t target;

    bool operator==(const Arc&) const = default;
};

// Asynchronous iteration graph: vertices are decimal states, one arc per
// (state, direction) pair. Parallel arcs are kept so transition counting
// stays exact.
struct IterationGraph {
    int n = 0;
    std::vector<Arc> arcs;  // sorted by (source, direction)
};

IterationGraph build_iteration_graph(const ModeInstance& f);

// Set-view adjacency: parallel arcs collapsed, targets ascending.
std::vector<std::vector<std::uint32_t>> adjacency(const IterationGraph& g);

bool is_strongly_connected(const IterationGraph& g);
// Iterative Tarjan over an explicit adjacency list (no recursion: up to 2^12
// vertices at the analysis limit).
bool is_strongly_connected(const std::vector<std::vector<std::uint32_t>>& adj);

}  // namespace dhci
