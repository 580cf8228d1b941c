#include "dhci/dynamics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dhci {

void validate_instance(const ModeInstance& f) {
    if (f.n < 1 || f.n > kMaxTableBits)
        throw std::invalid_argument("mode size " + std::to_string(f.n) + " outside [1, " +
                                    std::to_string(kMaxTableBits) + "]");
    const std::uint64_t states = std::uint64_t{1} << f.n;
    if (f.truth_table.size() != states)
        throw std::invalid_argument("truth table holds " + std::to_string(f.truth_table.size()) +
                                    " entries, expected " + std::to_string(states));
    for (std::uint32_t entry : f.truth_table)
        if (entry >= states)
            throw std::invalid_argument("truth table entry " + std::to_string(entry) +
                                        " outside [0, 2^n)");
}

namespace {

void check_direction(const ModeInstance& f, int i) {
    if (i < 1 || i > f.n)
        throw std::out_of_range("direction " + std::to_string(i) + " outside [1, " +
                                std::to_string(f.n) + "]");
}

}  // namespace

bool component_bit(const ModeInstance& f, int i, const Configuration& x) {
    check_direction(f, i);
    if (x.length() != f.n) throw std::invalid_argument("configuration length != mode size");
    return (f.truth_table[to_decimal(x)] >> (i - 1)) & 1u;
}

Configuration component_update(const ModeInstance& f, int i, const Configuration& x) {
    Configuration out = x;
    out.set_bit(i, component_bit(f, i, x));
    return out;
}

std::uint64_t component_update_decimal(const ModeInstance& f, int i, std::uint64_t state) {
    check_direction(f, i);
    if (state >= f.truth_table.size()) throw std::out_of_range("state outside [0, 2^n)");
    const std::uint64_t bit = (f.truth_table[state] >> (i - 1)) & 1u;
    const std::uint64_t mask = std::uint64_t{1} << (i - 1);
    return (state & ~mask) | (bit << (i - 1));
}

Configuration iterate(const ModeInstance& f, IndexSource& s, Configuration x0, std::uint64_t q) {
    if (x0.length() != f.n) throw std::invalid_argument("configuration length != mode size");
    return iterate_with([&f](int i, const Configuration& x) { return component_bit(f, i, x); },
                        s, std::move(x0), q);
}

IterationGraph build_iteration_graph(const ModeInstance& f) {
    validate_instance(f);
    if (f.n > kMaxAnalysisBits)
        throw CapacityError("iteration graph limited to n <= " +
                            std::to_string(kMaxAnalysisBits) + ", got n = " +
                            std::to_string(f.n));
    IterationGraph g;
    g.n = f.n;
    const std::uint64_t states = std::uint64_t{1} << f.n;
    g.arcs.reserve(static_cast<std::size_t>(states) * f.n);
    for (std::uint64_t j = 0; j < states; ++j)
        for (int k = 1; k <= f.n; ++k)
            g.arcs.push_back({static_cast<std::uint32_t>(j), k,
                              static_cast<std::uint32_t>(component_update_decimal(f, k, j))});
    return g;
}

std::vector<std::vector<std::uint32_t>> adjacency(const IterationGraph& g) {
    std::vector<std::vector<std::uint32_t>> adj(std::size_t{1} << g.n);
    for (const Arc& a : g.arcs) adj[a.source].push_back(a.target);
    for (auto& targets : adj) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    return adj;
}

bool is_strongly_connected(const IterationGraph& g) { return is_strongly_connected(adjacency(g)); }

bool is_strongly_connected(const std::vector<std::vector<std::uint32_t>>& adj) {
    const std::size_t n = adj.size();
    if (n == 0) return true;

    // Tarjan with an explicit stack; bails out as soon as a second component
    // closes.
    constexpr std::uint32_t kUnvisited = 0xffffffffu;
    std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    struct Frame {
        std::uint32_t vertex;
        std::size_t next_edge;
    };
    std::vector<Frame> call_stack;
    std::uint32_t next_index = 0;
    int components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        if (components > 0) return false;  // a previous root already closed a component
        call_stack.push_back({static_cast<std::uint32_t>(root), 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(static_cast<std::uint32_t>(root));
        on_stack[root] = 1;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const std::uint32_t v = frame.vertex;
            if (frame.next_edge < adj[v].size()) {
                const std::uint32_t w = adj[v][frame.next_edge++];
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                call_stack.pop_back();
                if (!call_stack.empty())
                    lowlink[call_stack.back().vertex] =
                        std::min(lowlink[call_stack.back().vertex], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    ++components;
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                    } while (w != v);
                    if (components > 1) return false;
                }
            }
        }
    }
    return components == 1;
}

}  // namespace dhci
