#include <doctest.h>

#include <algorithm>
#include <random>

#include "dhci/dynamics.hpp"
#include "dhci/modes.hpp"
#include "oracles.hpp"

using dhci::Arc;
using dhci::build_iteration_graph;
using dhci::component_update;
using dhci::Configuration;
using dhci::identity_mode;
using dhci::is_strongly_connected;
using dhci::iterate;
using dhci::IterationGraph;
using dhci::ModeInstance;
using dhci::negation_mode;
using dhci::StrategyStream;
using oracles::FixedStrategy;

TEST_CASE("component_update replaces exactly the selected bit") {
    const ModeInstance neg2 = negation_mode(2);
    CHECK(component_update(neg2, 1, Configuration{0, 0}) == Configuration{1, 0});
    CHECK(component_update(neg2, 2, Configuration{1, 0}) == Configuration{1, 1});

    const ModeInstance id3 = identity_mode(3);
    for (int i = 1; i <= 3; ++i)
        CHECK(component_update(id3, i, Configuration{1, 0, 1}) == Configuration{1, 0, 1});

    CHECK_THROWS_AS(component_update(neg2, 3, Configuration{0, 0}), std::out_of_range);
    CHECK_THROWS_AS(component_update(neg2, 1, Configuration{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("component_update moves at most one bit") {
    // Exhaustive over (x, i) for n <= 4 with random tables, randomized above.
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 4; ++n) {
        const ModeInstance f = oracles::random_table_mode(n, rng);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
            for (int i = 1; i <= n; ++i) {
                const Configuration x = dhci::from_decimal(v, n);
                const Configuration y = component_update(f, i, x);
                const int d = dhci::hamming_distance(x, y);
                CHECK(d <= 1);
                if (d == 1) CHECK(y.bit(i) != x.bit(i));
            }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 6);
        const ModeInstance f = oracles::random_table_mode(n, rng);
        const std::uint64_t v = rng() % (std::uint64_t{1} << n);
        const int i = 1 + static_cast<int>(rng() % n);
        const Configuration x = dhci::from_decimal(v, n);
        CHECK(dhci::hamming_distance(x, component_update(f, i, x)) <= 1);
    }
}

TEST_CASE("iterate follows the strategy one component at a time") {
    const ModeInstance neg2 = negation_mode(2);

    FixedStrategy s0({1});
    CHECK(iterate(neg2, s0, Configuration{0, 1}, 0) == Configuration{0, 1});

    FixedStrategy s12({1, 2});
    CHECK(iterate(neg2, s12, Configuration{0, 0}, 2) == Configuration{1, 1});

    FixedStrategy s11({1, 1});
    CHECK(iterate(neg2, s11, Configuration{0, 0}, 2) == Configuration{0, 0});
}

TEST_CASE("iterate rejects out-of-range strategy indices") {
    const ModeInstance neg2 = negation_mode(2);
    FixedStrategy bad({3});
    CHECK_THROWS_AS(iterate(neg2, bad, Configuration{0, 0}, 1), dhci::ContractError);
}

TEST_CASE("iteration is a semigroup in the step count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const ModeInstance f = oracles::random_table_mode(n, rng);
        const Configuration x0 = dhci::from_decimal(rng() % (std::uint64_t{1} << n), n);
        const std::uint64_t a = rng() % 20;
        const std::uint64_t b = rng() % 20;
        const std::uint64_t seed = rng();

        StrategyStream whole(seed, n);
        const Configuration direct = iterate(f, whole, x0, a + b);

        StrategyStream split(seed, n);
        const Configuration mid = iterate(f, split, x0, a);
        CHECK(iterate(f, split, mid, b) == direct);  // stream continues at position a
    }
}

TEST_CASE("iteration graph of the negation map at n = 1") {
    const IterationGraph g = build_iteration_graph(negation_mode(1));
    REQUIRE(g.arcs.size() == 2);
    CHECK(g.arcs[0] == Arc{0, 1, 1});
    CHECK(g.arcs[1] == Arc{1, 1, 0});
}

TEST_CASE("iteration graph shapes") {
    const IterationGraph id2 = build_iteration_graph(identity_mode(2));
    REQUIRE(id2.arcs.size() == 8);
    for (const Arc& a : id2.arcs) CHECK(a.source == a.target);

    const IterationGraph neg2 = build_iteration_graph(negation_mode(2));
    REQUIRE(neg2.arcs.size() == 8);
    for (const Arc& a : neg2.arcs) {
        CHECK(a.source != a.target);
        const std::uint32_t diff = a.source ^ a.target;
        CHECK((diff & (diff - 1)) == 0);  // Hamming distance 1
        CHECK(diff == (1u << (a.direction - 1)));
    }

    std::mt19937_64 rng(3);
    for (int n = 1; n <= 6; ++n) {
        const ModeInstance f = oracles::random_table_mode(n, rng);
        const IterationGraph g = build_iteration_graph(f);
        CHECK(g.arcs.size() == static_cast<std::size_t>(n) * (std::size_t{1} << n));
        // A move in direction k touches at most bit k.
        for (const Arc& a : g.arcs)
            CHECK(((a.source ^ a.target) & ~(1u << (a.direction - 1))) == 0);
    }

    ModeInstance big{13, std::vector<std::uint32_t>(std::size_t{1} << 13, 0)};
    CHECK_THROWS_AS(build_iteration_graph(big), dhci::CapacityError);
}

TEST_CASE("strong connectivity matches the closure oracle") {
    CHECK(is_strongly_connected(build_iteration_graph(negation_mode(1))));
    CHECK(is_strongly_connected(build_iteration_graph(negation_mode(2))));
    CHECK_FALSE(is_strongly_connected(build_iteration_graph(identity_mode(1))));

    std::mt19937_64 rng(19);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const ModeInstance f = oracles::random_table_mode(n, rng);
            const auto adj = dhci::adjacency(build_iteration_graph(f));
            CHECK(is_strongly_connected(adj) == oracles::strongly_connected(adj));
        }
}

TEST_CASE("strong connectivity on hand-built adjacency") {
    using Adj = std::vector<std::vector<std::uint32_t>>;
    // Two 2-cycles joined one way only.
    CHECK_FALSE(is_strongly_connected(Adj{{1}, {0}, {3, 0}, {2}}));
    CHECK(is_strongly_connected(Adj{{1}, {2}, {3}, {0}}));
    CHECK(is_strongly_connected(Adj{{0}}));
}
