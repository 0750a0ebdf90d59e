#include <doctest.h>

#include <random>
#include <stdexcept>

#include "betti.hpp"
#include "chordal.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "homology.hpp"

using namespace cqv;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::vector<std::uint64_t> ranks(const Graph& g) {
    return reduced_homology_ranks(g).ranks;
}

using Entries = std::map<std::pair<int, int>, std::uint64_t>;

}  // namespace

TEST_CASE("homology of basic complexes") {
    CHECK(ranks(Graph(1)) == std::vector<std::uint64_t>{0});     // point: acyclic
    CHECK(ranks(Graph(2)) == std::vector<std::uint64_t>{1});     // two points: one H~_0
    CHECK(ranks(Graph(4)) == std::vector<std::uint64_t>{3});
    CHECK(ranks(cycle(4)) == std::vector<std::uint64_t>{0, 1});  // hollow square: a circle
    CHECK(ranks(cycle(5)) == std::vector<std::uint64_t>{0, 1});
    CHECK(ranks(cycle(6)) == std::vector<std::uint64_t>{0, 1});
    for (int n = 1; n <= 7; ++n) {
        const auto r = ranks(complete(n));  // simplex: contractible
        CHECK(r == std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    }
}

TEST_CASE("homology of composite complexes") {
    // octahedron = K_{2,2,2}: clique complex is the 2-sphere
    Graph oct(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u % 3 != v % 3) oct.add_edge(u, v);
    CHECK(ranks(oct) == std::vector<std::uint64_t>{0, 0, 1});

    Graph bowtie(5);  // two triangles sharing a vertex: contractible
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(2, 4);
    bowtie.add_edge(3, 4);
    CHECK(ranks(bowtie) == std::vector<std::uint64_t>{0, 0, 0});

    Graph k3_k2(5);  // triangle + disjoint edge
    k3_k2.add_edge(0, 1);
    k3_k2.add_edge(1, 2);
    k3_k2.add_edge(0, 2);
    k3_k2.add_edge(3, 4);
    CHECK(ranks(k3_k2) == std::vector<std::uint64_t>{1, 0, 0});

    // two disjoint hollow squares: H~_0 = 1, H~_1 = 2
    Graph cc(8);
    for (int b = 0; b < 2; ++b)
        for (int v = 0; v < 4; ++v) cc.add_edge(4 * b + v, 4 * b + (v + 1) % 4);
    CHECK(ranks(cc) == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("homology range errors") {
    CHECK_THROWS_AS(reduced_homology_ranks(Graph(0)), std::invalid_argument);
}

TEST_CASE("Betti tables of small named graphs") {
    const BettiTable k2 = betti_table_full(complete(2));
    CHECK(k2.n == 2);
    CHECK(k2.entries == Entries{{{0, 0}, 1}});
    CHECK(k2.projective_dimension() == 0);
    CHECK(k2.depth() == 2);
    CHECK(k2.has_two_linear_resolution());

    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    const BettiTable bt_p3 = betti_table_full(p3);
    CHECK(bt_p3.entries == Entries{{{0, 0}, 1}, {{1, 2}, 1}});
    CHECK(bt_p3.projective_dimension() == 1);
    CHECK(bt_p3.depth() == 2);
    CHECK(bt_p3.has_two_linear_resolution());

    const BettiTable c4 = betti_table_full(cycle(4));
    CHECK(c4.entries == Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
    CHECK(c4.projective_dimension() == 2);
    CHECK(c4.depth() == 2);
    CHECK(!c4.has_two_linear_resolution());  // the (2,4) entry is off the strand

    const BettiTable edgeless = betti_table_full(Graph(3));
    CHECK(edgeless.entries ==
          Entries{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
}

TEST_CASE("table JSON is stable and well-formed") {
    CHECK(betti_table_full(complete(2)).to_json() ==
          "{\"n\": 2, \"entries\": [[0, 0, 1]]}");
    const BettiTable c4 = betti_table_full(cycle(4));
    CHECK(c4.to_json() ==
          "{\"n\": 4, \"entries\": [[0, 0, 1], [1, 2, 2], [2, 4, 1]]}");
}

TEST_CASE("linear strand equals the j = i+1 row of the full table") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph_in_range(n, 0, labeled_graph_count(n),
                                [&](const Graph& g, std::uint64_t) {
                                    const auto strand = betti_linear_strand(g);
                                    const BettiTable t = betti_table_full(g);
                                    REQUIRE(static_cast<int>(strand.size()) == n);
                                    for (int i = 0; i < n; ++i) {
                                        const auto it = t.entries.find({i, i + 1});
                                        const std::uint64_t full =
                                            it == t.entries.end() ? 0 : it->second;
                                        CHECK(strand[static_cast<std::size_t>(i)] == full);
                                    }
                                });
}

TEST_CASE("strand values of named graphs") {
    CHECK(betti_linear_strand(cycle(4)) ==
          std::vector<std::uint64_t>{0, 2, 0, 0});
    CHECK(betti_linear_strand(complete(4)) ==
          std::vector<std::uint64_t>{0, 0, 0, 0});
    CHECK(betti_linear_strand(Graph(2)) == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("homology cache agrees with direct computation") {
    const HomologyCache cache(4);
    CHECK(cache.max_n() == 4);
    for (int m = 1; m <= 4; ++m)
        for_each_graph_in_range(m, 0, labeled_graph_count(m),
                                [&](const Graph& g, std::uint64_t mask) {
                                    CHECK(cache.lookup(m, mask) ==
                                          reduced_homology_ranks(g));
                                });
    CHECK_THROWS_AS(HomologyCache(0), std::invalid_argument);
    CHECK_THROWS_AS(HomologyCache(7), std::invalid_argument);
}

TEST_CASE("cached and uncached full tables coincide") {
    const HomologyCache cache(5);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 2);
        const Graph g = graph_from_edge_mask(n, rng() % labeled_graph_count(n));
        const BettiTable with = betti_table_full(g, &cache);
        const BettiTable without = betti_table_full(g);
        CHECK(with.n == without.n);
        CHECK(with.entries == without.entries);
    }
}

TEST_CASE("betti range errors") {
    CHECK_THROWS_AS(betti_table_full(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(betti_table_full(Graph(9)), std::invalid_argument);
    CHECK_THROWS_AS(betti_linear_strand(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(betti_linear_strand(Graph(25)), std::invalid_argument);
}

TEST_CASE("connectivity recovered from the linear strand") {
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(connectivity_from_betti(p3) == 1);
    CHECK(connectivity_from_betti(complete(5)) == 5);  // no strand entries at all
    CHECK(connectivity_from_betti(Graph(3)) == 0);
    CHECK(connectivity_from_betti(cycle(5)) == 2);
    for (int n = 1; n <= 5; ++n)
        for_each_graph_in_range(n, 0, labeled_graph_count(n),
                                [&](const Graph& g, std::uint64_t) {
                                    CHECK(connectivity_from_betti(g) ==
                                          connectivity_bruteforce(g));
                                });
}

TEST_CASE("chordal depth matches connectivity plus one") {
    // depth = kappa + 1 with the classical kappa on complete graphs
    for (int n = 1; n <= 5; ++n)
        for_each_graph_in_range(
            n, 0, labeled_graph_count(n), [&](const Graph& g, std::uint64_t) {
                if (!is_chordal(g)) return;
                const auto conv = g.is_complete() ? Convention::classical
                                                  : Convention::deletion;
                CHECK(betti_table_full(g).depth() == connectivity(g, conv) + 1);
            });
}
