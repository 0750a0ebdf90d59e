#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chordal.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "oracles.hpp"

using namespace cqv;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("chordality matches the induced-long-cycle oracle, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t chordal_count = 0;
        for_each_graph_in_range(n, 0, labeled_graph_count(n),
                                [&](const Graph& g, std::uint64_t) {
                                    const bool fast = is_chordal(g).has_value();
                                    CHECK(fast == oracle::chordal_by_induced_cycles(g));
                                    if (fast) ++chordal_count;
                                });
        // labeled chordal graph counts: OEIS A058862
        static const std::uint64_t expected[] = {0, 1, 2, 8, 61, 822, 18154};
        CHECK(chordal_count == expected[n]);
    }
}

TEST_CASE("known chordal and non-chordal graphs") {
    CHECK(is_chordal(cycle(4)) == std::nullopt);
    CHECK(is_chordal(cycle(5)) == std::nullopt);
    CHECK(is_chordal(cycle(6)) == std::nullopt);
    CHECK(is_chordal(path(6)).has_value());
    CHECK(is_chordal(complete(7)).has_value());
    CHECK(is_chordal(Graph(5)).has_value());
    // 5-wheel: the hub doesn't kill the induced C_5 on the rim
    Graph w(6);
    for (int v = 0; v < 5; ++v) {
        w.add_edge(v, (v + 1) % 5);
        w.add_edge(v, 5);
    }
    CHECK(is_chordal(w) == std::nullopt);
}

TEST_CASE("PEO checkers agree and certify MCS orders") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph_in_range(n, 0, labeled_graph_count(n),
                                [&](const Graph& g, std::uint64_t) {
                                    const EliminationOrder e = mcs_order(g);
                                    CHECK(check_peo(g, e) == check_peo_allpairs(g, e));
                                });
}

TEST_CASE("clique vector via PEO matches brute force on chordal graphs") {
    for (int n = 1; n <= 6; ++n)
        for_each_graph_in_range(n, 0, labeled_graph_count(n),
                                [&](const Graph& g, std::uint64_t) {
                                    if (auto e = is_chordal(g))
                                        CHECK(clique_vector_chordal(g, *e) ==
                                              clique_vector_bruteforce(g));
                                });
    std::mt19937_64 rng(11);
    int hits = 0;
    while (hits < 100) {
        const Graph g = graph_from_edge_mask(7, rng() % labeled_graph_count(7));
        if (auto e = is_chordal(g)) {
            CHECK(clique_vector_chordal(g, *e) == clique_vector_bruteforce(g));
            ++hits;
        }
    }
}

TEST_CASE("clique_vector dispatch covers both paths") {
    CHECK(clique_vector(cycle(4)) == std::vector<std::uint64_t>{4, 4});
    CHECK(clique_vector(complete(3)) == std::vector<std::uint64_t>{3, 3, 1});
    const Graph word_graph = parse_graph6("IFB~w????");
    CHECK(clique_vector(word_graph) ==
          std::vector<std::uint64_t>{10, 14, 11, 3});
}

TEST_CASE("clique_vector_chordal rejects a non-PEO") {
    const Graph c4 = cycle(4);
    CHECK_THROWS_AS(clique_vector_chordal(c4, mcs_order(c4)), std::invalid_argument);
}

TEST_CASE("connectivity agrees with the subset-deletion oracle") {
    for (int n = 1; n <= 5; ++n)
        for_each_graph_in_range(n, 0, labeled_graph_count(n),
                                [&](const Graph& g, std::uint64_t) {
                                    CHECK(connectivity(g) == connectivity_bruteforce(g));
                                    CHECK(connectivity(g, Convention::classical) ==
                                          connectivity_bruteforce(g, Convention::classical));
                                });
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = graph_from_edge_mask(6, rng() % labeled_graph_count(6));
        CHECK(connectivity(g) == connectivity_bruteforce(g));
    }
}

TEST_CASE("connectivity known values and conventions") {
    CHECK(connectivity(complete(4)) == 4);                         // kappa(K_n) = n here
    CHECK(connectivity(complete(4), Convention::classical) == 3);  // textbook n-1
    CHECK(connectivity(Graph(1)) == 1);
    CHECK(connectivity(Graph(1), Convention::classical) == 0);
    CHECK(connectivity(cycle(5)) == 2);
    CHECK(connectivity(path(4)) == 1);
    CHECK(connectivity(Graph(3)) == 0);
    Graph two_triangles(6);  // disconnected
    for (int b = 0; b < 2; ++b)
        for (int u = 0; u < 3; ++u)
            for (int v = u + 1; v < 3; ++v) two_triangles.add_edge(3 * b + u, 3 * b + v);
    CHECK(connectivity(two_triangles) == 0);
    // K_5 minus one edge: kappa = 3
    Graph h(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 1)) h.add_edge(u, v);
    CHECK(connectivity(h) == 3);
}
