#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace cqv {

// Vertex order with per-vertex later-neighbor sets (neighbors that appear
// after the vertex in the order). A perfect elimination order is one where
// every later-neighbor set induces a clique.
struct EliminationOrder {
    std::vector<int> order;             // order[0] is eliminated first
    std::vector<std::uint64_t> later;   // later[v] = N(v) among vertices after v
};

// Reverse of a maximum-cardinality search order, ties broken by smallest
// vertex index. A PEO whenever the graph is chordal.
EliminationOrder mcs_order(const Graph& g);

// Single-representative PEO test: the later neighbors of v, minus the
// earliest of them, must all be adjacent to that earliest one.
bool check_peo(const Graph& g, const EliminationOrder& e);
// All-pairs reference variant of the same predicate.
bool check_peo_allpairs(const Graph& g, const EliminationOrder& e);

// A PEO if chordal, nullopt otherwise.
std::optional<EliminationOrder> is_chordal(const Graph& g);

// c_j = sum_v C(m_v, j-1) with m_v = |later neighbors of v|; every clique is
// counted at its earliest vertex. Requires a valid PEO.
std::vector<std::uint64_t> clique_vector_chordal(const Graph& g, const EliminationOrder& e);

// Clique vector via the PEO fast path when chordal, brute force otherwise.
std::vector<std::uint64_t> clique_vector(const Graph& g);

// kappa(K_n): n under the deletion reading used throughout (no vertex set
// disconnects a complete graph), n-1 under the classical one. Non-complete
// graphs agree in both.
enum class Convention { deletion, classical };

// Largest k such that the graph has >= k vertices and deleting any vertex
// set of size < k leaves a connected graph. Complete graphs short-circuit;
// otherwise the minimum over non-adjacent pairs of the max number of
// internally vertex-disjoint paths (unit-capacity max flow on a split
// network).
int connectivity(const Graph& g, Convention conv = Convention::deletion);

// Oracle form: tests vertex subsets in increasing size for disconnection.
// 1 <= n <= 10.
int connectivity_bruteforce(const Graph& g, Convention conv = Convention::deletion);

}  // namespace cqv
