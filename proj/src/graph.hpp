#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cqv {

// Hard vertex cap: one machine word per neighbor bitset.
inline constexpr int kMaxVertices = 64;

// Labeled simple graph on vertices 0..n-1 with bitset adjacency.
// Symmetric, loop-free by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    bool is_complete() const;
    std::uint64_t vertex_mask() const;  // all n low bits set

    // Rejects self-loops and out-of-range endpoints; adding twice is a no-op.
    void add_edge(int u, int v);

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // Rebuild in place from an upper-triangle edge mask, reusing storage.
    // Bit order: (0,1),(0,2),...,(0,n-1),(1,2),... i.e. pairs (i,j), i<j,
    // row-major.
    void assign_from_edge_mask(int n, std::uint64_t mask);

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
};

Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

// Induced subgraph on the vertex set w (given as a bitmask); vertices are
// relabeled 0..|w|-1 preserving ascending original order.
Graph induced_subgraph(const Graph& g, std::uint64_t w);
Graph induced_subgraph(const Graph& g, const std::vector<int>& w);

// Upper-triangle edge mask of the induced subgraph, in the relabeled order.
// Same bit layout as graph_from_edge_mask.
std::uint64_t induced_edge_mask(const Graph& g, std::uint64_t w);

// Number of connected components; 0 iff the graph is empty.
int component_count(const Graph& g);
// Components of the subgraph induced on `mask`, without materializing it.
int component_count_within(const Graph& g, std::uint64_t mask);

// S-operator: new vertex n adjacent to everything.
Graph cone(const Graph& g);
// D-operator: new isolated vertex n.
Graph add_isolated(const Graph& g);

// Exact i-clique counts (c_1..c_d, d = clique number), by backtracking over
// vertex-ordered extensions. Errors on the empty graph.
std::vector<std::uint64_t> clique_vector_bruteforce(const Graph& g);

// Exact C(n,k) in 64 bits; valid for n <= 64 (C(64,32) < 2^63).
std::uint64_t binom64(int n, int k);

// ---- labeled-graph enumeration (exhaustive verification substrate) ----

std::uint64_t labeled_graph_count(int n);  // 2^(n(n-1)/2)

// Streams all labeled graphs on n vertices (1 <= n <= 8) in edge-mask order.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n);
    std::optional<Graph> next();
    std::uint64_t total() const { return end_; }

private:
    int n_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t end_;
};

// Visits graphs for edge masks in [lo, hi); the Graph reference passed to fn
// is reused between calls.
template <typename Fn>
void for_each_graph_in_range(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    Graph g;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        g.assign_from_edge_mask(n, mask);
        fn(static_cast<const Graph&>(g), mask);
    }
}

// All size-s subsets of {0..n-1} as bitmasks, ascending (Gosper). n < 64.
template <typename Fn>
void for_each_subset_of_size(int n, int s, Fn&& fn) {
    if (s == 0) {
        fn(std::uint64_t{0});
        return;
    }
    if (s > n) return;
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t m = (std::uint64_t{1} << s) - 1;
    while (m < limit) {
        fn(m);
        const std::uint64_t c = m & -m;
        const std::uint64_t r = m + c;
        if (r >= limit) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

}  // namespace cqv
