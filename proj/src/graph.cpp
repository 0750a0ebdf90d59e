#include "graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cqv {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Mask of vertices strictly above v (safe for v = 63).
inline std::uint64_t bits_above(int v) {
    return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1);
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range (n = " +
                                    std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

bool Graph::is_complete() const {
    for (int v = 0; v < n_; ++v)
        if (std::popcount(adj_[v]) != n_ - 1) return false;
    return true;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

void Graph::assign_from_edge_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > 11)
        throw std::invalid_argument("edge masks only cover n <= 11");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if ((mask >> b) & 1u) {
                adj_[i] |= bit(j);
                adj_[j] |= bit(i);
            }
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g;
    g.assign_from_edge_mask(n, mask);
    return g;
}

std::uint64_t edge_mask_of(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw std::invalid_argument("edge masks only cover n <= 11");
    std::uint64_t mask = 0;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (g.has_edge(i, j)) mask |= bit(b);
    return mask;
}

Graph induced_subgraph(const Graph& g, std::uint64_t w) {
    if (w & ~g.vertex_mask())
        throw std::invalid_argument("induced subgraph: vertex set contains an index >= n");
    int verts[kMaxVertices];
    int m = 0;
    for (std::uint64_t rest = w; rest; rest &= rest - 1)
        verts[m++] = std::countr_zero(rest);
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(i, j);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    std::uint64_t mask = 0;
    for (int v : w) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced subgraph: vertex index " + std::to_string(v) +
                                        " out of range");
        if (mask & bit(v))
            throw std::invalid_argument("induced subgraph: duplicate vertex " + std::to_string(v));
        mask |= bit(v);
    }
    return induced_subgraph(g, mask);
}

std::uint64_t induced_edge_mask(const Graph& g, std::uint64_t w) {
    int verts[kMaxVertices];
    int m = 0;
    for (std::uint64_t rest = w; rest; rest &= rest - 1)
        verts[m++] = std::countr_zero(rest);
    std::uint64_t mask = 0;
    int b = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++b)
            if (g.has_edge(verts[i], verts[j])) mask |= bit(b);
    return mask;
}

int component_count_within(const Graph& g, std::uint64_t mask) {
    int comps = 0;
    std::uint64_t unvisited = mask;
    while (unvisited) {
        ++comps;
        std::uint64_t comp = unvisited & (~unvisited + 1);  // lowest remaining vertex
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest; rest &= rest - 1)
                next |= g.neighbors(std::countr_zero(rest));
            next &= mask & ~comp;
            comp |= next;
            frontier = next;
        }
        unvisited &= ~comp;
    }
    return comps;
}

int component_count(const Graph& g) {
    return component_count_within(g, g.vertex_mask());
}

Graph cone(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(n + 1);
    for (int v = 0; v < n; ++v)
        for (std::uint64_t rest = g.neighbors(v) & bits_above(v); rest; rest &= rest - 1)
            h.add_edge(v, std::countr_zero(rest));
    for (int v = 0; v < n; ++v) h.add_edge(v, n);
    return h;
}

Graph add_isolated(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(n + 1);
    for (int v = 0; v < n; ++v)
        for (std::uint64_t rest = g.neighbors(v) & bits_above(v); rest; rest &= rest - 1)
            h.add_edge(v, std::countr_zero(rest));
    return h;
}

namespace {

void count_extensions(const Graph& g, std::uint64_t cand, int size,
                      std::vector<std::uint64_t>& counts) {
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        counts[static_cast<std::size_t>(size)]++;
        const std::uint64_t next = cand & g.neighbors(v);
        if (next) count_extensions(g, next, size + 1, counts);
    }
}

}  // namespace

std::vector<std::uint64_t> clique_vector_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("empty graph has no clique vector");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    count_extensions(g, g.vertex_mask(), 1, counts);
    int d = n;
    while (d > 1 && counts[static_cast<std::size_t>(d)] == 0) --d;
    return std::vector<std::uint64_t>(counts.begin() + 1, counts.begin() + 1 + d);
}

std::uint64_t binom64(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(kMaxVertices + 1);
        for (int i = 0; i <= kMaxVertices; ++i) {
            t[i].assign(static_cast<std::size_t>(i) + 1, 1);
            for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("binom64: n out of range");
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 11) throw std::invalid_argument("labeled_graph_count: n out of range");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

GraphEnumerator::GraphEnumerator(int n) : n_(n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("graph enumeration supports 1 <= n <= 8");
    end_ = labeled_graph_count(n);
}

std::optional<Graph> GraphEnumerator::next() {
    if (next_mask_ >= end_) return std::nullopt;
    return graph_from_edge_mask(n_, next_mask_++);
}

}  // namespace cqv
