#include "chordal.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace cqv {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<int> positions_of(const Graph& g, const EliminationOrder& e) {
    const int n = g.vertex_count();
    if (static_cast<int>(e.order.size()) != n)
        throw std::invalid_argument("elimination order is not a permutation");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        const int v = e.order[static_cast<std::size_t>(p)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("elimination order is not a permutation");
        pos[static_cast<std::size_t>(v)] = p;
    }
    return pos;
}

}  // namespace

EliminationOrder mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("maximum cardinality search needs n >= 1");
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::uint64_t unvisited = g.vertex_mask();
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (std::uint64_t rest = unvisited; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
                best = v;  // ascending scan, so ties keep the smallest index
        }
        visit.push_back(best);
        unvisited &= ~bit(best);
        for (std::uint64_t rest = g.neighbors(best) & unvisited; rest; rest &= rest - 1)
            weight[static_cast<std::size_t>(std::countr_zero(rest))]++;
    }
    EliminationOrder e;
    e.order.assign(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(e.order[static_cast<std::size_t>(p)])] = p;
    e.later.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (std::uint64_t rest = g.neighbors(v); rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                e.later[static_cast<std::size_t>(v)] |= bit(u);
        }
    return e;
}

bool check_peo(const Graph& g, const EliminationOrder& e) {
    const auto pos = positions_of(g, e);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::uint64_t later = e.later[static_cast<std::size_t>(v)];
        if (later == 0) continue;
        int first = -1;
        for (std::uint64_t rest = later; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if (first < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(first)])
                first = u;
        }
        if ((later & ~bit(first)) & ~g.neighbors(first)) return false;
    }
    return true;
}

bool check_peo_allpairs(const Graph& g, const EliminationOrder& e) {
    positions_of(g, e);  // permutation check
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t later = e.later[static_cast<std::size_t>(v)];
        for (std::uint64_t rest = later; rest; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((later & ~bit(u)) & ~g.neighbors(u)) return false;
        }
    }
    return true;
}

std::optional<EliminationOrder> is_chordal(const Graph& g) {
    auto e = mcs_order(g);
    if (!check_peo(g, e)) return std::nullopt;
    return e;
}

std::vector<std::uint64_t> clique_vector_chordal(const Graph& g, const EliminationOrder& e) {
    if (!check_peo(g, e))
        throw std::invalid_argument("order is not a perfect elimination order");
    const int n = g.vertex_count();
    int d = 1;
    for (int v = 0; v < n; ++v)
        d = std::max(d, std::popcount(e.later[static_cast<std::size_t>(v)]) + 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d), 0);
    for (int v = 0; v < n; ++v) {
        const int m = std::popcount(e.later[static_cast<std::size_t>(v)]);
        for (int j = 1; j <= m + 1; ++j) {
            const std::uint64_t add = binom64(m, j - 1);
            if (__builtin_add_overflow(c[static_cast<std::size_t>(j - 1)], add,
                                       &c[static_cast<std::size_t>(j - 1)]))
                throw std::overflow_error("clique count overflow");
        }
    }
    return c;
}

std::vector<std::uint64_t> clique_vector(const Graph& g) {
    if (auto peo = is_chordal(g)) return clique_vector_chordal(g, *peo);
    return clique_vector_bruteforce(g);
}

namespace {

// Max number of internally vertex-disjoint s-t paths, s,t non-adjacent.
// Split network: in(v) = 2v, out(v) = 2v+1, unit capacity through each
// vertex, augmenting-path flow from out(s) to in(t).
int menger_paths(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    const int nn = 2 * n;
    const int inf = n + 1;
    std::vector<int> cap(static_cast<std::size_t>(nn) * nn, 0);
    auto at = [nn](int a, int b) { return static_cast<std::size_t>(a) * nn + b; };
    for (int v = 0; v < n; ++v) cap[at(2 * v, 2 * v + 1)] = 1;
    for (int u = 0; u < n; ++u)
        for (std::uint64_t rest = g.neighbors(u); rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            cap[at(2 * u + 1, 2 * v)] = inf;
        }
    const int src = 2 * s + 1, dst = 2 * t;
    std::vector<int> parent(static_cast<std::size_t>(nn));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(nn));
    int flow = 0;
    for (;;) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<std::size_t>(src)] = src;
        queue.assign(1, src);
        for (std::size_t h = 0; h < queue.size() && parent[static_cast<std::size_t>(dst)] < 0; ++h) {
            const int a = queue[h];
            for (int b = 0; b < nn; ++b)
                if (parent[static_cast<std::size_t>(b)] < 0 && cap[at(a, b)] > 0) {
                    parent[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
        }
        if (parent[static_cast<std::size_t>(dst)] < 0) break;
        int bottleneck = INT_MAX;
        for (int b = dst; b != src; b = parent[static_cast<std::size_t>(b)])
            bottleneck = std::min(bottleneck, cap[at(parent[static_cast<std::size_t>(b)], b)]);
        for (int b = dst; b != src; b = parent[static_cast<std::size_t>(b)]) {
            const int a = parent[static_cast<std::size_t>(b)];
            cap[at(a, b)] -= bottleneck;
            cap[at(b, a)] += bottleneck;
        }
        flow += bottleneck;
    }
    return flow;
}

}  // namespace

int connectivity(const Graph& g, Convention conv) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("connectivity undefined for the empty graph");
    if (g.is_complete()) return conv == Convention::deletion ? n : n - 1;
    int best = INT_MAX;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, menger_paths(g, s, t));
    return best;
}

int connectivity_bruteforce(const Graph& g, Convention conv) {
    const int n = g.vertex_count();
    if (n < 1 || n > 10)
        throw std::invalid_argument("connectivity_bruteforce supports 1 <= n <= 10");
    const std::uint64_t full = g.vertex_mask();
    for (int s = 0; s <= n - 2; ++s) {
        bool found = false;
        for_each_subset_of_size(n, s, [&](std::uint64_t removed) {
            if (!found && component_count_within(g, full & ~removed) >= 2) found = true;
        });
        if (found) return s;
    }
    return conv == Convention::deletion ? n : n - 1;  // no removal disconnects: complete graph
}

}  // namespace cqv
