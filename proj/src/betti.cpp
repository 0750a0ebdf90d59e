#include "betti.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cqv {

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, v] : entries)
        if (v > 0) pd = std::max(pd, ij.first);
    return pd;
}

int BettiTable::depth() const { return n - projective_dimension(); }

bool BettiTable::has_two_linear_resolution() const {
    for (const auto& [ij, v] : entries) {
        if (v == 0 || (ij.first == 0 && ij.second == 0)) continue;
        if (ij.second - ij.first != 1) return false;
    }
    return true;
}

std::string BettiTable::to_json() const {
    std::ostringstream os;
    os << "{\"n\": " << n << ", \"entries\": [";
    bool first = true;
    for (const auto& [ij, v] : entries) {
        if (!first) os << ", ";
        first = false;
        os << '[' << ij.first << ", " << ij.second << ", " << v << ']';
    }
    os << "]}";
    return os.str();
}

HomologyCache::HomologyCache(int max_n) {
    if (max_n < 1 || max_n > 6)
        throw std::invalid_argument("HomologyCache supports 1 <= max_n <= 6");
    by_size_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int m = 1; m <= max_n; ++m) {
        auto& slot = by_size_[static_cast<std::size_t>(m)];
        slot.resize(static_cast<std::size_t>(labeled_graph_count(m)));
        for_each_graph_in_range(m, 0, labeled_graph_count(m),
                                [&](const Graph& g, std::uint64_t mask) {
                                    slot[mask] = reduced_homology_ranks(g);
                                });
    }
}

const HomologyProfile& HomologyCache::lookup(int m, std::uint64_t edge_mask) const {
    return by_size_[static_cast<std::size_t>(m)][edge_mask];
}

std::vector<std::uint64_t> betti_linear_strand(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 24)
        throw std::invalid_argument("betti_linear_strand supports 1 <= n <= 24");
    std::vector<std::uint64_t> strand(static_cast<std::size_t>(n), 0);
    for (int s = 2; s <= n; ++s) {
        std::uint64_t acc = 0;
        for_each_subset_of_size(n, s, [&](std::uint64_t w) {
            acc += static_cast<std::uint64_t>(component_count_within(g, w) - 1);
        });
        strand[static_cast<std::size_t>(s - 1)] = acc;
    }
    return strand;
}

BettiTable betti_table_full(const Graph& g, const HomologyCache* cache) {
    const int n = g.vertex_count();
    if (n < 1 || n > 8)
        throw std::invalid_argument("betti_table_full supports 1 <= n <= 8");
    BettiTable t;
    t.n = n;
    t.entries[{0, 0}] = 1;
    for (int j = 1; j <= n; ++j) {
        const bool cached = cache && j <= cache->max_n();
        for_each_subset_of_size(n, j, [&](std::uint64_t w) {
            const HomologyProfile profile =
                cached ? cache->lookup(j, induced_edge_mask(g, w))
                       : reduced_homology_ranks(induced_subgraph(g, w));
            for (std::size_t q = 0; q < profile.ranks.size(); ++q)
                if (profile.ranks[q] > 0)
                    t.entries[{j - static_cast<int>(q) - 1, j}] += profile.ranks[q];
        });
    }
    return t;
}

int connectivity_from_betti(const Graph& g) {
    const auto strand = betti_linear_strand(g);
    const int n = g.vertex_count();
    int max_bad = -1;
    for (int i = 0; i < n; ++i)
        if (strand[static_cast<std::size_t>(i)] > 0) max_bad = i;
    return max_bad < 0 ? n : n - max_bad - 1;
}

}  // namespace cqv
