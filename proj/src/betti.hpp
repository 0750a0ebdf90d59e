#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "homology.hpp"

namespace cqv {

// Graded Betti numbers of the face ring of a clique complex. Sparse: only
// nonzero entries are stored, plus the conventional beta_{0,0} = 1.
struct BettiTable {
    int n = 0;
    std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> beta_{i,j}

    int projective_dimension() const;       // max i with a nonzero row
    int depth() const;                      // n - pd (Auslander-Buchsbaum)
    bool has_two_linear_resolution() const; // nonzero entries off (0,0) all have j-i = 1
    std::string to_json() const;            // {"n": n, "entries": [[i,j,v],...]} sorted
};

// Homology profiles of every labeled graph on m <= max_n vertices, keyed by
// edge mask; lets subset sweeps reuse work across host graphs. max_n <= 6.
// Fully built on construction, so lookups are safe from many threads.
class HomologyCache {
public:
    explicit HomologyCache(int max_n);
    int max_n() const { return static_cast<int>(by_size_.size()) - 1; }
    const HomologyProfile& lookup(int m, std::uint64_t edge_mask) const;

private:
    std::vector<std::vector<HomologyProfile>> by_size_;
};

// Linear strand beta_{i,i+1} = sum over |W| = i+1 of (components(G_W) - 1),
// index i = 0..n-1. Component counting only; 1 <= n <= 24.
std::vector<std::uint64_t> betti_linear_strand(const Graph& g);

// Full table via the subset-homology sum beta_{i,j} = sum over |W| = j of
// dim H~_{j-i-1}(induced complex). 1 <= n <= 8. A cache covering a subset
// size is used for that size when supplied.
BettiTable betti_table_full(const Graph& g, const HomologyCache* cache = nullptr);

// max k <= n such that beta_{i,i+1} = 0 for all i >= n-k; equals the
// deletion-convention vertex connectivity (kappa(K_n) = n).
int connectivity_from_betti(const Graph& g);

}  // namespace cqv
