#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace cqv {

// Reduced rational homology of a clique complex. ranks[q] = dim H~_q for
// q = 0..d-1 where d is the clique number (top possible dimension + 1).
struct HomologyProfile {
    std::vector<std::uint64_t> ranks;

    bool operator==(const HomologyProfile&) const = default;
};

// Exact ranks via integer boundary matrices (fraction-free elimination,
// 64-bit fast path with arbitrary-precision fallback). 1 <= n <= 10.
// Every call self-checks the Euler identity
//   Σ (-1)^q f_q = 1 + Σ (-1)^q h~_q
// and throws std::logic_error if it fails.
HomologyProfile reduced_homology_ranks(const Graph& g);

}  // namespace cqv
