#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "transform.hpp"

namespace cqv {

// SD-words: strings over {S, D}, leftmost letter = outermost (last-applied)
// operation, rightmost letter always S. Length = vertex count of the graph
// the word builds.

// Syntactic validity (nonempty, S/D only, ends in S); throws ParseError.
void check_word(const std::string& w);

// Builds the threshold graph, processing letters right to left: S cones,
// D adds an isolated vertex. Vertex i is created by the i-th letter from the
// right, so the leftmost letter always owns the highest index.
Graph word_to_graph(const std::string& w);

// Unique word of a threshold graph, or nullopt if g is not threshold.
// Peels the highest-index isolated (D) or dominating (S) vertex; a single
// remaining vertex is S. Exact inverse of word_to_graph.
std::optional<std::string> graph_to_word(const Graph& g);

// Splits w after each S; b_i = length of the i-th piece. Σ b_i = |w|.
IntVector word_to_bvector(const std::string& w);

// Inverse: D^{b_i - 1} S concatenated over i. Every b_i must be >= 1.
std::string bvector_to_word(const IntVector& b);

// True iff k <= |w| and the first k letters are all S; equivalent to the
// graph of w being k-connected.
bool word_is_k_connected(const std::string& w, int k);

// Streams B(n,d,k): positive vectors of length d summing to n whose first k
// entries are 1, in lexicographic order. Parameters must satisfy
// n >= d >= 1, 0 <= k <= d; the k = d, n > d corner is an empty stream.
class BVectorEnumerator {
public:
    BVectorEnumerator(long long n, int d, int k);
    std::optional<IntVector> next();

private:
    int d_, k_;
    bool started_ = false, done_ = false;
    std::vector<long long> cur_;
};

// |B(n,d,k)| = C(n-k-1, d-k-1) for k < d; for k = d it is [n = d].
mpz_class bvector_count(long long n, int d, int k);

// Realizer: a k-connected chordal (threshold) graph with clique
// vector exactly c. Rejects (ValidationReject) when no such graph exists;
// the construction is re-verified internally before returning.
Graph realize(const IntVector& c, int k);

}  // namespace cqv
