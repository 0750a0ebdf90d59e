#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cqv {

// Exact integer vectors; every transform in this module is arbitrary
// precision because the alternating sums can dwarf the inputs.
using IntVector = std::vector<mpz_class>;

// Exact C(n, k); 0 when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

// Basis change between  Σ c_i (x-1)^{i-1}  and  Σ b_i x^{i-1}:
//   b_j = Σ_{i≥j} (-1)^{i-j} C(i-1, j-1) c_i
//   c_j = Σ_{i≥j} C(i-1, j-1) b_i
// Mutually inverse on every integer vector.
IntVector c_to_b(const IntVector& c);
IntVector b_to_c(const IntVector& b);

struct Validation {
    bool ok = false;
    std::string reason;  // empty iff ok
};

// Tests whether c is the clique vector of some k-connected chordal graph:
// with b = c_to_b(c), requires k <= d, all b_i >= 1, and b_1 = ... = b_k = 1.
// Reports the first violated condition in that order.
Validation validate_clique_vector(const IntVector& c, int k);

IntVector to_int_vector(const std::vector<std::uint64_t>& v);

// Comma-separated decimal integers ("10,14,11,3"); spaces around entries are
// tolerated on input and never produced on output.
IntVector parse_int_vector(const std::string& text);
std::string format_int_vector(const IntVector& v);

}  // namespace cqv
