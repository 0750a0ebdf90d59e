#include "threshold.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "chordal.hpp"
#include "errors.hpp"

namespace cqv {

void check_word(const std::string& w) {
    if (w.empty()) throw ParseError("empty word");
    for (char ch : w)
        if (ch != 'S' && ch != 'D')
            throw ParseError(std::string("word letter '") + ch + "' is not S or D");
    if (w.back() != 'S') throw ParseError("word must end in S");
}

Graph word_to_graph(const std::string& w) {
    check_word(w);
    if (w.size() > static_cast<std::size_t>(kMaxVertices)) {
        std::ostringstream os;
        os << "word needs " << w.size() << " vertices; max is " << kMaxVertices;
        throw std::invalid_argument(os.str());
    }
    Graph g(0);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        g = (*it == 'S') ? cone(g) : add_isolated(g);
    return g;
}

std::optional<std::string> graph_to_word(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("graph_to_word needs n >= 1");
    std::uint64_t alive = g.vertex_mask();
    std::string w;
    w.reserve(static_cast<std::size_t>(n));
    while (std::popcount(alive) > 1) {
        int iso = -1, dom = -1;
        for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint64_t nb = g.neighbors(v) & alive;
            if (nb == 0)
                iso = v;  // ascending scan keeps the highest index
            else if (nb == (alive & ~(std::uint64_t{1} << v)))
                dom = v;
        }
        if (iso >= 0) {
            w.push_back('D');
            alive &= ~(std::uint64_t{1} << iso);
        } else if (dom >= 0) {
            w.push_back('S');
            alive &= ~(std::uint64_t{1} << dom);
        } else {
            return std::nullopt;
        }
    }
    w.push_back('S');
    return w;
}

IntVector word_to_bvector(const std::string& w) {
    check_word(w);
    IntVector b;
    unsigned long run = 0;
    for (char ch : w) {
        ++run;
        if (ch == 'S') {
            b.emplace_back(run);
            run = 0;
        }
    }
    return b;
}

std::string bvector_to_word(const IntVector& b) {
    if (b.empty()) throw std::invalid_argument("vector must have length >= 1");
    constexpr unsigned long kMaxWord = 1u << 20;
    mpz_class total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= 0) {
            std::ostringstream os;
            os << "b_" << (i + 1) << " = " << b[i].get_str() << " not positive";
            throw std::invalid_argument(os.str());
        }
        total += b[i];
        if (total > kMaxWord) {
            std::ostringstream os;
            os << "word would exceed " << kMaxWord << " letters";
            throw std::invalid_argument(os.str());
        }
    }
    std::string w;
    w.reserve(total.get_ui());
    for (const mpz_class& part : b) {
        w.append(part.get_ui() - 1, 'D');
        w.push_back('S');
    }
    return w;
}

bool word_is_k_connected(const std::string& w, int k) {
    check_word(w);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (static_cast<std::size_t>(k) > w.size()) return false;
    for (int i = 0; i < k; ++i)
        if (w[static_cast<std::size_t>(i)] != 'S') return false;
    return true;
}

namespace {

void check_bvector_params(long long n, int d, int k) {
    if (d < 1 || n < d) throw std::invalid_argument("need n >= d >= 1");
    if (k < 0 || k > d) throw std::invalid_argument("need 0 <= k <= d");
}

}  // namespace

BVectorEnumerator::BVectorEnumerator(long long n, int d, int k) : d_(d), k_(k) {
    check_bvector_params(n, d, k);
    if (k == d && n != d) {
        done_ = true;  // first k entries pinned to 1 cannot sum to n
        return;
    }
    cur_.assign(static_cast<std::size_t>(d), 1);
    cur_.back() = n - d + 1;  // lexicographically least composition
}

std::optional<IntVector> BVectorEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Lex successor: rightmost position p >= k whose suffix is not all
        // ones gets incremented; the suffix collapses back to least form.
        long long suffix = 0;
        int p = -1;
        for (int q = d_ - 2; q >= k_; --q) {
            suffix += cur_[static_cast<std::size_t>(q + 1)];
            if (suffix > d_ - 1 - q) {
                p = q;
                break;
            }
        }
        if (p < 0) {
            done_ = true;
            return std::nullopt;
        }
        cur_[static_cast<std::size_t>(p)]++;
        for (int q = p + 1; q < d_ - 1; ++q) cur_[static_cast<std::size_t>(q)] = 1;
        cur_[static_cast<std::size_t>(d_ - 1)] = suffix - 1 - (d_ - 2 - p);
    }
    started_ = true;
    IntVector out;
    out.reserve(cur_.size());
    for (long long x : cur_) out.emplace_back(static_cast<long>(x));
    return out;
}

mpz_class bvector_count(long long n, int d, int k) {
    check_bvector_params(n, d, k);
    if (k == d) return n == d ? 1 : 0;
    return binomial(static_cast<unsigned long>(n - k - 1), static_cast<unsigned long>(d - k - 1));
}

Graph realize(const IntVector& c, int k) {
    const Validation v = validate_clique_vector(c, k);
    if (!v.ok) throw ValidationReject(v.reason);
    if (c[0] > kMaxVertices) {
        std::ostringstream os;
        os << "graph would have " << c[0].get_str() << " vertices; max is " << kMaxVertices;
        throw std::invalid_argument(os.str());
    }
    const Graph g = word_to_graph(bvector_to_word(c_to_b(c)));
    const auto peo = is_chordal(g);
    if (!peo) throw std::logic_error("realize: graph is not chordal");
    const auto counted = g.vertex_count() <= 16 ? clique_vector_bruteforce(g)
                                                : clique_vector_chordal(g, *peo);
    if (to_int_vector(counted) != c) throw std::logic_error("realize: clique vector mismatch");
    if (connectivity(g) < k) throw std::logic_error("realize: connectivity below k");
    return g;
}

}  // namespace cqv
