#include "homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cqv {

namespace {

// Row-echelon rank of an integer matrix, fraction-free: eliminate with
// cross-multiplied row updates, then shrink rows by their gcd so entries
// stay near the input scale. Returns nullopt if any 64-bit step overflows.
std::optional<int> rank_i64(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t s = r; s < rows; ++s)
            if (m[s][c] != 0 &&
                (pivot == rows || std::abs(m[s][c]) < std::abs(m[pivot][c])))
                pivot = s;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const std::int64_t p = m[r][c];
        for (std::size_t s = r + 1; s < rows; ++s) {
            const std::int64_t q = m[s][c];
            if (q == 0) continue;
            const std::int64_t g = std::gcd(p, q);
            const std::int64_t mp = p / g, mq = q / g;
            std::int64_t row_gcd = 0;
            for (std::size_t j = c; j < cols; ++j) {
                std::int64_t a, b, diff;
                if (__builtin_mul_overflow(mp, m[s][j], &a) ||
                    __builtin_mul_overflow(mq, m[r][j], &b) ||
                    __builtin_sub_overflow(a, b, &diff))
                    return std::nullopt;
                m[s][j] = diff;
                row_gcd = std::gcd(row_gcd, diff);
            }
            if (row_gcd > 1)
                for (std::size_t j = c; j < cols; ++j) m[s][j] /= row_gcd;
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank_mpz(const std::vector<std::vector<std::int64_t>>& in) {
    const std::size_t rows = in.size();
    if (rows == 0) return 0;
    const std::size_t cols = in[0].size();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(in[i][j]);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t s = r; s < rows; ++s)
            if (m[s][c] != 0 && (pivot == rows || cmp(abs(m[s][c]), abs(m[pivot][c])) < 0))
                pivot = s;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const mpz_class p = m[r][c];
        for (std::size_t s = r + 1; s < rows; ++s) {
            if (m[s][c] == 0) continue;
            const mpz_class q = m[s][c];
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            const mpz_class mp = p / g, mq = q / g;
            mpz_class row_gcd = 0;
            for (std::size_t j = c; j < cols; ++j) {
                m[s][j] = mp * m[s][j] - mq * m[r][j];
                mpz_gcd(row_gcd.get_mpz_t(), row_gcd.get_mpz_t(), m[s][j].get_mpz_t());
            }
            if (row_gcd > 1)
                for (std::size_t j = c; j < cols; ++j) m[s][j] /= row_gcd;
        }
        ++r;
    }
    return static_cast<int>(r);
}

int matrix_rank(const std::vector<std::vector<std::int64_t>>& m) {
    if (auto r = rank_i64(m)) return *r;
    return rank_mpz(m);
}

bool is_clique(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if ((g.neighbors(v) & mask) != (mask & ~(std::uint64_t{1} << v))) return false;
    }
    return true;
}

}  // namespace

HomologyProfile reduced_homology_ranks(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 10)
        throw std::invalid_argument("reduced_homology_ranks supports 1 <= n <= 10");

    // faces[s] = masks of the s-vertex cliques, ascending (dimension s-1)
    std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(n) + 1);
    const std::uint64_t full = g.vertex_mask();
    for (std::uint64_t mask = 1; mask <= full; ++mask)
        if (is_clique(g, mask)) faces[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    int d = 1;
    for (int s = n; s >= 1; --s)
        if (!faces[static_cast<std::size_t>(s)].empty()) {
            d = s;
            break;
        }

    // rank[q] = rank of the boundary map from q-faces to (q-1)-faces
    std::vector<int> rank(static_cast<std::size_t>(d) + 1, 0);
    rank[0] = 1;  // augmentation: n >= 1 vertices
    for (int q = 1; q < d; ++q) {
        const auto& lo = faces[static_cast<std::size_t>(q)];      // (q-1)-faces
        const auto& hi = faces[static_cast<std::size_t>(q + 1)];  // q-faces
        std::vector<std::vector<std::int64_t>> m(
            lo.size(), std::vector<std::int64_t>(hi.size(), 0));
        for (std::size_t col = 0; col < hi.size(); ++col) {
            int t = 0;
            for (std::uint64_t rest = hi[col]; rest; rest &= rest - 1, ++t) {
                const std::uint64_t sub = hi[col] & ~(rest & -rest);
                const auto it = std::lower_bound(lo.begin(), lo.end(), sub);
                m[static_cast<std::size_t>(it - lo.begin())][col] = (t % 2 == 0) ? 1 : -1;
            }
        }
        rank[static_cast<std::size_t>(q)] = matrix_rank(m);
    }

    HomologyProfile h;
    h.ranks.assign(static_cast<std::size_t>(d), 0);
    long long euler_faces = 0, euler_h = 0;
    for (int q = 0; q < d; ++q) {
        const long long fq = static_cast<long long>(faces[static_cast<std::size_t>(q + 1)].size());
        const long long hq = fq - rank[static_cast<std::size_t>(q)] - rank[static_cast<std::size_t>(q + 1)];
        if (hq < 0) throw std::logic_error("homology self-check failed: negative rank");
        h.ranks[static_cast<std::size_t>(q)] = static_cast<std::uint64_t>(hq);
        const long long sign = (q % 2 == 0) ? 1 : -1;
        euler_faces += sign * fq;
        euler_h += sign * hq;
    }
    if (euler_faces != euler_h + 1)
        throw std::logic_error("homology self-check failed: Euler mismatch");
    return h;
}

}  // namespace cqv
