#include "transform.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace cqv {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

IntVector c_to_b(const IntVector& c) {
    const std::size_t d = c.size();
    if (d == 0) throw std::invalid_argument("vector must have length >= 1");
    IntVector b(d);
    for (std::size_t j = 1; j <= d; ++j) {
        mpz_class acc = 0;
        for (std::size_t i = j; i <= d; ++i) {
            const mpz_class term = binomial(i - 1, j - 1) * c[i - 1];
            if ((i - j) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        b[j - 1] = acc;
    }
    return b;
}

IntVector b_to_c(const IntVector& b) {
    const std::size_t d = b.size();
    if (d == 0) throw std::invalid_argument("vector must have length >= 1");
    IntVector c(d);
    for (std::size_t j = 1; j <= d; ++j) {
        mpz_class acc = 0;
        for (std::size_t i = j; i <= d; ++i) acc += binomial(i - 1, j - 1) * b[i - 1];
        c[j - 1] = acc;
    }
    return c;
}

Validation validate_clique_vector(const IntVector& c, int k) {
    const int d = static_cast<int>(c.size());
    if (d == 0) throw std::invalid_argument("clique vector must have length >= 1");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k > d) {
        std::ostringstream os;
        os << "k = " << k << " exceeds vector length d = " << d;
        return {false, os.str()};
    }
    const IntVector b = c_to_b(c);
    for (int i = 1; i <= d; ++i)
        if (b[static_cast<std::size_t>(i - 1)] <= 0) {
            std::ostringstream os;
            os << "b_" << i << " = " << b[static_cast<std::size_t>(i - 1)].get_str()
               << " not positive";
            return {false, os.str()};
        }
    for (int i = 1; i <= k; ++i)
        if (b[static_cast<std::size_t>(i - 1)] != 1) {
            std::ostringstream os;
            os << "b_" << i << " = " << b[static_cast<std::size_t>(i - 1)].get_str() << " != 1";
            return {false, os.str()};
        }
    return {true, ""};
}

IntVector to_int_vector(const std::vector<std::uint64_t>& v) {
    IntVector out;
    out.reserve(v.size());
    for (std::uint64_t x : v) out.emplace_back(static_cast<unsigned long>(x));
    return out;
}

IntVector parse_int_vector(const std::string& text) {
    IntVector out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        std::size_t a = 0, b = tok.size();
        while (a < b && std::isspace(static_cast<unsigned char>(tok[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(tok[b - 1]))) --b;
        tok = tok.substr(a, b - a);
        if (tok.empty()) throw ParseError("empty entry in integer vector");
        bool digits = !tok.empty();
        for (std::size_t p = 0; p < tok.size(); ++p) {
            const char ch = tok[p];
            if (p == 0 && (ch == '-' || ch == '+') && tok.size() > 1) continue;
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                digits = false;
                break;
            }
        }
        if (!digits) throw ParseError("bad integer '" + tok + "' in vector");
        if (tok[0] == '+') tok.erase(0, 1);  // mpz_set_str takes no leading +
        out.emplace_back(tok, 10);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw ParseError("empty integer vector");
    return out;
}

std::string format_int_vector(const IntVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out;
}

}  // namespace cqv
