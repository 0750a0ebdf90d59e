#include "graph_io.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace cqv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long parse_long(std::string_view tok, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(std::string(tok), &pos);
        if (pos != tok.size()) throw ParseError("");
        return v;
    } catch (const ParseError&) {
        throw ParseError(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
    } catch (const std::exception&) {
        throw ParseError(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
    }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty()) continue;
        n = parse_long(t, "vertex-count header");
        break;
    }
    if (n < 0) throw ParseError("missing vertex-count header");
    if (n > kMaxVertices) throw ParseError("vertex count exceeds the 64-vertex cap");
    Graph g(static_cast<int>(n));
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty()) continue;
        std::istringstream ls{std::string(t)};
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError("malformed edge line: '" + std::string(t) + "'");
        long u = parse_long(a, "vertex index");
        long v = parse_long(b, "vertex index");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range on line: '" + std::string(t) + "'");
        if (u == v) throw ParseError("self-loop: '" + std::string(t) + "'");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge: '" + std::string(t) + "'");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte");
    std::size_t pos = 0;
    long n;
    if (s[0] == '~') {
        // long form: '~' followed by 18 bits in three bytes
        if (s.size() < 4) throw ParseError("truncated graph6 size");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > kMaxVertices) throw ParseError("graph6 vertex count exceeds the 64-vertex cap");
    const long nbits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(need) +
                         " data bytes, got " + std::to_string(s.size() - pos));
    Graph g(static_cast<int>(n));
    long b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b) {
            const int byte = s[pos + static_cast<std::size_t>(b / 6)] - 63;
            if ((byte >> (5 - b % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (long p = nbits; p < static_cast<long>(need) * 6; ++p) {
        const int byte = s[pos + static_cast<std::size_t>(p / 6)] - 63;
        if ((byte >> (5 - p % 6)) & 1) throw ParseError("nonzero graph6 padding");
    }
    return g;
}

std::string format_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat fmt) {
    return fmt == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

Graph parse_graph(std::string_view text) {
    const auto t = trim(text);
    if (t.empty()) throw ParseError("empty graph text");
    // a digit can open an edge-list header but never a graph6 byte (those
    // start at ASCII 63)
    const bool edge_list = std::isdigit(static_cast<unsigned char>(t.front()));
    return parse_graph(t, edge_list ? GraphFormat::edge_list : GraphFormat::graph6);
}

std::string format_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::edge_list ? format_edge_list(g) : format_graph6(g);
}

}  // namespace cqv
