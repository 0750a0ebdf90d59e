#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace cqv {

enum class GraphFormat { edge_list, graph6 };

// Edge-list text: first line "n", then one "u v" pair per line, 0-indexed.
// Rejects malformed headers, out-of-range endpoints, self-loops and
// duplicate edges.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// graph6: standard bit-packed upper-triangle encoding, 63-offset printable
// bytes, column-major bit order x(0,1) x(0,2) x(1,2) x(0,3) ...
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat fmt);
// Auto-detect: a leading digit means edge list, anything else graph6.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g, GraphFormat fmt);

}  // namespace cqv
