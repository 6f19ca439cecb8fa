#pragma once

#include <string>
#include <string_view>

#include "ioc/graph.hpp"

namespace ioc {

/// Parses one graph6 string (an optional ">>graph6<<" header and trailing
/// whitespace are accepted). Errors carry the byte offset of the offending
/// character and use ErrorCode::ParseError.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 without a header or trailing newline.
std::string to_graph6(const Graph& g);

/// Parses an edge list: one "u v" pair per line, '#' starts a comment, blank
/// lines are skipped. The order is one more than the largest index seen.
/// Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// One "u v" line per edge in lexicographic order.
std::string to_edge_list(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

/// Chooses the format from content: a single token of printable graph6
/// characters is graph6, anything else is an edge list.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text);

/// Reads and parses a file. Missing files raise ParseError.
Graph read_graph_file(const std::string& path);

}  // namespace ioc
