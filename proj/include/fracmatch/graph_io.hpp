#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch {

// graph6: one header byte n+63 for n <= 62, otherwise '~' followed by three
// 6-bit groups of n. The body lists the upper triangle column by column,
// x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte (most significant
// first), each byte offset by 63 and the last one zero-padded.

/// Strict parser: rejects bad header, characters outside 63..126, wrong body
/// length, non-zero padding bits and trailing characters.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

/// Edge list: first token n, then whitespace-separated pairs "u v" (0-based).
/// Loops, out-of-range endpoints, duplicate edges and dangling tokens throw ParseError.
Graph parse_edgelist(std::string_view text);
/// "n\n" followed by one "u v\n" line per edge, u < v, ascending.
std::string emit_edgelist(const Graph &g);

/// Reads one graph per non-empty line of graph6 text (an optional ">>graph6<<"
/// prefix on the first line is skipped).
std::vector<Graph> read_graph6_stream(std::istream &in);

/// Interprets `text` as an edge list if its first non-blank character is a
/// digit, otherwise as a single graph6 line.
Graph parse_graph_auto(std::string_view text);

} // namespace fracmatch
