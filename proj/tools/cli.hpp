#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracmatch/graph.hpp"

namespace fracmatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Graph argument: "family:<name>:<params>[+<name>:<params>...]" (disjoint
/// union), a path to a graph6 / edge-list file, or a graph6 literal.
Graph resolve_graph(const std::string &arg);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fracmatch::cli
