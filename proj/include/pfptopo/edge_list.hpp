#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pfptopo/graph.hpp"

namespace pfp {

// Plain text edge list: one "u v" pair per line, u < v, sorted by (u, v).
// Lines starting with '#' and blank lines are ignored on input.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);
std::string edge_list_string(const Graph& g);

// Node ids in the input may be any nonnegative integers; they are compacted
// to 0..n-1 preserving numeric order, so files written by write_edge_list
// round-trip with identical ids. Malformed lines, self-loops and duplicate
// edges raise std::runtime_error naming the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

}  // namespace pfp
