#include "pfptopo/edge_list.hpp"

#include "pfptopo/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace pfp {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("edge list: line " + std::to_string(line) + ": " +
                           what);
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_edge_list(g, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  struct Entry {
    std::int64_t u, v;
    int line;
  };
  std::vector<Entry> entries;
  std::vector<std::int64_t> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::int64_t u, v;
    if (!(fields >> u >> v)) fail(line_no, "expected two integer node ids");
    std::string rest;
    if (fields >> rest) fail(line_no, "trailing content '" + rest + "'");
    if (u < 0 || v < 0) fail(line_no, "negative node id");
    if (u == v) fail(line_no, "self-loop at node " + std::to_string(u));
    entries.push_back({u, v, line_no});
    ids.push_back(u);
    ids.push_back(v);
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::int64_t, NodeId> rank;
  rank.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    rank.emplace(ids[i], static_cast<NodeId>(i));

  Graph g(static_cast<NodeId>(ids.size()));
  for (const auto& e : entries) {
    const NodeId u = rank[e.u];
    const NodeId v = rank[e.v];
    if (g.has_edge(u, v))
      fail(e.line, "duplicate edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    g.add_edge(u, v, EdgeKind::Seed);
  }
  return g;
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_edge_list(in);
}

}  // namespace pfp
