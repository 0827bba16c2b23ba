#include "pfptopo/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pfp {

const std::vector<NodeId>& Graph::adj(NodeId v) const {
  if (v < 0 || v >= node_count())
    throw std::out_of_range("graph: node " + std::to_string(v) +
                            " does not exist");
  return adj_[static_cast<std::size_t>(v)];
}

NodeId Graph::add_node() {
  adj_.emplace_back();
  return static_cast<NodeId>(adj_.size()) - 1;
}

void Graph::add_edge(NodeId u, NodeId v, EdgeKind kind) {
  if (u == v)
    throw std::invalid_argument("graph: self-loop at node " +
                                std::to_string(u));
  auto& au = adj(u);
  auto& av = adj(v);
  const auto iu = std::lower_bound(au.begin(), au.end(), v);
  if (iu != au.end() && *iu == v)
    throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) +
                                " " + std::to_string(v));
  au.insert(iu, v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++links_;
  switch (kind) {
    case EdgeKind::Seed: ++seed_; break;
    case EdgeKind::External: ++external_; break;
    case EdgeKind::Internal: ++internal_; break;
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& au = adj(u);
  const auto& av = adj(v);
  const auto& shorter = au.size() <= av.size() ? au : av;
  const NodeId target = au.size() <= av.size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

bool Graph::is_connected() const {
  const NodeId n = node_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  NodeId reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : adj_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(static_cast<std::size_t>(links_));
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace pfp
