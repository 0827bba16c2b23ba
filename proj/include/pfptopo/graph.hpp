#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pfp {

using NodeId = std::int32_t;

// Provenance of a link: part of the random seed graph, attached to a node on
// arrival (external), or added between two existing nodes (internal).
enum class EdgeKind { Seed, External, Internal };

// Undirected simple graph with dense ids 0..node_count()-1 assigned in
// creation order. Neighbor lists are kept sorted, so iteration order is
// deterministic and edge lookup costs O(log k).
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeId n) : adj_(static_cast<std::size_t>(n)) {}

  NodeId add_node();
  void add_edge(NodeId u, NodeId v, EdgeKind kind);
  bool has_edge(NodeId u, NodeId v) const;

  int degree(NodeId v) const { return static_cast<int>(adj(v).size()); }
  std::span<const NodeId> neighbors(NodeId v) const {
    const auto& a = adj(v);
    return {a.data(), a.size()};
  }

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
  std::int64_t link_count() const { return links_; }
  std::int64_t seed_links() const { return seed_; }
  std::int64_t external_links() const { return external_; }
  std::int64_t internal_links() const { return internal_; }

  bool is_connected() const;

  // All edges as (u, v) with u < v, sorted by (u, v).
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  const std::vector<NodeId>& adj(NodeId v) const;
  std::vector<NodeId>& adj(NodeId v) {
    return const_cast<std::vector<NodeId>&>(std::as_const(*this).adj(v));
  }

  std::vector<std::vector<NodeId>> adj_;
  std::int64_t links_ = 0;
  std::int64_t seed_ = 0;
  std::int64_t external_ = 0;
  std::int64_t internal_ = 0;
};

}  // namespace pfp
