#pragma once

#include <cstdint>
#include <string>

#include "pfptopo/graph.hpp"
#include "pfptopo/preference.hpp"

namespace pfp {

// How the network grows, one node per step in either case.
//   NewNodeOnly: the new node attaches to new_node_links distinct existing
//     nodes; every link is external.
//   Interactive: with probability one_host_probability the new node attaches
//     to one host and the host gains two internal links to distinct
//     non-adjacent peers; otherwise the new node attaches to two hosts and
//     one of them (picked uniformly) gains one internal link. Either way a
//     step adds exactly three links.
enum class GrowthKind { NewNodeOnly, Interactive };

struct ModelConfig {
  GrowthKind growth = GrowthKind::Interactive;
  PreferenceScheme scheme = PreferenceScheme::linear();
  int new_node_links = 3;           // m, used by NewNodeOnly
  double one_host_probability = 0.4;  // p, used by Interactive
  NodeId target_nodes = 9204;
  NodeId seed_nodes = 10;
  int seed_links = 30;
  std::uint64_t rng_seed = 1;

  void validate() const;  // throws std::invalid_argument

  // The four standard parameterizations.
  static ModelConfig ba(NodeId nodes, std::uint64_t seed);
  static ModelConfig ig(NodeId nodes, std::uint64_t seed);
  static ModelConfig ba_pfp(NodeId nodes, std::uint64_t seed);
  static ModelConfig pfp(NodeId nodes, std::uint64_t seed);
};

inline constexpr double kDefaultDelta = 0.021;
inline constexpr double kDefaultOneHostProbability = 0.4;

std::string describe(const ModelConfig& cfg);

// Expected internal/external link ratio (1 + p) / (2 - p) of interactive
// growth with one-host probability p.
double expected_link_ratio(double p);

}  // namespace pfp
