#include "pfptopo/model.hpp"

#include <cstdio>
#include <stdexcept>

namespace pfp {

namespace {

ModelConfig base(NodeId nodes, std::uint64_t seed) {
  ModelConfig cfg;
  cfg.target_nodes = nodes;
  cfg.rng_seed = seed;
  return cfg;
}

}  // namespace

void ModelConfig::validate() const {
  const std::int64_t n0 = seed_nodes;
  if (n0 < 1) throw std::invalid_argument("model: seed_nodes must be >= 1");
  if (seed_links < n0 - 1 || seed_links > n0 * (n0 - 1) / 2)
    throw std::invalid_argument(
        "model: seed_links must allow a connected simple graph on " +
        std::to_string(n0) + " nodes");
  if (target_nodes < seed_nodes)
    throw std::invalid_argument("model: target_nodes must be >= seed_nodes");
  switch (growth) {
    case GrowthKind::NewNodeOnly:
      if (new_node_links < 1)
        throw std::invalid_argument("model: new_node_links must be >= 1");
      if (new_node_links > seed_nodes)
        throw std::invalid_argument(
            "model: seed graph too small for new_node_links distinct "
            "targets");
      break;
    case GrowthKind::Interactive:
      if (one_host_probability < 0 || one_host_probability > 1)
        throw std::invalid_argument(
            "model: one_host_probability must be in [0, 1]");
      if (seed_nodes < 4)
        throw std::invalid_argument(
            "model: interactive growth needs at least 4 seed nodes");
      break;
  }
}

ModelConfig ModelConfig::ba(NodeId nodes, std::uint64_t seed) {
  ModelConfig cfg = base(nodes, seed);
  cfg.growth = GrowthKind::NewNodeOnly;
  cfg.scheme = PreferenceScheme::linear();
  return cfg;
}

ModelConfig ModelConfig::ig(NodeId nodes, std::uint64_t seed) {
  ModelConfig cfg = base(nodes, seed);
  cfg.growth = GrowthKind::Interactive;
  cfg.scheme = PreferenceScheme::linear();
  cfg.one_host_probability = kDefaultOneHostProbability;
  return cfg;
}

ModelConfig ModelConfig::ba_pfp(NodeId nodes, std::uint64_t seed) {
  ModelConfig cfg = ba(nodes, seed);
  cfg.scheme = PreferenceScheme::positive_feedback(kDefaultDelta);
  return cfg;
}

ModelConfig ModelConfig::pfp(NodeId nodes, std::uint64_t seed) {
  ModelConfig cfg = ig(nodes, seed);
  cfg.scheme = PreferenceScheme::positive_feedback(kDefaultDelta);
  return cfg;
}

std::string describe(const ModelConfig& cfg) {
  char buf[160];
  if (cfg.growth == GrowthKind::NewNodeOnly)
    std::snprintf(buf, sizeof buf, "new-node-only(m=%d) %s",
                  cfg.new_node_links, to_string(cfg.scheme).c_str());
  else
    std::snprintf(buf, sizeof buf, "interactive(p=%g) %s",
                  cfg.one_host_probability, to_string(cfg.scheme).c_str());
  return buf;
}

double expected_link_ratio(double p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("expected_link_ratio: p must be in [0, 1]");
  return (1.0 + p) / (2.0 - p);
}

}  // namespace pfp
