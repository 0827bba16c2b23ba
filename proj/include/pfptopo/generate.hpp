#pragma once

#include <functional>
#include <span>

#include "pfptopo/graph.hpp"
#include "pfptopo/model.hpp"
#include "pfptopo/rng.hpp"

namespace pfp {

// Uniform draw over connected simple graphs with n0 nodes and m0 links:
// sample m0 distinct pairs, reject the whole draw while disconnected.
Graph seed_graph(NodeId n0, int m0, Rng& rng);

// One node v outside exclude, with probability proportional to
// preference_weight(degree(v), scheme) among non-excluded nodes.
NodeId sample_preferential(const Graph& g, const PreferenceScheme& scheme,
                           std::span<const NodeId> exclude, Rng& rng);

// Single growth steps, exposed for tests; generate() applies them repeatedly.
void step_new_node_only(Graph& g, int m, const PreferenceScheme& scheme,
                        Rng& rng);
void step_interactive(Graph& g, double one_host_probability,
                      const PreferenceScheme& scheme, Rng& rng);

Graph generate(const ModelConfig& cfg);

// As generate(), invoking observer after the seed graph and after each step.
Graph generate(const ModelConfig& cfg,
               const std::function<void(const Graph&)>& observer);

}  // namespace pfp
