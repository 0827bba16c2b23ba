#include "pfptopo/generate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfptopo/preference.hpp"

namespace pfp {

namespace {

constexpr NodeId kNone = -1;
constexpr int kMaxStepAttempts = 4096;

// Maintains preference weights over the nodes of a growing graph. The node
// being added in the current step keeps weight 0 until the step completes,
// so it never participates in its own step's selections.
class GrowthEngine {
 public:
  GrowthEngine(Graph& g, PreferenceScheme scheme, NodeId capacity)
      : g_(g), scheme_(scheme),
        weights_(static_cast<std::size_t>(std::max(capacity, g.node_count()))) {
    for (NodeId v = 0; v < g.node_count(); ++v)
      weights_.push_back(preference_weight(g.degree(v), scheme_));
  }

  void step_new_node_only(int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("growth: m must be >= 1");
    if (g_.node_count() < m)
      throw std::invalid_argument(
          "growth: fewer existing nodes than requested links");
    const NodeId n = begin_node();
    std::vector<NodeId> targets;
    targets.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const NodeId t = sample(targets, kNone, rng);
      link(n, t, EdgeKind::External);
      targets.push_back(t);
    }
    settle(n);
  }

  // Host draws that cannot complete their branch (the host is adjacent to
  // too much of the graph to place the internal links) are rejected and
  // redrawn, i.e. hosts are sampled preferentially conditioned on the step
  // being completable. Only a graph where no draw can ever succeed errors.
  void step_interactive(double one_host_probability, Rng& rng) {
    const NodeId old_n = g_.node_count();
    if (old_n < 4)
      throw std::invalid_argument("growth: interactive step needs >= 4 nodes");
    const bool one_host = rng.bernoulli(one_host_probability);
    if (g_.link_count() >= static_cast<std::int64_t>(old_n) * (old_n - 1) / 2)
      throw std::runtime_error(
          "growth: no eligible peer, the graph is complete");
    const NodeId n = begin_node();
    if (one_host) {
      // Two internal links need two distinct old peers not yet adjacent to
      // the host.
      const NodeId host = sample_where(rng, [&](NodeId v) {
        return old_n - 1 - g_.degree(v) >= 2;
      });
      link(n, host, EdgeKind::External);
      const std::array<NodeId, 1> skip{host};
      const NodeId peer1 = sample(skip, host, rng);
      link(host, peer1, EdgeKind::Internal);
      const NodeId peer2 = sample(skip, host, rng);
      link(host, peer2, EdgeKind::Internal);
    } else {
      NodeId h1, h2, star;
      for (int attempt = 0;; ++attempt) {
        h1 = sample({}, kNone, rng);
        const std::array<NodeId, 1> skip1{h1};
        h2 = sample(skip1, kNone, rng);
        star = rng.below(2) == 0 ? h1 : h2;
        const NodeId other = star == h1 ? h2 : h1;
        // Old nodes that are neither host and not adjacent to the starred
        // host; nothing is linked yet, so degrees are pre-step values.
        const NodeId avail = old_n - 1 - g_.degree(star) -
                             (g_.has_edge(star, other) ? 0 : 1);
        if (avail >= 1) break;
        if (attempt >= kMaxStepAttempts)
          throw std::runtime_error(
              "growth: no eligible peer after repeated host draws (graph "
              "too dense)");
      }
      link(n, h1, EdgeKind::External);
      link(n, h2, EdgeKind::External);
      const std::array<NodeId, 2> hosts{h1, h2};
      const NodeId peer = sample(hosts, star, rng);
      link(star, peer, EdgeKind::Internal);
    }
    settle(n);
  }

 private:
  NodeId begin_node() {
    const NodeId n = g_.add_node();
    weights_.push_back(0.0);
    pending_ = n;
    return n;
  }

  void settle(NodeId n) {
    weights_.set(static_cast<std::size_t>(n),
                 preference_weight(g_.degree(n), scheme_));
    pending_ = kNone;
  }

  // Degree changes take effect immediately, so later selections within the
  // same step see already-incremented weights.
  void link(NodeId u, NodeId v, EdgeKind kind) {
    g_.add_edge(u, v, kind);
    if (u != pending_)
      weights_.set(static_cast<std::size_t>(u),
                   preference_weight(g_.degree(u), scheme_));
    if (v != pending_)
      weights_.set(static_cast<std::size_t>(v),
                   preference_weight(g_.degree(v), scheme_));
  }

  // Rejection sampling against the full weight table; candidates failing
  // the predicate are redrawn. After 64 misses fall back to an exact pass
  // over the eligible set -- the same conditional distribution.
  template <class Pred>
  NodeId sample_where(Rng& rng, Pred&& ok) const {
    for (int tries = 0; tries < 64; ++tries) {
      const NodeId v = static_cast<NodeId>(weights_.sample(rng));
      if (weights_.weight(static_cast<std::size_t>(v)) > 0 && ok(v)) return v;
    }
    std::vector<std::pair<NodeId, double>> pool;
    double total = 0.0;
    for (NodeId v = 0; v < g_.node_count(); ++v) {
      const double w = weights_.weight(static_cast<std::size_t>(v));
      if (w > 0 && ok(v)) {
        pool.emplace_back(v, w);
        total += w;
      }
    }
    if (pool.empty())
      throw std::runtime_error(
          "growth: no eligible node to attach (graph too dense)");
    double u = rng.uniform() * total;
    for (const auto& [v, w] : pool) {
      u -= w;
      if (u < 0) return v;
    }
    return pool.back().first;
  }

  NodeId sample(std::span<const NodeId> exclude, NodeId anchor,
                Rng& rng) const {
    return sample_where(rng, [&](NodeId v) {
      for (NodeId e : exclude)
        if (e == v) return false;
      return anchor == kNone || (v != anchor && !g_.has_edge(anchor, v));
    });
  }

  Graph& g_;
  PreferenceScheme scheme_;
  WeightedPicker weights_;
  NodeId pending_ = kNone;
};

}  // namespace

Graph seed_graph(NodeId n0, int m0, Rng& rng) {
  if (n0 < 1) throw std::invalid_argument("seed graph: need at least 1 node");
  const std::int64_t all_pairs =
      static_cast<std::int64_t>(n0) * (n0 - 1) / 2;
  if (m0 < n0 - 1 || m0 > all_pairs)
    throw std::invalid_argument(
        "seed graph: no connected simple graph with " + std::to_string(n0) +
        " nodes and " + std::to_string(m0) + " links");

  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(static_cast<std::size_t>(all_pairs));
  for (NodeId u = 0; u < n0; ++u)
    for (NodeId v = u + 1; v < n0; ++v) pairs.emplace_back(u, v);

  for (;;) {
    // Partial Fisher-Yates: the first m0 entries are a uniform draw of m0
    // distinct pairs.
    for (int i = 0; i < m0; ++i) {
      const std::size_t j =
          static_cast<std::size_t>(i) + rng.below(pairs.size() - i);
      std::swap(pairs[static_cast<std::size_t>(i)], pairs[j]);
    }
    Graph g(n0);
    for (int i = 0; i < m0; ++i)
      g.add_edge(pairs[static_cast<std::size_t>(i)].first,
                 pairs[static_cast<std::size_t>(i)].second, EdgeKind::Seed);
    if (g.is_connected()) return g;
  }
}

NodeId sample_preferential(const Graph& g, const PreferenceScheme& scheme,
                           std::span<const NodeId> exclude, Rng& rng) {
  const NodeId n = g.node_count();
  std::vector<char> excluded(static_cast<std::size_t>(n), 0);
  for (NodeId e : exclude) {
    if (e < 0 || e >= n)
      throw std::out_of_range("sample_preferential: excluded node " +
                              std::to_string(e) + " does not exist");
    excluded[static_cast<std::size_t>(e)] = 1;
  }
  WeightedPicker picker(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v)
    picker.push_back(excluded[static_cast<std::size_t>(v)]
                         ? 0.0
                         : preference_weight(g.degree(v), scheme));
  if (picker.total() <= 0)
    throw std::runtime_error("sample_preferential: all nodes excluded");
  for (;;) {
    const NodeId v = static_cast<NodeId>(picker.sample(rng));
    if (!excluded[static_cast<std::size_t>(v)] &&
        picker.weight(static_cast<std::size_t>(v)) > 0)
      return v;
  }
}

void step_new_node_only(Graph& g, int m, const PreferenceScheme& scheme,
                        Rng& rng) {
  GrowthEngine(g, scheme, g.node_count() + 1).step_new_node_only(m, rng);
}

void step_interactive(Graph& g, double one_host_probability,
                      const PreferenceScheme& scheme, Rng& rng) {
  GrowthEngine(g, scheme, g.node_count() + 1)
      .step_interactive(one_host_probability, rng);
}

Graph generate(const ModelConfig& cfg,
               const std::function<void(const Graph&)>& observer) {
  cfg.validate();
  Rng rng(cfg.rng_seed);
  Graph g = seed_graph(cfg.seed_nodes, cfg.seed_links, rng);
  if (observer) observer(g);
  if (g.node_count() < cfg.target_nodes) {
    GrowthEngine engine(g, cfg.scheme, cfg.target_nodes);
    while (g.node_count() < cfg.target_nodes) {
      if (cfg.growth == GrowthKind::NewNodeOnly)
        engine.step_new_node_only(cfg.new_node_links, rng);
      else
        engine.step_interactive(cfg.one_host_probability, rng);
      if (observer) observer(g);
    }
  }
  return g;
}

Graph generate(const ModelConfig& cfg) { return generate(cfg, nullptr); }

}  // namespace pfp
