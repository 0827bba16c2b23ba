#include "pfptopo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "pfptopo/fit.hpp"

namespace pfp {

namespace {

// Flat adjacency copy; BFS over it is much cheaper than chasing the
// per-node vectors.
struct Csr {
  std::vector<std::int64_t> offset;
  std::vector<NodeId> target;

  explicit Csr(const Graph& g) {
    const NodeId n = g.node_count();
    offset.resize(static_cast<std::size_t>(n) + 1, 0);
    target.reserve(static_cast<std::size_t>(2 * g.link_count()));
    for (NodeId v = 0; v < n; ++v) {
      const auto nb = g.neighbors(v);
      target.insert(target.end(), nb.begin(), nb.end());
      offset[static_cast<std::size_t>(v) + 1] =
          static_cast<std::int64_t>(target.size());
    }
  }
};

}  // namespace

DegreeDistribution degree_distribution(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 1) throw std::invalid_argument("degree_distribution: empty graph");
  DegreeDistribution out;
  std::vector<std::int64_t> hist;
  for (NodeId v = 0; v < n; ++v) {
    const int k = g.degree(v);
    if (k >= static_cast<int>(hist.size())) hist.resize(k + 1, 0);
    ++hist[static_cast<std::size_t>(k)];
    out.max_degree = std::max(out.max_degree, k);
  }
  int populated_in_range = 0;
  for (int k = 0; k < static_cast<int>(hist.size()); ++k) {
    if (hist[static_cast<std::size_t>(k)] == 0) continue;
    out.pk.emplace(k, static_cast<double>(hist[static_cast<std::size_t>(k)]) /
                          n);
    if (k >= DegreeDistribution::kFitMinDegree &&
        k <= DegreeDistribution::kFitMaxDegree)
      ++populated_in_range;
  }
  // The exponent is fitted on the cumulative tail P(>=k): single-graph P(k)
  // tails are dominated by once-seen degrees pinned at 1/N, which drags a
  // direct density fit shallow, while the cumulative curve is noise-robust.
  // The fitted slope is gamma + 1.
  if (populated_in_range >= 3) {
    std::vector<std::pair<double, double>> points;
    double tail = 0.0;
    std::vector<double> cum(hist.size(), 0.0);
    for (int k = static_cast<int>(hist.size()) - 1; k >= 1; --k) {
      tail += static_cast<double>(hist[static_cast<std::size_t>(k)]) / n;
      cum[static_cast<std::size_t>(k)] = tail;
    }
    const int hi = std::min(DegreeDistribution::kFitMaxDegree,
                            static_cast<int>(hist.size()) - 1);
    for (int k = DegreeDistribution::kFitMinDegree; k <= hi; ++k)
      points.emplace_back(k, cum[static_cast<std::size_t>(k)]);
    if (const auto slope =
            fit_power_law(points, DegreeDistribution::kFitMinDegree,
                          DegreeDistribution::kFitMaxDegree))
      out.gamma = *slope - 1.0;
  }
  return out;
}

double RichClubCurve::phi_at_rank(NodeId r) const {
  const auto n = static_cast<double>(ranked_nodes.size());
  const auto it = phi.find(static_cast<double>(r) / n);
  if (it == phi.end())
    throw std::out_of_range("rich_club: no phi value at rank " +
                            std::to_string(r));
  return it->second;
}

double RichClubCurve::phi_at_fraction(double f) const {
  const auto n = static_cast<NodeId>(ranked_nodes.size());
  NodeId r = static_cast<NodeId>(std::llround(f * n));
  r = std::clamp<NodeId>(r, 2, n);
  return phi_at_rank(r);
}

RichClubCurve rich_club(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 2) throw std::invalid_argument("rich_club: need at least 2 nodes");

  RichClubCurve out;
  out.ranked_nodes.resize(static_cast<std::size_t>(n));
  std::iota(out.ranked_nodes.begin(), out.ranked_nodes.end(), 0);
  std::sort(out.ranked_nodes.begin(), out.ranked_nodes.end(),
            [&](NodeId a, NodeId b) {
              const int da = g.degree(a), db = g.degree(b);
              return da != db ? da > db : a < b;
            });
  std::vector<NodeId> rank_of(static_cast<std::size_t>(n));
  for (NodeId r = 0; r < n; ++r)
    rank_of[static_cast<std::size_t>(out.ranked_nodes[r])] = r;

  // Adding nodes in rank order, each contributes its links into the set so
  // far; a prefix stays a clique only while every such count is complete.
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(n) - 1);
  std::int64_t links_within = 0;
  bool still_clique = true;
  out.top_clique = 1;
  for (NodeId r = 1; r < n; ++r) {
    const NodeId v = out.ranked_nodes[static_cast<std::size_t>(r)];
    std::int64_t into_prefix = 0;
    for (NodeId u : g.neighbors(v))
      if (rank_of[static_cast<std::size_t>(u)] < r) ++into_prefix;
    links_within += into_prefix;
    const std::int64_t size = r + 1;
    const std::int64_t possible = size * (size - 1) / 2;
    if (still_clique && links_within == possible)
      out.top_clique = static_cast<int>(size);
    else
      still_clique = false;
    const double fraction = static_cast<double>(size) / n;
    const double density =
        static_cast<double>(links_within) / static_cast<double>(possible);
    out.phi.emplace(fraction, density);
    points.emplace_back(fraction, density);
  }
  out.theta = fit_power_law(points, RichClubCurve::kFitMinFraction,
                            RichClubCurve::kFitMaxFraction);
  return out;
}

std::optional<double> assortativity(const Graph& g) {
  if (g.link_count() < 1)
    throw std::invalid_argument("assortativity: graph has no links");
  // One (j, k) endpoint-degree pair per edge; integer sums keep the
  // symmetric combination exact.
  std::int64_t sum_jk = 0, sum_half = 0, sum_sq = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const std::int64_t du = g.degree(u);
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      const std::int64_t dv = g.degree(v);
      sum_jk += du * dv;
      sum_half += du + dv;
      sum_sq += du * du + dv * dv;
    }
  }
  const auto links = static_cast<double>(g.link_count());
  const double mean = static_cast<double>(sum_half) / (2.0 * links);
  const double num = static_cast<double>(sum_jk) / links - mean * mean;
  const double den = static_cast<double>(sum_sq) / (2.0 * links) - mean * mean;
  if (den == 0) return std::nullopt;
  return num / den;
}

std::map<int, double> knn_by_degree(const Graph& g) {
  std::map<int, std::pair<double, std::int64_t>> acc;  // k -> (sum, count)
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const int k = g.degree(v);
    if (k == 0)
      throw std::invalid_argument("knn_by_degree: node " + std::to_string(v) +
                                  " is isolated");
    double nb_sum = 0;
    for (NodeId u : g.neighbors(v)) nb_sum += g.degree(u);
    auto& [sum, count] = acc[k];
    sum += nb_sum / k;
    ++count;
  }
  std::map<int, double> out;
  for (const auto& [k, sc] : acc)
    out.emplace(k, sc.first / static_cast<double>(sc.second));
  return out;
}

MixingStats mixing_stats(const Graph& g) {
  return {assortativity(g), knn_by_degree(g)};
}

PathStats path_stats(const Graph& g) {
  const NodeId n = g.node_count();
  PathStats out;
  if (n < 2) return out;

  const Csr csr(g);
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
  std::vector<NodeId> queue(static_cast<std::size_t>(n));
  std::vector<std::int64_t> hist;
  std::int64_t total = 0;

  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    queue[0] = s;
    std::size_t head = 0, tail = 1;
    while (head < tail) {
      const NodeId u = queue[head++];
      const std::int32_t du = dist[static_cast<std::size_t>(u)];
      for (std::int64_t i = csr.offset[static_cast<std::size_t>(u)];
           i < csr.offset[static_cast<std::size_t>(u) + 1]; ++i) {
        const NodeId w = csr.target[static_cast<std::size_t>(i)];
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          queue[tail++] = w;
        }
      }
    }
    if (static_cast<NodeId>(tail) != n) {
      NodeId missing = 0;
      while (dist[static_cast<std::size_t>(missing)] >= 0) ++missing;
      throw std::runtime_error("path_stats: nodes " + std::to_string(s) +
                               " and " + std::to_string(missing) +
                               " are disconnected");
    }
    for (NodeId t = 0; t < n; ++t) {
      const std::int32_t d = dist[static_cast<std::size_t>(t)];
      if (t == s) continue;
      if (d >= static_cast<std::int32_t>(hist.size())) hist.resize(d + 1, 0);
      ++hist[static_cast<std::size_t>(d)];
      total += d;
    }
  }

  // Every unordered pair was seen twice; ratios are unaffected, the mean
  // uses the ordered total directly.
  const double pairs = static_cast<double>(n) * (n - 1);
  out.ell_star = static_cast<double>(total) / pairs;
  std::int64_t at_least = 0;
  std::map<int, double> ccd;
  for (int l = static_cast<int>(hist.size()) - 1; l >= 1; --l) {
    at_least += hist[static_cast<std::size_t>(l)];
    ccd.emplace(l, static_cast<double>(at_least) / pairs);
  }
  out.ccd = std::move(ccd);
  return out;
}

TriangleStats triangle_stats(const Graph& g) {
  const NodeId n = g.node_count();
  TriangleStats out;
  out.kt.assign(static_cast<std::size_t>(n), 0);

  // Each edge (u, v) charges the triangles it closes to the third vertex;
  // over all three edges of a triangle every member gets exactly one.
  for (NodeId u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v < u) continue;
      const auto nv = g.neighbors(v);
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++out.kt[static_cast<std::size_t>(*a)];
          ++a;
          ++b;
        }
      }
    }
  }

  std::vector<std::int64_t> sorted = out.kt;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    out.ccd.emplace(sorted[i],
                    static_cast<double>(sorted.size() - i) / sorted.size());
  }

  std::map<int, std::pair<double, std::int64_t>> acc;
  out.clustering.assign(static_cast<std::size_t>(n),
                        std::numeric_limits<double>::quiet_NaN());
  for (NodeId v = 0; v < n; ++v) {
    const int k = g.degree(v);
    auto& [sum, count] = acc[k];
    sum += static_cast<double>(out.kt[static_cast<std::size_t>(v)]);
    ++count;
    if (k >= 2)
      out.clustering[static_cast<std::size_t>(v)] =
          static_cast<double>(out.kt[static_cast<std::size_t>(v)]) /
          (static_cast<double>(k) * (k - 1) / 2.0);
  }
  for (const auto& [k, sc] : acc)
    out.kt_by_degree.emplace(k, sc.first / static_cast<double>(sc.second));
  return out;
}

MetricsReport report(const Graph& g) {
  if (g.node_count() < 3)
    throw std::invalid_argument("report: need at least 3 nodes");
  if (!g.is_connected())
    throw std::invalid_argument("report: graph is disconnected");
  MetricsReport out;
  out.nodes = g.node_count();
  out.links = g.link_count();
  out.seed_links = g.seed_links();
  out.external_links = g.external_links();
  out.internal_links = g.internal_links();
  out.degrees = degree_distribution(g);
  out.rich = rich_club(g);
  out.mixing = mixing_stats(g);
  out.paths = path_stats(g);
  out.triangles = triangle_stats(g);
  out.phi_001 = out.rich.phi_at_fraction(0.01);
  return out;
}

}  // namespace pfp
