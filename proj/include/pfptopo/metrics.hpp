#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pfptopo/graph.hpp"

namespace pfp {

struct DegreeDistribution {
  static constexpr int kFitMinDegree = 2;
  static constexpr int kFitMaxDegree = 100;

  std::map<int, double> pk;  // degree -> fraction of nodes
  int max_degree = 0;
  // Power-law exponent of P(k) over the fit range, estimated from the
  // cumulative tail: gamma = slope of P(>=k) in log-log, minus 1. Undefined
  // with fewer than three populated degrees in range.
  std::optional<double> gamma;

  double probability(int k) const {
    const auto it = pk.find(k);
    return it == pk.end() ? 0.0 : it->second;
  }
};

// Nodes ranked by non-increasing degree (ties by ascending id); phi(r/N) is
// the link density among the top r nodes: links present / (r(r-1)/2).
struct RichClubCurve {
  static constexpr double kFitMinFraction = 0.1;
  static constexpr double kFitMaxFraction = 1.0;

  std::vector<NodeId> ranked_nodes;
  std::map<double, double> phi;  // normalized rank r/N -> phi, r in 2..N
  std::optional<double> theta;   // power-law exponent over the fit range
  int top_clique = 0;            // largest n with the top-n nodes a clique

  double phi_at_rank(NodeId r) const;
  // phi at r = round(f * N), with r clamped to [2, N].
  double phi_at_fraction(double f) const;
};

struct MixingStats {
  std::optional<double> alpha;  // undefined when all endpoint degrees equal
  std::map<int, double> knn;    // degree -> mean nearest-neighbor degree
};

struct PathStats {
  std::map<int, double> ccd;  // l -> fraction of pairs at distance >= l
  double ell_star = 0.0;      // mean shortest-path length over all pairs
};

struct TriangleStats {
  std::vector<std::int64_t> kt;          // per-node triangle count
  std::map<std::int64_t, double> ccd;    // k_t -> fraction of nodes >= k_t
  std::map<int, double> kt_by_degree;    // degree -> mean k_t
  std::vector<double> clustering;        // NaN for nodes of degree < 2
};

DegreeDistribution degree_distribution(const Graph& g);
RichClubCurve rich_club(const Graph& g);
std::optional<double> assortativity(const Graph& g);
std::map<int, double> knn_by_degree(const Graph& g);
MixingStats mixing_stats(const Graph& g);
PathStats path_stats(const Graph& g);
TriangleStats triangle_stats(const Graph& g);

struct MetricsReport {
  NodeId nodes = 0;
  std::int64_t links = 0;
  std::int64_t seed_links = 0;
  std::int64_t external_links = 0;
  std::int64_t internal_links = 0;
  DegreeDistribution degrees;
  RichClubCurve rich;
  MixingStats mixing;
  PathStats paths;
  TriangleStats triangles;
  double phi_001 = 0.0;  // phi at rank round(0.01 N)
};

// Everything above for a connected graph with N >= 3.
MetricsReport report(const Graph& g);

}  // namespace pfp
