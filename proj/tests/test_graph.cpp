#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pfptopo/graph.hpp"
#include "test_util.hpp"

using pfp::EdgeKind;
using pfp::Graph;
using pfp::NodeId;

TEST_SUITE("graph") {

TEST_CASE("nodes and edges accumulate with per-kind counters") {
  Graph g;
  CHECK(g.node_count() == 0);
  CHECK(g.add_node() == 0);
  CHECK(g.add_node() == 1);
  Graph h(4);
  CHECK(h.node_count() == 4);

  h.add_edge(0, 1, EdgeKind::Seed);
  h.add_edge(1, 2, EdgeKind::External);
  h.add_edge(2, 3, EdgeKind::External);
  h.add_edge(3, 0, EdgeKind::Internal);
  CHECK(h.link_count() == 4);
  CHECK(h.seed_links() == 1);
  CHECK(h.external_links() == 2);
  CHECK(h.internal_links() == 1);
  CHECK(h.degree(0) == 2);
  CHECK(h.degree(2) == 2);
  CHECK(h.has_edge(0, 1));
  CHECK(h.has_edge(1, 0));
  CHECK_FALSE(h.has_edge(0, 2));
}

TEST_CASE("invalid edges are rejected") {
  Graph g(3);
  g.add_edge(0, 1, EdgeKind::Seed);
  CHECK_THROWS_AS(g.add_edge(0, 1, EdgeKind::Seed), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0, EdgeKind::Internal), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2, EdgeKind::Seed), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3, EdgeKind::Seed), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(-1, 0, EdgeKind::Seed), std::out_of_range);
  CHECK_THROWS_AS(g.degree(5), std::out_of_range);
  CHECK(g.link_count() == 1);
}

TEST_CASE("neighbors are sorted and edges come out normalized") {
  Graph g(5);
  g.add_edge(3, 1, EdgeKind::Seed);
  g.add_edge(3, 4, EdgeKind::Seed);
  g.add_edge(3, 0, EdgeKind::Seed);
  g.add_edge(2, 3, EdgeKind::Seed);

  const auto nb = g.neighbors(3);
  const std::vector<NodeId> got(nb.begin(), nb.end());
  CHECK(got == std::vector<NodeId>{0, 1, 2, 4});

  const auto edges = g.edges();
  CHECK(edges.size() == 4);
  for (const auto& [u, v] : edges) CHECK(u < v);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
}

TEST_CASE("is_connected sees components") {
  CHECK(pfp::test::path_graph(6).is_connected());
  CHECK(pfp::test::cycle(5).is_connected());
  CHECK(pfp::test::star(7).is_connected());

  Graph split(4);
  split.add_edge(0, 1, EdgeKind::Seed);
  split.add_edge(2, 3, EdgeKind::Seed);
  CHECK_FALSE(split.is_connected());

  Graph lonely(1);
  CHECK(lonely.is_connected());
  Graph pairless(2);
  CHECK_FALSE(pairless.is_connected());
}

}  // TEST_SUITE
