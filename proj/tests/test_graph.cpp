#include <doctest.h>

#include <algorithm>
#include <random>

#include "eso/enumerate.hpp"
#include "eso/error.hpp"
#include "eso/graph.hpp"
#include "support/oracles.hpp"

using namespace eso;

namespace {

Graph two_k2() { return graph_from_edges(4, {{0, 1}, {2, 3}}); }

// Vertices a..f as 0..5.
Graph sample_b() { return graph_from_edges(6, {{3, 0}, {0, 1}, {1, 5}, {5, 2}, {2, 1}}); }

}  // namespace

TEST_CASE("basic graphs are symmetric and loop free") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), ValidationError);
  CHECK_THROWS(g.add_edge(0, 3));
  Graph u(2, GraphMode::Undirected);
  u.add_edge(1, 1);
  CHECK(u.has_edge(1, 1));
  Graph d(2, GraphMode::Directed);
  d.add_edge(0, 1);
  CHECK_FALSE(d.has_edge(1, 0));
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == Graph(3));
  CHECK(complement(path_graph(3)) == graph_from_edges(3, {{0, 2}}));
  CHECK_THROWS_AS(complement(Graph(2, GraphMode::Directed)), PreconditionError);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_basic_graph(1 + i % 10, 0.4, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("components") {
  CHECK(components(complete_graph(3)).size() == 1);
  CHECK(components(two_k2()).size() == 2);
  auto comps = components(sample_b());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2, 3, 5});
  CHECK(comps[1] == std::vector<int>{4});
  CHECK_THROWS_AS(components(Graph(2, GraphMode::Directed)), PreconditionError);
}

TEST_CASE("bipartite") {
  auto c4 = is_bipartite(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->first == std::vector<int>{0, 2});
  CHECK(c4->second == std::vector<int>{1, 3});
  CHECK_FALSE(is_bipartite(complete_graph(3)));
  auto c6 = is_bipartite(cycle_graph(6));
  REQUIRE(c6);
  CHECK(c6->first.size() == 3);
  CHECK(c6->second.size() == 3);
}

TEST_CASE("star") {
  CHECK(is_star(complete_bipartite_graph(1, 3)) == 0);
  CHECK(is_star(path_graph(3)) == 1);
  CHECK_FALSE(is_star(complete_graph(3)));
  CHECK_THROWS_AS(is_star(Graph(1)), PreconditionError);
  CHECK(common_endpoint(graph_from_edges(4, {{0, 1}, {1, 2}})) == 1);
  CHECK_FALSE(common_endpoint(Graph(3)));
}

TEST_CASE("split graphs") {
  auto p3 = is_split(path_graph(3));
  REQUIRE(p3);
  CHECK(is_valid_split(path_graph(3), *p3));
  CHECK(*p3 == SplitPartition{{0, 1}, {2}});
  CHECK_FALSE(is_split(cycle_graph(4)));
  CHECK_FALSE(is_split(two_k2()));
  CHECK_FALSE(is_split(cycle_graph(5)));
  CHECK(has_forbidden_split_subgraph(cycle_graph(5)));
}

TEST_CASE("split recognition agrees with partition search up to seven vertices") {
  for (int n = 1; n <= 7; ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      bool expected = oracle::split_partition(g).has_value();
      auto got = is_split(g);
      CHECK(got.has_value() == expected);
      CHECK(has_forbidden_split_subgraph(g) == !expected);
      if (got) {
        CHECK(oracle::split_partition(g).has_value());
        CHECK(is_valid_split(g, *got));
      }
    });
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Graph g = random_basic_graph(8 + i % 3, 0.5, rng);
    auto got = is_split(g);
    CHECK(got.has_value() == oracle::split_partition(g).has_value());
    if (got) CHECK(is_valid_split(g, *got));
  }
}

TEST_CASE("complete bipartite") {
  auto k23 = is_complete_bipartite(complete_bipartite_graph(2, 3));
  REQUIRE(k23);
  CHECK(std::min(k23->first.size(), k23->second.size()) == 2);
  auto c4 = is_complete_bipartite(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->first == std::vector<int>{0, 2});
  // Shores {0,2} and {1}: both cross pairs are edges, so P3 = K_{1,2}.
  CHECK(oracle::is_complete_bipartite(path_graph(3)));
  auto p3 = is_complete_bipartite(path_graph(3));
  REQUIRE(p3);
  CHECK(p3->first == std::vector<int>{0, 2});
  CHECK_THROWS_AS(is_complete_bipartite(Graph(3)), PreconditionError);
  for (int n = 2; n <= 6; ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      if (g.edge_count() == 0) return;
      CHECK(is_complete_bipartite(g).has_value() == oracle::is_complete_bipartite(g));
      CHECK(is_bipartite(g).has_value() == oracle::is_bipartite(g));
    });
  }
}

TEST_CASE("cycles modulo m") {
  CHECK(has_cycle_mod(complete_graph(3), 3, false));
  CHECK(has_cycle_mod(cycle_graph(6), 3, false));
  Graph c6k1 = disjoint_union(cycle_graph(6), Graph(1));
  CHECK(has_cycle_mod(c6k1, 3, false));
  CHECK_FALSE(has_cycle_mod(c6k1, 3, true));
  CHECK_THROWS_AS(has_cycle_mod(complete_graph(12), 13, false, 1000), BudgetExceeded);
}

TEST_CASE("cycle search agrees with the path DP oracle") {
  for (int n = 1; n <= 6; ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      for (int m = 2; m <= 5; ++m) {
        CHECK(has_cycle_mod(g, m, false) == oracle::cycle_mod(g, m, false));
        CHECK(has_cycle_mod(g, m, true) == oracle::cycle_mod(g, m, true));
      }
    });
  }
}

TEST_CASE("subdivision") {
  CHECK(subdivide(complete_graph(2)) == graph_from_edges(3, {{0, 2}, {2, 1}}));
  Graph k3 = subdivide(complete_graph(3));
  CHECK(k3.n() == 6);
  CHECK(oracle::cycle_vertex_sets(k3) == std::vector<std::uint32_t>{0x3F});
  Graph c4 = subdivide(cycle_graph(4));
  CHECK(c4.n() == 8);
  CHECK(oracle::cycle_vertex_sets(c4) == std::vector<std::uint32_t>{0xFF});
}

TEST_CASE("subdivision doubles cycle lengths") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_basic_graph(3 + i % 6, 0.35, rng);
    if (g.n() + static_cast<int>(g.edge_count()) > 16) continue;
    Graph s = subdivide(g);
    for (int m = 2; m <= 4; ++m) CHECK(has_cycle_mod(g, m, false) == has_cycle_mod(s, 2 * m, false));
  }
}

TEST_CASE("vertex equivalence classes") {
  CHECK(vertex_equivalence_classes(complete_graph(5)).size() == 1);
  auto star = vertex_equivalence_classes(complete_bipartite_graph(1, 3));
  REQUIRE(star.size() == 2);
  CHECK(star[0] == std::vector<int>{0});
  CHECK(star[1] == std::vector<int>{1, 2, 3});
  CHECK(vertex_equivalence_classes(path_graph(4)).size() == 4);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_basic_graph(2 + i % 8, 0.5, rng);
    for (const auto& cls : vertex_equivalence_classes(g)) {
      CHECK((is_clique(g, cls) || is_independent(g, cls)));
    }
  }
}

TEST_CASE("isomorphism representatives") {
  // Known counts of unlabelled graphs.
  const std::size_t counts[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(basic_graph_representatives(n).size() == counts[n]);
}
