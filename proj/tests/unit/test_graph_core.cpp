#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uobs/canonical.hpp"
#include "uobs/enumerate.hpp"
#include "uobs/error.hpp"
#include "uobs/graph.hpp"
#include "uobs/graph_io.hpp"
#include "uobs/graph_set.hpp"

using namespace uobs;

namespace {

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

MultiGraph path(int n) {
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph cycle(int n) {
  MultiGraph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

MultiGraph star(int k) {
  MultiGraph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

MultiGraph theta(int k) { return MultiGraph::from_edges(2, {{0, 1, k}}); }

}  // namespace

TEST_CASE("vertex deletion relabels contiguously", "[graph_core]") {
  for (int v = 0; v < 3; ++v) CHECK(isomorphic(delete_vertex(complete(3), v), complete(2)));
  CHECK(isomorphic(delete_vertex(star(3), 0), MultiGraph(3)));
  CHECK(delete_vertex(theta(2), 1) == MultiGraph(1));
  CHECK_THROWS_AS(delete_vertex(complete(3), 3), InvalidInput);

  auto p = delete_vertex(path(4), 1);
  CHECK(p.vertex_count() == 3);
  CHECK(p.adjacent(1, 2));
  CHECK(p.edge_count() == 1);
}

TEST_CASE("edge deletion decrements multiplicity", "[graph_core]") {
  CHECK(delete_edge(theta(2), 0, 1) == theta(1));
  CHECK(isomorphic(delete_edge(complete(3), 0, 1), path(3)));
  CHECK(delete_edge(complete(2), 0, 1) == MultiGraph(2));
  CHECK_THROWS_AS(delete_edge(path(3), 0, 2), InvalidInput);
}

TEST_CASE("edge contraction in both modes", "[graph_core]") {
  CHECK(isomorphic(contract_edge(cycle(4), 0, 1, GraphMode::Simple), cycle(3)));
  CHECK(contract_edge(complete(2), 0, 1, GraphMode::Simple) == MultiGraph(1));
  auto c3 = contract_edge(cycle(4), 0, 1, GraphMode::Simple);
  auto e = c3.edges().front();
  CHECK(contract_edge(c3, e.u, e.v, GraphMode::Simple) == complete(2));
  CHECK(contract_edge(c3, e.u, e.v, GraphMode::Multigraph) == theta(2));
  CHECK_THROWS_AS(contract_edge(path(3), 0, 2, GraphMode::Simple), InvalidInput);
}

TEST_CASE("lifting moves one unit of multiplicity", "[graph_core]") {
  auto k3 = complete(3);
  auto lifted = lift_pair(k3, 0, 1, 2);
  CHECK(lifted.multiplicity(0, 2) == 2);
  CHECK(lifted.degree(1) == 0);
  auto p = lift_pair(path(3), 0, 1, 2);
  CHECK(p.multiplicity(0, 2) == 1);
  CHECK(p.degree(1) == 0);
  CHECK_THROWS_AS(lift_pair(theta(2), 0, 1, 0), InvalidInput);
  CHECK_THROWS_AS(lift_pair(path(4), 0, 1, 3), InvalidInput);
}

TEST_CASE("subdivision", "[graph_core]") {
  CHECK(isomorphic(subdivide_edge(complete(2), 0, 1), path(3)));
  auto t = subdivide_edge(theta(2), 0, 1);
  CHECK(t.vertex_count() == 3);
  CHECK(t.multiplicity(0, 1) == 1);
  CHECK(t.multiplicity(0, 2) == 1);
  CHECK(t.multiplicity(2, 1) == 1);
  CHECK(isomorphic(subdivide_edge(cycle(3), 0, 1), cycle(4)));
  CHECK_THROWS_AS(subdivide_edge(path(3), 0, 2), InvalidInput);
}

TEST_CASE("unions and copies", "[graph_core]") {
  auto two = copies(complete(3), 2);
  CHECK(two.vertex_count() == 6);
  CHECK(two.edge_count() == 6);
  CHECK(copies(MultiGraph(1), 3) == MultiGraph(3));
  CHECK(copies(cycle(5), 1) == cycle(5));
  CHECK(copies(cycle(5), 0) == MultiGraph(0));
}

TEST_CASE("isomorphism examples", "[graph_core]") {
  auto p = MultiGraph::from_pairs(3, {{2, 0}, {0, 1}});
  CHECK(isomorphic(path(3), p));
  CHECK_FALSE(isomorphic(theta(2), path(3)));
  CHECK_FALSE(isomorphic(star(3), path(4)));
  CHECK_FALSE(isomorphic(theta(2), theta(3)));
}

TEST_CASE("operations never create loops and keep labels contiguous", "[graph_core][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, 2 + trial % 6, 1 + trial % 3, 0.5);
    for (const auto& e : g.edges()) {
      auto s = contract_edge(simplified(g), e.u, e.v, GraphMode::Simple);
      CHECK(s.is_simple());
      CHECK(s.vertex_count() == g.vertex_count() - 1);
      auto m = contract_edge(g, e.u, e.v, GraphMode::Multigraph);
      CHECK(m.edge_count() == g.edge_count() - e.mult);
      CHECK(subdivide_edge(g, e.u, e.v).edge_count() == g.edge_count() + 1);
      for (int z = 0; z < g.vertex_count(); ++z) {
        if (z == e.u || z == e.v || !g.adjacent(e.v, z)) continue;
        auto l = lift_pair(g, e.u, e.v, z);
        CHECK(l.degree(e.u) == g.degree(e.u));
        CHECK(l.degree(z) == g.degree(z));
        CHECK(l.degree(e.v) == g.degree(e.v) - 2);
      }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int w = 0; w < g.vertex_count() - 1; ++w) CHECK(delete_vertex(g, v).multiplicity(w, w) == 0);
  }
}

TEST_CASE("canonical form agrees with brute force on random graphs", "[graph_core][property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + trial % 7;
    auto a = oracle::random_graph(rng, n, 1 + trial % 2, 0.45);
    auto b = oracle::random_graph(rng, n, 1 + trial % 2, 0.45);
    auto perm = oracle::random_permutation(rng, n);
    auto a2 = relabel(a, perm);
    CHECK(canonical_form(a) == canonical_form(a2));
    CHECK(isomorphic(a, a2));
    CHECK(isomorphic(a, b) == oracle::brute_isomorphic(a, b));
    CHECK(isomorphic(canonical_graph(a), a));
  }
}

TEST_CASE("canonical form handles large symmetric graphs", "[graph_core]") {
  // Complete ternary tree of depth 5 plus an apex on the leaves.
  MultiGraph t(1);
  std::vector<int> frontier{0};
  for (int depth = 0; depth < 5; ++depth) {
    std::vector<int> next;
    for (int p : frontier)
      for (int c = 0; c < (depth == 0 ? 3 : 2); ++c) {
        int v = t.add_vertex();
        t.add_edge(p, v);
        next.push_back(v);
      }
    frontier = next;
  }
  int apex = t.add_vertex();
  for (int leaf : frontier) t.add_edge(apex, leaf);
  std::mt19937 rng(3);
  auto perm = oracle::random_permutation(rng, t.vertex_count());
  CHECK(canonical_form(t) == canonical_form(relabel(t, perm)));

  MultiGraph grid(25);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      if (c + 1 < 5) grid.add_edge(r * 5 + c, r * 5 + c + 1);
      if (r + 1 < 5) grid.add_edge(r * 5 + c, (r + 1) * 5 + c);
    }
  auto gp = relabel(grid, oracle::random_permutation(rng, 25));
  CHECK(isomorphic(grid, gp));
  CHECK(isomorphic(complete(12), relabel(complete(12), oracle::random_permutation(rng, 12))));
}

TEST_CASE("enumeration examples", "[graph_core]") {
  auto small = enumerate_graphs(3, 1);
  REQUIRE(small.size() == 8);
  std::vector<MultiGraph> expected{MultiGraph(0), MultiGraph(1), MultiGraph(2), complete(2),
                                   MultiGraph(3), disjoint_union(complete(2), MultiGraph(1)),
                                   path(3), complete(3)};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(isomorphic(small[i], expected[i]));

  auto multi = enumerate_graphs(2, 2);
  REQUIRE(multi.size() == 5);
  CHECK(isomorphic(multi[3], complete(2)));
  CHECK(isomorphic(multi[4], theta(2)));

  auto forests = enumerate_graphs(4, 1, oracle::is_acyclic);
  std::size_t expected_forests = 0;
  for (int n = 0; n <= 4; ++n)
    for (const auto& g : oracle::brute_enumerate(n, 1)) expected_forests += oracle::is_acyclic(g) ? 1 : 0;
  CHECK(forests.size() == expected_forests);
  CHECK(forests.size() == 1 + 1 + 2 + 3 + 6);
}

TEST_CASE("enumeration matches the labelled brute-force oracle", "[graph_core][property]") {
  for (int mult = 1; mult <= 3; ++mult) {
    int n_max = mult == 1 ? 5 : 4;
    auto got = enumerate_graphs(n_max, mult);
    std::size_t expected = 0;
    for (int n = 0; n <= n_max; ++n) expected += oracle::brute_enumerate(n, mult).size();
    CHECK(got.size() == expected);
  }
  // Known counts of simple graphs on n vertices.
  std::vector<std::size_t> per_n(9, 0);
  for (const auto& g : enumerate_graphs(7, 1)) ++per_n[g.vertex_count()];
  CHECK(per_n == std::vector<std::size_t>{1, 1, 2, 4, 11, 34, 156, 1044, 0});
}

TEST_CASE("enumeration order is strictly increasing and duplicate free", "[graph_core][property]") {
  for (int mult = 1; mult <= 2; ++mult) {
    auto all = enumerate_graphs(mult == 1 ? 6 : 5, mult);
    for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(enum_key(all[i - 1]) < enum_key(all[i]));
    for (std::size_t i = 1; i < all.size(); ++i)
      REQUIRE(all[i - 1].vertex_count() <= all[i].vertex_count());
  }
}

TEST_CASE("parallel enumeration equals the serial reference", "[graph_core][parallel]") {
  auto par = enumerate_graphs(6, 1);
  auto ser = enumerate_graphs_serial(6, 1);
  CHECK(par == ser);
  auto par2 = enumerate_graphs(4, 3);
  auto ser2 = enumerate_graphs_serial(4, 3);
  CHECK(par2 == ser2);
}

TEST_CASE("hereditary pruning gives the same output as filtering", "[graph_core]") {
  EnumerationOptions pruned;
  pruned.predicate_hereditary = true;
  CHECK(enumerate_graphs(7, 1, oracle::is_acyclic, pruned) == enumerate_graphs(7, 1, oracle::is_acyclic));
}

TEST_CASE("enumeration budget", "[graph_core]") {
  CHECK_THROWS_AS(enumerate_graphs(9, 1), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_graphs(7, 2), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_graphs(3, 4), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_graphs(3, 0), InvalidInput);
}

TEST_CASE("text format round trip", "[graph_core][io]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = oracle::random_graph(rng, trial % 9, 1 + trial % 4, 0.4);
    auto back = parse_text(to_text(g));
    REQUIRE(back == g);
  }
  CHECK(to_text(theta(2)) == "n 2\ne 0 1 2\n");
  CHECK(parse_text("# comment\nn 3\n\ne 2 0 1\n") == MultiGraph::from_pairs(3, {{0, 2}}));
  CHECK_THROWS_AS(parse_text("e 0 1 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_text("n 2\ne 0 0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_text("n 2\ne 0 2 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_text("n 2\ne 0 1 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_text("n 2\ne 0 1 1\ne 1 0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_text("n x\n"), InvalidInput);
}

TEST_CASE("graph6 import and export", "[graph_core][io]") {
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(to_graph6(path(5)) == "DhC");
  CHECK(parse_graph6(">>graph6<<C~") == complete(4));
  CHECK(parse_graph6("@") == MultiGraph(1));
  CHECK(parse_graph6("C~\n") == complete(4));
  CHECK(parse_graph6("?") == MultiGraph(0));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, trial % 70, 1, 0.3);
    REQUIRE(parse_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(to_graph6(theta(2)), InvalidInput);
  CHECK_THROWS_AS(parse_graph6("C"), InvalidInput);
}

TEST_CASE("graph sets deduplicate by isomorphism", "[graph_core]") {
  GraphSet s{path(3), MultiGraph::from_pairs(3, {{1, 0}, {0, 2}}), complete(3)};
  CHECK(s.size() == 2);
  CHECK(s.contains(MultiGraph::from_pairs(3, {{2, 1}, {1, 0}})));
  auto [a, b] = s.diff(GraphSet{complete(3), cycle(4)});
  CHECK(a.size() == 1);
  CHECK(b.size() == 1);
}
