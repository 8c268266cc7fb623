#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "uobs/canonical.hpp"
#include "uobs/classes.hpp"
#include "uobs/enumerate.hpp"
#include "uobs/error.hpp"
#include "uobs/families.hpp"
#include "uobs/graph_io.hpp"

using namespace uobs;

namespace {

bool has_cut_vertex(const MultiGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (component_count(delete_vertex(g, v)) > 1) return true;
  return false;
}

ClassSpec forests() {
  ClassSpec c;
  c.relation = Relation::Minor;
  c.obstructions.insert(complete_graph(3));
  return c;
}

}  // namespace

TEST_CASE("grid sizes") {
  CHECK(isomorphic(grid(1), MultiGraph(1)));
  CHECK(isomorphic(grid(2), cycle_graph(4)));
  for (int k = 1; k <= 6; ++k) {
    CHECK(grid(k).vertex_count() == k * k);
    CHECK(grid(k).edge_count() == 2 * k * (k - 1));
  }
  CHECK_THROWS_AS(grid(0), InvalidInput);
}

TEST_CASE("ternary trees") {
  CHECK(isomorphic(ternary_tree(1), star(3)));
  CHECK(ternary_tree(2).vertex_count() == 10);
  for (int k = 1; k <= 5; ++k) {
    auto t = ternary_tree(k);
    CHECK(t.edge_count() == t.vertex_count() - 1);
    CHECK(is_connected(t));
    CHECK(oracle::is_acyclic(t));
    for (int v = 0; v < t.vertex_count(); ++v) CHECK((t.degree(v) == 1 || t.degree(v) == 3));
  }
  CHECK_THROWS_AS(ternary_tree(0), InvalidInput);
}

TEST_CASE("apex ternary trees") {
  for (int k = 2; k <= 5; ++k) {
    auto a = ternary_tree_apex(k);
    CHECK(a.vertex_count() == ternary_tree(k).vertex_count() + 1);
    CHECK(delete_vertex(a, a.vertex_count() - 1) == ternary_tree(k));
    CHECK(is_planar(a));
  }
  CHECK(is_connected(ternary_tree_apex(2)));
  CHECK_FALSE(has_cut_vertex(ternary_tree_apex(2)));
  CHECK_THROWS_AS(ternary_tree_apex(1), InvalidInput);
}

TEST_CASE("dual of the apex ternary tree") {
  for (int k = 2; k <= 5; ++k) {
    auto d = ternary_tree_apex_dual(k);
    int leaves = 3 << (k - 1);
    CHECK(d.vertex_count() == 2 * leaves);
    CHECK(d.is_simple());
    CHECK(is_connected(d));
    CHECK(is_outerplanar(d));
  }
  auto d2 = ternary_tree_apex_dual(2);
  CHECK(d2.edge_count() == 21);
  for (int k = 2; k <= 4; ++k) {
    auto d = ternary_tree_apex_dual(k);
    CHECK_FALSE(contains(Relation::Minor, complete_graph(4), d));
    CHECK_FALSE(contains(Relation::Minor, complete_bipartite(2, 3), d));
  }
  for (int k = 2; k <= 3; ++k)
    CHECK(contains(Relation::Minor, ternary_tree_apex_dual(k), ternary_tree_apex_dual(k + 1)));
  auto big = ternary_tree_apex_dual(4);
  int outerplanar = 0;
  for (const auto& g : enumerate_graphs(5, 1, is_outerplanar)) {
    ++outerplanar;
    INFO(describe(g));
    CHECK(contains(Relation::Minor, g, big));
  }
  CHECK(outerplanar > 40);
  CHECK_THROWS_AS(ternary_tree_apex_dual(1), InvalidInput);
}

TEST_CASE("named small graphs") {
  CHECK(theta(1) == complete_graph(2));
  CHECK(star(4).vertex_count() == 5);
  CHECK(star(4).edge_count() == 4);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(theta(3).multiplicity(0, 1) == 3);
  CHECK_THROWS_AS(theta(0), InvalidInput);
  CHECK_THROWS_AS(cycle_graph(2), InvalidInput);
}

TEST_CASE("registry families are monotone chains") {
  for (const auto& f : family_registry()) {
    auto p = f.prefix(5);
    INFO(f.name);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      CHECK(p[i].vertex_count() + p[i].edge_count() < p[i + 1].vertex_count() + p[i + 1].edge_count());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i; j < p.size(); ++j) {
        INFO(i << " <= " << j);
        CHECK(contains(f.relation, p[i], p[j]));
      }
  }
  CHECK_THROWS_AS(find_family("nope"), InvalidInput);
  CHECK_THROWS_AS(find_family("ternary_tree_apex").at(1), InvalidInput);
  auto triangles = copies_family(complete_graph(3), "triangles");
  CHECK(triangles.at(3).vertex_count() == 9);
  CHECK(contains(Relation::Minor, triangles.at(2), triangles.at(3)));
}

TEST_CASE("thetas and stars are immersion-incomparable") {
  for (int k = 2; k <= 6; ++k)
    for (int j = 1; j <= 6; ++j) {
      CHECK_FALSE(contains(Relation::Immersion, theta(k), star(j)));
      CHECK_FALSE(contains(Relation::Immersion, star(k), theta(j)));
    }
}

TEST_CASE("apex trees and their duals are minor-incomparable") {
  for (int k = 2; k <= 4; ++k)
    for (int j = 2; j <= 4; ++j) {
      INFO(k << " " << j);
      CHECK_FALSE(contains(Relation::Minor, ternary_tree_apex(k), ternary_tree_apex_dual(j)));
      CHECK_FALSE(contains(Relation::Minor, ternary_tree_apex_dual(k), ternary_tree_apex(j)));
    }
}

TEST_CASE("class spec text round trip") {
  std::string text = "relation immersion\nmode multigraph 3\n\nn 2\ne 0 1 2\n\nn 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\n";
  auto spec = parse_class_spec(text);
  CHECK(spec.relation == Relation::Immersion);
  CHECK(spec.mode == GraphMode::Multigraph);
  CHECK(spec.mult_cap == 3);
  CHECK(spec.obstructions.size() == 2);
  auto again = parse_class_spec(to_text(spec));
  CHECK(again.key() == spec.key());
  CHECK_THROWS_AS(parse_class_spec("mode simple\n"), InvalidInput);
  CHECK_THROWS_AS(parse_class_spec("relation minor\nmode multigraph 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_class_spec("relation bogus\n"), InvalidInput);
}

TEST_CASE("omnivore steps for forests") {
  auto cls = forests();
  auto h1 = omnivore_step(cls, 1, std::nullopt);
  CHECK(isomorphic(h1, MultiGraph(1)));
  auto h2 = omnivore_step(cls, 2, h1);
  CHECK(isomorphic(h2, complete_graph(2)));
  std::optional<MultiGraph> prev;
  std::vector<MultiGraph> chain;
  for (int k = 1; k <= 5; ++k) {
    auto h = omnivore_step(cls, k, prev);
    CHECK(cls.member(h));
    if (prev) CHECK(contains(Relation::Minor, *prev, h));
    for (const auto& g : enumerate_graphs(k, 1, oracle::is_acyclic)) CHECK(contains(Relation::Minor, g, h));
    chain.push_back(h);
    prev = h;
  }
  CHECK(omnivore_step(cls, 3, chain[1]) == chain[2]);
  auto golden = parse_text_list(read_file(std::string(UOBS_FIXTURE_DIR) + "/omnivore_forests.txt"));
  REQUIRE(golden.size() == chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) CHECK(isomorphic(chain[i], golden[i]));
  OmnivoreOptions tiny;
  tiny.max_vertices = 3;
  CHECK_THROWS_AS(omnivore_step(cls, 5, std::nullopt, tiny), BudgetExceeded);
}
