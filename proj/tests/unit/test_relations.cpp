#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "uobs/classes.hpp"
#include "uobs/enumerate.hpp"
#include "uobs/error.hpp"
#include "uobs/families.hpp"
#include "uobs/relations.hpp"

using namespace uobs;

namespace {

const Relation kAll[] = {Relation::Subgraph, Relation::TopologicalMinor, Relation::Minor, Relation::Immersion};

ContainmentOptions multigraph_mode() {
  ContainmentOptions o;
  o.mode = GraphMode::Multigraph;
  return o;
}

const std::vector<MultiGraph>& small_multigraphs() {
  static const std::vector<MultiGraph> all = enumerate_graphs(4, 2);
  return all;
}

const std::vector<MultiGraph>& small_simple() {
  static const std::vector<MultiGraph> all = enumerate_graphs(5, 1);
  return all;
}

}  // namespace

TEST_CASE("containment examples") {
  CHECK(contains(Relation::Minor, complete_graph(3), cycle_graph(5)));
  CHECK_FALSE(contains(Relation::Minor, complete_graph(3), ternary_tree(3)));
  CHECK(contains(Relation::Minor, complete_graph(4), grid(3)));
  CHECK(contains(Relation::Immersion, theta(2), complete_graph(3)));
  CHECK_FALSE(contains(Relation::Immersion, theta(3), complete_graph(3)));
  CHECK(contains(Relation::TopologicalMinor, complete_graph(4), grid(3)));
  CHECK_FALSE(contains(Relation::TopologicalMinor, complete_graph(5), grid(4)));
  CHECK(contains(Relation::Minor, complete_graph(4), grid(4)));
  CHECK(contains(Relation::Subgraph, cycle_graph(4), grid(3)));
  CHECK_FALSE(contains(Relation::Subgraph, cycle_graph(3), grid(3)));
}

TEST_CASE("K5 and K33 are excluded by planar graphs") {
  std::mt19937 rng(7);
  std::vector<MultiGraph> corpus = {grid(3), grid(4), ternary_tree_apex(2), ternary_tree_apex_dual(2),
                                    complete_graph(4), cycle_graph(9)};
  for (const auto& g : enumerate_graphs(6, 1))
    if (is_planar(g)) corpus.push_back(g);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_graph(rng, 8, 1, 0.4);
    if (is_planar(g)) corpus.push_back(g);
  }
  for (const auto& g : corpus) {
    CHECK_FALSE(contains(Relation::Minor, complete_graph(5), g));
    CHECK_FALSE(contains(Relation::Minor, complete_bipartite(3, 3), g));
  }
}

TEST_CASE("excl of K5 and K33 is the planar graphs") {
  GraphSet universe(enumerate_graphs(6, 1));
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) universe.insert(oracle::random_graph(rng, 7, 1, 0.55));
  GraphSet expected;
  for (const auto& g : universe.graphs())
    if (is_planar(g)) expected.insert(g);
  CHECK(excl_within(Relation::Minor, GraphSet{complete_graph(5), complete_bipartite(3, 3)}, universe) == expected);
}

TEST_CASE("minor agrees with the branch-set oracle") {
  const auto& hs = enumerate_graphs(4, 1);
  for (const auto& g : small_simple())
    for (const auto& h : hs) {
      INFO(describe(h) << " in " << describe(g));
      CHECK(contains(Relation::Minor, h, g) == oracle::brute_minor(h, g));
    }
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto g = oracle::random_graph(rng, 7, 1, 0.35);
    auto h = oracle::random_graph(rng, 5, 1, 0.5);
    INFO(describe(h) << " in " << describe(g));
    CHECK(contains(Relation::Minor, h, g) == oracle::brute_minor(h, g));
  }
}

TEST_CASE("subgraph agrees with the injection oracle") {
  for (const auto& g : small_multigraphs())
    for (const auto& h : small_multigraphs())
      CHECK(contains(Relation::Subgraph, h, g) == oracle::brute_subgraph(h, g));
}

TEST_CASE("topological minor agrees with the dissolving closure") {
  for (const auto& g : small_simple()) {
    auto reach = oracle::closure(oracle::Ops::TopologicalMinor, g);
    for (const auto& h : small_simple()) {
      if (h.vertex_count() > g.vertex_count()) continue;
      INFO(describe(h) << " in " << describe(g));
      CHECK(contains(Relation::TopologicalMinor, h, g) == (reach.count(oracle::brute_canon(h)) > 0));
    }
  }
}

TEST_CASE("path-packing immersion equals lifting sequences") {
  for (const auto& g : small_multigraphs()) {
    auto reach = oracle::closure(oracle::Ops::Immersion, g);
    for (const auto& h : small_multigraphs()) {
      INFO(describe(h) << " in " << describe(g));
      bool by_paths = contains(Relation::Immersion, h, g);
      CHECK(by_paths == (reach.count(oracle::brute_canon(h)) > 0));
      CHECK(by_paths == contains_immersion_by_lifting(h, g));
    }
  }
}

TEST_CASE("implication lattice on small multigraphs") {
  for (auto opts : {multigraph_mode(), ContainmentOptions{}}) {
    for (const auto& g : small_multigraphs())
      for (const auto& h : small_multigraphs()) {
        if (!opts.mode && !(g.is_simple() && h.is_simple())) continue;
        bool sub = contains(Relation::Subgraph, h, g, opts);
        bool tm = contains(Relation::TopologicalMinor, h, g, opts);
        bool mi = contains(Relation::Minor, h, g, opts);
        bool im = contains(Relation::Immersion, h, g, opts);
        INFO(describe(h) << " in " << describe(g));
        CHECK((!sub || tm));
        CHECK((!tm || mi));
        CHECK((!tm || im));
      }
  }
}

TEST_CASE("reflexive on the corpus") {
  std::vector<MultiGraph> corpus = small_multigraphs();
  for (int k = 1; k <= 4; ++k) corpus.push_back(grid(k));
  corpus.push_back(ternary_tree_apex(2));
  corpus.push_back(ternary_tree_apex_dual(2));
  corpus.push_back(theta(5));
  for (const auto& g : corpus)
    for (auto rel : kAll) CHECK(contains(rel, g, g));
}

TEST_CASE("transitive on sampled triples") {
  std::mt19937 rng(5);
  for (auto rel : kAll) {
    int mult = default_mode(rel) == GraphMode::Simple ? 1 : 2;
    int found = 0;
    for (int attempt = 0; attempt < 20000 && found < 125; ++attempt) {
      std::uniform_int_distribution<int> size(1, 6);
      auto g = oracle::random_graph(rng, size(rng) + 1, mult, 0.6);
      auto m = oracle::random_graph(rng, size(rng), mult, 0.6);
      if (!contains(rel, m, g)) continue;
      auto h = oracle::random_graph(rng, std::max(1, size(rng) - 1), mult, 0.5);
      if (!contains(rel, h, m)) continue;
      ++found;
      CHECK(contains(rel, h, g));
    }
    CHECK(found == 125);
  }
}

TEST_CASE("single-step reductions stay below the original") {
  std::mt19937 rng(9);
  for (auto rel : kAll) {
    GraphMode mode = default_mode(rel);
    int mult = mode == GraphMode::Simple ? 1 : 2;
    for (int i = 0; i < 30; ++i) {
      auto g = oracle::random_graph(rng, 6, mult, 0.5);
      for (const auto& r : single_step_reductions(rel, g, mode)) {
        INFO(to_string(rel) << ": " << describe(r) << " from " << describe(g));
        CHECK(contains(rel, r, g));
        CHECK(r.edge_count() + r.vertex_count() < g.edge_count() + g.vertex_count());
      }
    }
  }
}

TEST_CASE("set operator examples") {
  auto k3 = complete_graph(3), k4 = complete_graph(4), c5 = cycle_graph(5);
  CHECK(min_elements(Relation::Minor, GraphSet{k3, k4, c5}) == GraphSet{k3});
  GraphSet anti{complete_graph(5), complete_bipartite(3, 3)};
  CHECK(min_elements(Relation::Minor, anti) == anti);
  CHECK(min_elements(Relation::Immersion, GraphSet{theta(2), theta(3)}) == GraphSet{theta(2)});
  CHECK(set_dominates(Relation::Minor, GraphSet{k3}, GraphSet{k4, c5}));
  CHECK_FALSE(set_dominates(Relation::Minor, GraphSet{k4}, GraphSet{k3}));
  for (auto rel : kAll) CHECK(set_dominates(rel, GraphSet{}, GraphSet{}));

  GraphSet upto4(enumerate_graphs(4, 1));
  GraphSet forests;
  for (const auto& g : upto4.graphs())
    if (oracle::is_acyclic(g)) forests.insert(g);
  CHECK(excl_within(Relation::Minor, GraphSet{k3}, upto4) == forests);
  CHECK(excl_within(Relation::Minor, GraphSet{}, upto4) == upto4);

  GraphSet upto3(enumerate_graphs(3, 1));
  CHECK(down_closure_within(Relation::Minor, GraphSet{k3}, upto3) == upto3);
  CHECK(up_closure_within(Relation::Minor, GraphSet{k3}, forests).empty());
  CHECK(down_closure_within(Relation::Minor, GraphSet{}, upto4).empty());
}

TEST_CASE("domination matches exclusion inclusion") {
  GraphSet universe(enumerate_graphs(5, 1));
  auto all = universe.graphs();
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> count(0, 3);
  for (auto rel : {Relation::Minor, Relation::TopologicalMinor, Relation::Subgraph}) {
    for (int t = 0; t < 60; ++t) {
      GraphSet a, b;
      for (int i = count(rng); i > 0; --i) a.insert(all[pick(rng)]);
      for (int i = count(rng); i > 0; --i) b.insert(all[pick(rng)]);
      auto ea = excl_within(rel, a, universe);
      auto eb = excl_within(rel, b, universe);
      bool subset = std::all_of(ea.begin(), ea.end(), [&](const auto& kv) { return eb.contains(kv.second); });
      CHECK(set_dominates(rel, a, b) == subset);
    }
  }
}

TEST_CASE("min_elements is a dominating antichain and parallel matches serial") {
  std::mt19937 rng(17);
  for (auto rel : kAll) {
    int mult = default_mode(rel) == GraphMode::Simple ? 1 : 2;
    for (int t = 0; t < 10; ++t) {
      GraphSet s;
      for (int i = 0; i < 25; ++i) s.insert(oracle::random_graph(rng, 2 + i % 5, mult, 0.5));
      auto m = min_elements(rel, s);
      CHECK(is_antichain(rel, m));
      CHECK(set_dominates(rel, m, s));
      CHECK(m == min_elements_serial(rel, s));
    }
  }
}

TEST_CASE("oversized searches report the budget") {
  ContainmentOptions tight;
  tight.max_pattern = 2;
  tight.max_host = 2;
  tight.effort_limit = 50;
  auto h = complete_bipartite(2, 4);
  auto g = grid(5);
  CHECK_THROWS_AS(contains(Relation::TopologicalMinor, h, g, tight), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_graphs(9, 1), BudgetExceeded);
}
