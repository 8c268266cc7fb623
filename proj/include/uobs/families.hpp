#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uobs/graph.hpp"
#include "uobs/graph_set.hpp"
#include "uobs/relations.hpp"

namespace uobs {

MultiGraph empty_graph(int n);
MultiGraph path_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph star(int k);
MultiGraph theta(int k);
// k x k grid; k >= 1.
MultiGraph grid(int k);
// Complete ternary tree of depth k >= 1: the root has three children, other
// internal vertices two, so every internal vertex has degree three. Vertices
// are numbered breadth-first with children left to right, so leaves are the
// last 3 * 2^(k-1) labels in left-to-right order.
MultiGraph ternary_tree(int k);
// ternary_tree(k) plus an apex (the last label) adjacent to every leaf; k >= 2.
MultiGraph ternary_tree_apex(int k);
// Dual of ternary_tree_apex(k) drawn with children left to right and the apex
// below the leaves, with one edge of every parallel pair subdivided; k >= 2.
// Face f_0 is the outer face, f_i lies between leaves i and i+1; subdivision
// vertices follow the 3 * 2^(k-1) face vertices.
MultiGraph ternary_tree_apex_dual(int k);

struct ParametricFamily {
  std::string name;
  int base_index = 1;
  Relation relation = Relation::Minor;
  std::function<MultiGraph(int)> generator;

  MultiGraph at(int k) const;
  // Members base_index .. base_index + count - 1.
  std::vector<MultiGraph> prefix(int count) const;
};

// grid, ternary_tree, ternary_tree_apex, ternary_tree_apex_dual, theta, star,
// path, complete, cycle.
const std::vector<ParametricFamily>& family_registry();
const ParametricFamily& find_family(const std::string& name);
// k -> k disjoint copies of z, declared minor-monotone.
ParametricFamily copies_family(const MultiGraph& z, const std::string& name);

// A class presented as the graphs excluding a finite obstruction list.
struct ClassSpec {
  Relation relation = Relation::Minor;
  GraphMode mode = GraphMode::Simple;
  int mult_cap = 1;
  GraphSet obstructions;

  bool member(const MultiGraph& g, const ContainmentOptions& options = {}) const;
  std::string key() const;
};

// Header lines "relation <name>" and "mode simple" or "mode multigraph <cap>",
// then obstruction graphs in the text format separated by blank lines.
ClassSpec parse_class_spec(const std::string& text);
std::string to_text(const ClassSpec& spec);

struct OmnivoreOptions {
  // Largest candidate size searched before giving up.
  int max_vertices = 9;
  ContainmentOptions containment;
};

// EnumOrder-least class member containing prev and every class member on at
// most k vertices. Results are memoised per (class, k, prev).
MultiGraph omnivore_step(const ClassSpec& cls, int k, const std::optional<MultiGraph>& prev,
                         const OmnivoreOptions& options = {});

}  // namespace uobs
