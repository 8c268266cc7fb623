#pragma once

#include <string>
#include <vector>

#include "uobs/graph.hpp"
#include "uobs/graph_set.hpp"
#include "uobs/relations.hpp"

namespace uobs {

enum class ParameterKind { Treewidth, Pathwidth, Cutwidth, BiPathwidth, EdgeDegree, ZApex };

std::string to_string(ParameterKind k);
// Accepts tw, pw, cw, bipw, edge_degree (or ed), z_apex and the long names.
ParameterKind parse_parameter_kind(const std::string& s);

// A parameter together with its finite minor list when it is a Z-apex number.
struct Parameter {
  ParameterKind kind = ParameterKind::Treewidth;
  GraphSet z_list;

  std::string name() const;
  // Relation under which the parameter is monotone.
  Relation monotone_under() const;
};

struct ParameterBudget {
  // Subset dynamic programmes (treewidth, pathwidth, cutwidth, per block for
  // bi-pathwidth) run over 2^n states.
  int layout_max_vertices = 18;
  int z_apex_max_vertices = 12;
  bool parallel = true;
};

struct ParameterResult {
  int value = 0;
  // Vertex order realising the value (tw, pw, cw).
  std::vector<int> layout;
  // Minimum deletion set (z_apex).
  std::vector<int> deletion_set;
};

// Treewidth from the layout characterisation: at each position, the number of
// earlier vertices adjacent to the component of the remaining graph that
// contains the current vertex. Parallel edges are ignored.
ParameterResult treewidth(const MultiGraph& g, const ParameterBudget& budget = {});
// Treewidth from elimination orderings; an independent formulation used to
// cross-check treewidth().
int treewidth_by_elimination(const MultiGraph& g, const ParameterBudget& budget = {});
// Vertex separation number. Parallel edges are ignored.
ParameterResult pathwidth(const MultiGraph& g, const ParameterBudget& budget = {});
// Edges crossing each gap of the layout, counted with multiplicity.
ParameterResult cutwidth(const MultiGraph& g, const ParameterBudget& budget = {});
// Maximum pathwidth over the blocks (2-connected components, bridges and
// isolated vertices). The maximum keeps the parameter minor-monotone.
ParameterResult bi_pathwidth(const MultiGraph& g, const ParameterBudget& budget = {});
ParameterResult edge_degree(const MultiGraph& g);
// Fewest vertices whose removal leaves no member of z_list as a minor.
ParameterResult z_apex(const MultiGraph& g, const GraphSet& z_list, const ParameterBudget& budget = {});

ParameterResult evaluate(const Parameter& p, const MultiGraph& g, const ParameterBudget& budget = {});
bool parameter_at_most(const Parameter& p, int k, const MultiGraph& g, const ParameterBudget& budget = {});

// Width of a given layout under the treewidth, pathwidth or cutwidth rule.
int layout_width(ParameterKind kind, const MultiGraph& g, const std::vector<int>& layout);

// Vertex sets of the blocks, each sorted, in order of smallest vertex.
std::vector<std::vector<int>> blocks(const MultiGraph& g);

}  // namespace uobs
