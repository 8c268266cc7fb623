#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "uobs/graph.hpp"
#include "uobs/graph_set.hpp"

namespace uobs {

enum class Relation { Subgraph, TopologicalMinor, Minor, Immersion };

std::string to_string(Relation r);
Relation parse_relation(const std::string& s);
std::string to_string(GraphMode m);

// Minor and topological minor compare underlying simple graphs by default;
// subgraph and immersion respect multiplicities.
GraphMode default_mode(Relation r);

struct ContainmentOptions {
  std::optional<GraphMode> mode;
  // Inside these caps the search is exhaustive with no step limit.
  int max_pattern = 8;
  int max_host = 16;
  // Beyond the caps a witness may still be found, but an exhaustive refutation
  // is attempted only up to this many search steps before BudgetExceeded.
  std::uint64_t effort_limit = 20'000'000;
  bool parallel = true;
};

bool contains(Relation rel, const MultiGraph& h, const MultiGraph& g, const ContainmentOptions& options = {});

// Immersion decided straight from the definition: breadth-first closure of g
// under vertex deletion, edge deletion and lifting. Only for tiny graphs.
bool contains_immersion_by_lifting(const MultiGraph& h, const MultiGraph& g, int max_host_vertices = 6);

// The single-step reductions generating each relation (used by obstruction
// scans): vertex and edge deletion plus contraction (minor), lifting
// (immersion) or dissolving a degree-2 vertex (topological minor).
std::vector<MultiGraph> single_step_reductions(Relation rel, const MultiGraph& g, GraphMode mode);

// Minimal members; among mutually contained members the EnumOrder-first is kept.
GraphSet min_elements(Relation rel, const GraphSet& s, const ContainmentOptions& options = {});
GraphSet min_elements_serial(Relation rel, const GraphSet& s, const ContainmentOptions& options = {});
// a <=* b: every member of b contains some member of a.
bool set_dominates(Relation rel, const GraphSet& a, const GraphSet& b, const ContainmentOptions& options = {});
GraphSet excl_within(Relation rel, const GraphSet& obstructions, const GraphSet& universe,
                     const ContainmentOptions& options = {});
GraphSet down_closure_within(Relation rel, const GraphSet& seeds, const GraphSet& universe,
                             const ContainmentOptions& options = {});
GraphSet up_closure_within(Relation rel, const GraphSet& seeds, const GraphSet& universe,
                           const ContainmentOptions& options = {});
bool is_antichain(Relation rel, const GraphSet& s, const ContainmentOptions& options = {});

}  // namespace uobs
