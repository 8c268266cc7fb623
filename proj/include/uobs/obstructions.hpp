#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uobs/enumerate.hpp"
#include "uobs/families.hpp"
#include "uobs/graph_set.hpp"
#include "uobs/parameters.hpp"
#include "uobs/relations.hpp"

namespace uobs {

// A class given by a membership test that is assumed closed under `relation`.
struct NamedClass {
  std::string name;
  Relation relation = Relation::Minor;
  GraphMode mode = GraphMode::Simple;
  GraphPredicate member;
};

// forests, linear_forests, outerplanar, planar, apex_forest (minor);
// subcubic_forest, star_or_edgeless, theta_like (immersion).
const std::vector<NamedClass>& builtin_classes();
const NamedClass& find_builtin_class(const std::string& name);
// {G : p(G) <= k} under the relation p is monotone for.
NamedClass parameter_class(const Parameter& p, int k);
// The graphs containing none of the listed obstructions.
NamedClass class_from_spec(const ClassSpec& spec, const std::string& name = "class_spec");

struct ObstructionOptions {
  int n_max = 6;
  int mult_max = 1;
  EnumerationBudget budget;
  bool parallel = true;
  // Check every member's single-step reductions for membership and throw
  // NotClosed on the first failure.
  bool check_closure = true;
};

struct ObstructionReport {
  std::string class_name;
  Relation relation = Relation::Minor;
  GraphMode mode = GraphMode::Simple;
  int n_max = 0;
  int mult_max = 0;
  std::size_t universe_size = 0;
  std::size_t members = 0;
  GraphSet obstructions;
  bool antichain = true;
  std::string note;
};

// Graphs of the bounded universe outside the class all of whose single-step
// reductions lie inside it. Every proper minor (immersion, topological minor)
// is reachable by single steps, so these are exactly the minimal non-members.
ObstructionReport compute_obstructions(const NamedClass& cls, const ObstructionOptions& options = {});
ObstructionReport compute_obstructions_serial(const NamedClass& cls, const ObstructionOptions& options = {});
// The same set by pairwise containment tests over all non-members; used to
// cross-check single-step minimality on small universes.
GraphSet obstructions_by_pairwise_minimality(const NamedClass& cls, const ObstructionOptions& options = {});

struct ObstructionChain {
  std::vector<int> levels;
  std::vector<MultiGraph> graphs;
};

// C_1, ..., C_m with C_i an obstruction of {p <= i} (within the universe) and
// C_i below C_{i+1}. Throws BudgetExceeded when no chain exists in the bound.
ObstructionChain obstruction_chain(const Parameter& p, int length, const ObstructionOptions& options = {});

struct SampleRow {
  int k = 0;
  std::size_t obstruction_count = 0;
  bool found = false;
  MultiGraph sample;
  std::string family;
  int index = 0;
};

struct SampleReport {
  std::string parameter;
  Relation relation = Relation::Minor;
  std::vector<SampleRow> rows;
  std::string note;
};

// For each k <= k_max: an obstruction of {p <= k} contained in a member of one
// of the families within the first prefix_length members, with the least such
// index. Rows without an embedding are reported, not treated as errors.
SampleReport universal_sample_check(const Parameter& p, const std::vector<ParametricFamily>& families, int k_max,
                                    int prefix_length, const ObstructionOptions& options = {});

}  // namespace uobs
