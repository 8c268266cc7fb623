#pragma once

#include <functional>
#include <vector>

#include "uobs/graph.hpp"

namespace uobs {

using GraphPredicate = std::function<bool(const MultiGraph&)>;

struct EnumerationBudget {
  int max_vertices_simple = 8;
  int max_vertices_multi = 6;
  int max_multiplicity = 3;

  void check(int n_max, int mult_max) const;
};

struct EnumerationOptions {
  EnumerationBudget budget;
  bool parallel = true;
  // When the predicate is closed under vertex deletion, only members need to
  // be extended; the output is the same as filtering afterwards.
  bool predicate_hereditary = false;
};

// One canonical representative per isomorphism class with at most n_max
// vertices and multiplicities at most mult_max, in EnumOrder.
std::vector<MultiGraph> enumerate_graphs(int n_max, int mult_max, const GraphPredicate& predicate = {},
                                         const EnumerationOptions& options = {});

// Single-threaded reference kept for tests and benchmarks.
std::vector<MultiGraph> enumerate_graphs_serial(int n_max, int mult_max, const GraphPredicate& predicate = {},
                                                const EnumerationOptions& options = {});

}  // namespace uobs
