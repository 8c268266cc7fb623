#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace uobs {

struct Edge {
  int u = 0;
  int v = 0;
  int mult = 1;
  bool operator==(const Edge&) const = default;
};

// Loopless multigraph on vertices 0..n-1 stored as a symmetric multiplicity
// matrix. Label-sensitive equality; use canonical_form() for isomorphism.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);
  static MultiGraph from_edges(int n, const std::vector<Edge>& edges);
  static MultiGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  int multiplicity(int u, int v) const { return m_[index(u, v)]; }
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  // Adds `mult` parallel copies of uv. Loops are rejected.
  void add_edge(int u, int v, int mult = 1);
  void set_multiplicity(int u, int v, int mult);
  // Appends an isolated vertex and returns its label.
  int add_vertex();

  // Total number of edges counted with multiplicity.
  int edge_count() const;
  // Number of adjacent vertex pairs.
  int distinct_edge_count() const;
  int degree(int v) const;
  int neighbor_count(int v) const;
  std::vector<int> neighbors(int v) const;
  int max_multiplicity() const;
  bool is_simple() const { return max_multiplicity() <= 1; }
  std::vector<Edge> edges() const;

  bool operator==(const MultiGraph& o) const { return n_ == o.n_ && m_ == o.m_; }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void check_vertex(int v) const;
  int multiplicity_checked_add(int u, int v, int mult) const;

  int n_ = 0;
  std::vector<std::uint16_t> m_;
};

enum class GraphMode { Simple, Multigraph };

MultiGraph simplified(const MultiGraph& g);

// Vertex-removing operations relabel survivors contiguously, keeping order.
MultiGraph delete_vertex(const MultiGraph& g, int v);
MultiGraph delete_vertices(const MultiGraph& g, const std::vector<int>& vs);
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& keep);
// Removes one unit of multiplicity from uv.
MultiGraph delete_edge(const MultiGraph& g, int u, int v);
MultiGraph delete_edge_all(const MultiGraph& g, int u, int v);
// Merges v into u (the survivor keeps label min(u, v) after relabelling).
// Parallel edges created are collapsed in simple mode and added up otherwise.
// The contracted edge itself disappears (no loops).
MultiGraph contract_edge(const MultiGraph& g, int u, int v, GraphMode mode);
// Replaces one unit of xy and one unit of yz by a unit of xz (x != z).
MultiGraph lift_pair(const MultiGraph& g, int x, int y, int z);
// Replaces one unit of uv by a path u-w-v through a new vertex w = n.
MultiGraph subdivide_edge(const MultiGraph& g, int u, int v);
// Removes a vertex of degree two with distinct neighbours a, b and joins a, b.
MultiGraph dissolve_vertex(const MultiGraph& g, int v, GraphMode mode);
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);
MultiGraph copies(const MultiGraph& g, int k);
// result(perm[v], perm[w]) = g(v, w).
MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm);

std::vector<std::vector<int>> connected_components(const MultiGraph& g);
int component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);
// |E| - |V| + c with E counted with multiplicity.
int cycle_rank(const MultiGraph& g);
int min_degree(const MultiGraph& g);
int max_degree(const MultiGraph& g);
int isolated_vertex_count(const MultiGraph& g);

std::string describe(const MultiGraph& g);

}  // namespace uobs
