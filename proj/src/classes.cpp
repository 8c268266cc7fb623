#include "uobs/classes.hpp"

#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace uobs {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool acyclic_without(const MultiGraph& g, int skip) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int u = 0; u < n; ++u) {
    if (u == skip) continue;
    for (int v = u + 1; v < n; ++v) {
      if (v == skip) continue;
      int m = g.multiplicity(u, v);
      if (m == 0) continue;
      if (m > 1) return false;
      int a = find_root(parent, u);
      int b = find_root(parent, v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

}  // namespace

bool is_forest(const MultiGraph& g) { return acyclic_without(g, -1); }

bool is_linear_forest(const MultiGraph& g) {
  if (!is_forest(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_planar(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n <= 4) return true;
  if (g.distinct_edge_count() > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_outerplanar(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n <= 3) return true;
  if (g.distinct_edge_count() > 2 * n - 3) return false;
  MultiGraph cone = simplified(g);
  int apex = cone.add_vertex();
  for (int v = 0; v < n; ++v) cone.set_multiplicity(v, apex, 1);
  return is_planar(cone);
}

bool is_apex_forest(const MultiGraph& g) {
  if (is_forest(g)) return true;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (acyclic_without(g, v)) return true;
  return false;
}

bool is_subcubic_forest(const MultiGraph& g) {
  if (!is_forest(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3) return false;
  return true;
}

bool is_star_or_edgeless(const MultiGraph& g) {
  if (!g.is_simple()) return false;
  int n = g.vertex_count();
  if (n == 0) return true;
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (v != x && g.degree(v) > 1) ok = false;
    if (ok) return true;
  }
  return false;
}

bool is_theta_like(const MultiGraph& g) { return g.vertex_count() <= 2; }

}  // namespace uobs
