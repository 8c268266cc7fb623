#include "uobs/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "uobs/error.hpp"

namespace uobs {

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  m_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

MultiGraph MultiGraph::from_edges(int n, const std::vector<Edge>& edges) {
  MultiGraph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.mult);
  return g;
}

MultiGraph MultiGraph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  MultiGraph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v, 1);
  return g;
}

void MultiGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

void MultiGraph::add_edge(int u, int v, int mult) {
  set_multiplicity(u, v, multiplicity_checked_add(u, v, mult));
}

int MultiGraph::add_vertex() {
  std::vector<std::uint16_t> next(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1), 0);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) next[static_cast<std::size_t>(u) * (n_ + 1) + v] = m_[index(u, v)];
  m_ = std::move(next);
  return n_++;
}

int MultiGraph::multiplicity_checked_add(int u, int v, int mult) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loops are not allowed");
  if (mult < 0) throw InvalidInput("negative multiplicity");
  return multiplicity(u, v) + mult;
}

void MultiGraph::set_multiplicity(int u, int v, int mult) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    if (mult != 0) throw InvalidInput("loops are not allowed");
    return;
  }
  if (mult < 0 || mult > std::numeric_limits<std::uint16_t>::max())
    throw InvalidInput("multiplicity out of range");
  m_[index(u, v)] = static_cast<std::uint16_t>(mult);
  m_[index(v, u)] = static_cast<std::uint16_t>(mult);
}

int MultiGraph::edge_count() const {
  int total = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) total += multiplicity(u, v);
  return total;
}

int MultiGraph::distinct_edge_count() const {
  int total = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) total += adjacent(u, v) ? 1 : 0;
  return total;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w) d += multiplicity(v, w);
  return d;
}

int MultiGraph::neighbor_count(int v) const {
  int d = 0;
  for (int w = 0; w < n_; ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

std::vector<int> MultiGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

int MultiGraph::max_multiplicity() const {
  int best = 0;
  for (auto x : m_) best = std::max(best, static_cast<int>(x));
  return best;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.push_back({u, v, multiplicity(u, v)});
  return out;
}

MultiGraph simplified(const MultiGraph& g) {
  MultiGraph s(g.vertex_count());
  for (const auto& e : g.edges()) s.set_multiplicity(e.u, e.v, 1);
  return s;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& keep) {
  MultiGraph s(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      int m = g.multiplicity(keep[i], keep[j]);
      if (m) s.set_multiplicity(static_cast<int>(i), static_cast<int>(j), m);
    }
  return s;
}

MultiGraph delete_vertices(const MultiGraph& g, const std::vector<int>& vs) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : vs) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex out of range");
    gone[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

MultiGraph delete_vertex(const MultiGraph& g, int v) { return delete_vertices(g, {v}); }

MultiGraph delete_edge(const MultiGraph& g, int u, int v) {
  if (g.multiplicity(u, v) == 0) throw InvalidInput("edge not present");
  MultiGraph out = g;
  out.set_multiplicity(u, v, g.multiplicity(u, v) - 1);
  return out;
}

MultiGraph delete_edge_all(const MultiGraph& g, int u, int v) {
  MultiGraph out = g;
  out.set_multiplicity(u, v, 0);
  return out;
}

MultiGraph contract_edge(const MultiGraph& g, int u, int v, GraphMode mode) {
  if (u == v || !g.adjacent(u, v)) throw InvalidInput("contracting a non-edge");
  int keep = std::min(u, v);
  int drop = std::max(u, v);
  MultiGraph out = g;
  out.set_multiplicity(keep, drop, 0);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == keep || w == drop) continue;
    int add = g.multiplicity(drop, w);
    if (!add) continue;
    int cur = out.multiplicity(keep, w);
    out.set_multiplicity(keep, w, mode == GraphMode::Simple ? 1 : cur + add);
  }
  return delete_vertex(out, drop);
}

MultiGraph lift_pair(const MultiGraph& g, int x, int y, int z) {
  if (x == z || x == y || y == z) throw InvalidInput("lift needs three distinct vertices");
  if (!g.adjacent(x, y) || !g.adjacent(y, z)) throw InvalidInput("lift needs edges xy and yz");
  MultiGraph out = g;
  out.set_multiplicity(x, y, g.multiplicity(x, y) - 1);
  out.set_multiplicity(y, z, g.multiplicity(y, z) - 1);
  out.set_multiplicity(x, z, g.multiplicity(x, z) + 1);
  return out;
}

MultiGraph subdivide_edge(const MultiGraph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw InvalidInput("subdividing a non-edge");
  MultiGraph out = g;
  int w = out.add_vertex();
  out.set_multiplicity(u, v, g.multiplicity(u, v) - 1);
  out.set_multiplicity(u, w, 1);
  out.set_multiplicity(w, v, 1);
  return out;
}

MultiGraph dissolve_vertex(const MultiGraph& g, int v, GraphMode mode) {
  auto nb = g.neighbors(v);
  if (nb.size() != 2 || g.degree(v) != 2) throw InvalidInput("dissolve needs a degree-2 vertex with two neighbours");
  MultiGraph out = g;
  int cur = g.multiplicity(nb[0], nb[1]);
  out.set_multiplicity(nb[0], nb[1], mode == GraphMode::Simple ? 1 : cur + 1);
  return delete_vertex(out, v);
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  int na = a.vertex_count();
  MultiGraph out(na + b.vertex_count());
  for (const auto& e : a.edges()) out.set_multiplicity(e.u, e.v, e.mult);
  for (const auto& e : b.edges()) out.set_multiplicity(e.u + na, e.v + na, e.mult);
  return out;
}

MultiGraph copies(const MultiGraph& g, int k) {
  if (k < 0) throw InvalidInput("negative copy count");
  MultiGraph out;
  for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation size mismatch");
  MultiGraph out(n);
  for (const auto& e : g.edges()) out.set_multiplicity(perm[e.u], perm[e.v], e.mult);
  return out;
}

std::vector<std::vector<int>> connected_components(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && g.adjacent(v, w)) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int component_count(const MultiGraph& g) { return static_cast<int>(connected_components(g).size()); }

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

int cycle_rank(const MultiGraph& g) { return g.edge_count() - g.vertex_count() + component_count(g); }

int min_degree(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const MultiGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int isolated_vertex_count(const MultiGraph& g) {
  int c = 0;
  for (int v = 0; v < g.vertex_count(); ++v) c += g.degree(v) == 0 ? 1 : 0;
  return c;
}

std::string describe(const MultiGraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " [";
  bool first = true;
  for (const auto& e : g.edges()) {
    os << (first ? "" : " ") << e.u << "-" << e.v;
    if (e.mult > 1) os << "x" << e.mult;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace uobs
