#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond MultiGraph itself and are only usable on tiny inputs.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "uobs/graph.hpp"

namespace oracle {

using uobs::MultiGraph;

inline std::vector<int> triangle(const MultiGraph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(g.multiplicity(inv[i], inv[j]));
  return out;
}

// Minimum upper-triangle string over all n! relabellings.
inline std::vector<int> brute_canon(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = triangle(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, triangle(g, perm));
  best.insert(best.begin(), n);
  return best;
}

inline bool brute_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  return a.vertex_count() == b.vertex_count() && brute_canon(a) == brute_canon(b);
}

// Every labelled multigraph on n vertices, deduplicated by brute_canon.
inline std::vector<MultiGraph> brute_enumerate(int n, int mult_max) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::map<std::vector<int>, MultiGraph> seen;
  std::vector<int> m(pairs.size(), 0);
  while (true) {
    MultiGraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m[k]) g.set_multiplicity(pairs[k].first, pairs[k].second, m[k]);
    seen.emplace(brute_canon(g), g);
    std::size_t k = 0;
    while (k < m.size() && m[k] == mult_max) m[k++] = 0;
    if (k == m.size()) break;
    ++m[k];
  }
  std::vector<MultiGraph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

inline bool is_acyclic(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int k = 0; k < g.multiplicity(u, v); ++k) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
      }
  return true;
}

inline MultiGraph random_graph(std::mt19937& rng, int n, int mult_max, double density) {
  MultiGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, mult_max);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < density) g.set_multiplicity(i, j, mult(rng));
  return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Minor test by trying every map V(g) -> {unused, 0..|h|-1}: branch sets must
// be connected and every edge of h must be realised between its two sets.
inline bool brute_minor(const MultiGraph& h, const MultiGraph& g) {
  int k = h.vertex_count();
  int n = g.vertex_count();
  if (k > n) return false;
  std::vector<int> assign(n, -1);
  auto check = [&]() {
    for (int x = 0; x < k; ++x) {
      std::vector<int> set;
      for (int v = 0; v < n; ++v)
        if (assign[v] == x) set.push_back(v);
      if (set.empty()) return false;
      std::vector<char> seen(n, 0);
      std::vector<int> stack{set[0]};
      seen[set[0]] = 1;
      int reached = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w = 0; w < n; ++w)
          if (!seen[w] && assign[w] == x && g.adjacent(v, w)) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      if (reached != static_cast<int>(set.size())) return false;
    }
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) {
        if (!h.adjacent(x, y)) continue;
        bool ok = false;
        for (int u = 0; u < n && !ok; ++u)
          for (int v = 0; v < n && !ok; ++v)
            ok = assign[u] == x && assign[v] == y && g.adjacent(u, v);
        if (!ok) return false;
      }
    return true;
  };
  while (true) {
    if (check()) return true;
    int i = 0;
    while (i < n && assign[i] == k - 1) assign[i++] = -1;
    if (i == n) return false;
    ++assign[i];
  }
}

// Subgraph test by trying every injective map V(h) -> V(g).
inline bool brute_subgraph(const MultiGraph& h, const MultiGraph& g) {
  int k = h.vertex_count();
  int n = g.vertex_count();
  if (k > n) return false;
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> chosen(k);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = h.multiplicity(i, j) <= g.multiplicity(v, chosen[j]);
      if (!ok) continue;
      used[v] = 1;
      chosen[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

inline MultiGraph drop_vertex(const MultiGraph& g, int x) {
  int n = g.vertex_count();
  MultiGraph out(n - 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u != x && v != x && g.multiplicity(u, v))
        out.set_multiplicity(u - (u > x), v - (v > x), g.multiplicity(u, v));
  return out;
}

enum class Ops { TopologicalMinor, Immersion };

// Canonical forms of everything reachable from g by vertex deletion, deletion
// of one edge unit, and either dissolving a degree-two vertex with
// non-adjacent neighbours (simple graphs) or lifting a pair of edges
// (multigraphs). h is contained in g iff brute_canon(h) is in the closure.
inline std::set<std::vector<int>> closure(Ops ops, const MultiGraph& g) {
  std::set<std::vector<int>> seen;
  std::vector<MultiGraph> stack{g};
  seen.insert(brute_canon(g));
  auto push = [&](const MultiGraph& x) {
    if (seen.insert(brute_canon(x)).second) stack.push_back(x);
  };
  while (!stack.empty()) {
    MultiGraph x = stack.back();
    stack.pop_back();
    int n = x.vertex_count();
    for (int v = 0; v < n; ++v) push(drop_vertex(x, v));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (x.multiplicity(u, v)) {
          MultiGraph y = x;
          y.set_multiplicity(u, v, x.multiplicity(u, v) - 1);
          push(y);
        }
    for (int y = 0; y < n; ++y) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (w != y && x.multiplicity(y, w)) nb.push_back(w);
      if (ops == Ops::TopologicalMinor) {
        int deg = 0;
        for (int w : nb) deg += x.multiplicity(y, w);
        if (deg == 2 && nb.size() == 2 && !x.multiplicity(nb[0], nb[1])) {
          MultiGraph z = x;
          z.set_multiplicity(nb[0], nb[1], 1);
          push(drop_vertex(z, y));
        }
      } else {
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            MultiGraph z = x;
            z.set_multiplicity(y, nb[i], z.multiplicity(y, nb[i]) - 1);
            z.set_multiplicity(y, nb[j], z.multiplicity(y, nb[j]) - 1);
            z.set_multiplicity(nb[i], nb[j], z.multiplicity(nb[i], nb[j]) + 1);
            push(z);
          }
      }
    }
  }
  return seen;
}

enum class Width { Tree, Path, Cut };

// Width of one layout, straight from the definitions.
inline int brute_layout_width(Width kind, const MultiGraph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  int width = 0;
  for (int i = 0; i < n; ++i) {
    std::set<int> counted;
    int crossing = 0;
    std::set<int> comp{order[i]};
    if (kind == Width::Tree) {
      bool grew = true;
      while (grew) {
        grew = false;
        for (int a : std::vector<int>(comp.begin(), comp.end()))
          for (int b = 0; b < n; ++b)
            if (pos[b] >= i && g.multiplicity(a, b) && comp.insert(b).second) grew = true;
      }
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (!(pos[u] < i && pos[v] >= i) || !g.multiplicity(u, v)) continue;
        if (kind == Width::Cut) crossing += g.multiplicity(u, v);
        if (kind == Width::Path) counted.insert(u);
        if (kind == Width::Tree && comp.count(v)) counted.insert(u);
      }
    width = std::max(width, kind == Width::Cut ? crossing : static_cast<int>(counted.size()));
  }
  return width;
}

inline int brute_width(Width kind, const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = brute_layout_width(kind, g, order);
  while (std::next_permutation(order.begin(), order.end())) best = std::min(best, brute_layout_width(kind, g, order));
  return best;
}

// Treewidth through the elimination game: eliminating a vertex turns its
// current neighbourhood into a clique; the width is the largest such
// neighbourhood, minimised over all elimination orders.
inline int brute_elimination_treewidth(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) a[u][v] = u != v && g.multiplicity(u, v) > 0;
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && a[v][w]) nb.push_back(w);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int x : nb)
        for (int y : nb)
          if (x != y) a[x][y] = 1;
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace oracle
