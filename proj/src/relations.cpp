#include "uobs/relations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "uobs/canonical.hpp"
#include "uobs/classes.hpp"
#include "uobs/error.hpp"
#include "uobs/limits.hpp"
#include "uobs/parallel.hpp"

namespace uobs {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalForm_hash>;

std::vector<int> sorted_degrees(const MultiGraph& g, bool distinct) {
  std::vector<int> d(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = distinct ? g.neighbor_count(v) : g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

// The i-th largest degree of h never exceeds the i-th largest degree of g.
bool degrees_dominated(const MultiGraph& h, const MultiGraph& g, bool distinct) {
  auto dh = sorted_degrees(h, distinct);
  auto dg = sorted_degrees(g, distinct);
  for (std::size_t i = 0; i < dh.size(); ++i)
    if (dh[i] > dg[i]) return false;
  return true;
}

int branch_vertex_count(const MultiGraph& g) {
  int c = 0;
  for (int v = 0; v < g.vertex_count(); ++v) c += g.neighbor_count(v) >= 3 ? 1 : 0;
  return c;
}

std::vector<std::vector<int>> adjacency_lists(const MultiGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

std::vector<std::vector<int>> all_distances(const MultiGraph& g) {
  int n = g.vertex_count();
  auto adj = adjacency_lists(g);
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, n + 1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    dist[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (dist[s][w] > n) {
          dist[s][w] = dist[s][v] + 1;
          q.push_back(w);
        }
    }
  }
  return dist;
}

// Pattern vertices in search order: each next vertex has the most already
// placed neighbours (then highest degree, then lowest label). anchor[i] is an
// earlier neighbour of order[i], or -1.
struct PatternOrder {
  std::vector<int> order;
  std::vector<int> anchor;
  std::vector<int> position;
};

PatternOrder pattern_order(const MultiGraph& h) {
  int k = h.vertex_count();
  PatternOrder po;
  po.position.assign(k, -1);
  std::vector<int> placed_nb(k, 0);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    for (int v = 0; v < k; ++v) {
      if (po.position[v] >= 0) continue;
      if (best < 0 || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] && h.degree(v) > h.degree(best)))
        best = v;
    }
    int anchor = -1;
    for (int u : po.order)
      if (h.adjacent(u, best)) {
        anchor = u;
        break;
      }
    po.position[best] = step;
    po.order.push_back(best);
    po.anchor.push_back(anchor);
    for (int w = 0; w < k; ++w)
      if (h.adjacent(best, w)) ++placed_nb[w];
  }
  return po;
}

// ---------------------------------------------------------------- subgraph

class SubgraphSearch {
 public:
  SubgraphSearch(const MultiGraph& h, const MultiGraph& g, StepCounter& counter)
      : h_(h), g_(g), counter_(counter), po_(pattern_order(h)), gadj_(adjacency_lists(g)) {
    phi_.assign(h.vertex_count(), -1);
    used_.assign(g.vertex_count(), 0);
  }

  bool run() {
    if (h_.vertex_count() > g_.vertex_count() || h_.edge_count() > g_.edge_count()) return false;
    if (!degrees_dominated(h_, g_, false) || !degrees_dominated(h_, g_, true)) return false;
    return extend(0);
  }

 private:
  bool fits(int x, int c) const {
    if (used_[c] || g_.degree(c) < h_.degree(x) || g_.neighbor_count(c) < h_.neighbor_count(x)) return false;
    for (int y = 0; y < h_.vertex_count(); ++y) {
      int m = h_.multiplicity(x, y);
      if (m && phi_[y] >= 0 && g_.multiplicity(c, phi_[y]) < m) return false;
    }
    return true;
  }

  bool try_candidate(int pos, int x, int c) {
    counter_.tick();
    if (!fits(x, c)) return false;
    phi_[x] = c;
    used_[c] = 1;
    bool ok = extend(pos + 1);
    phi_[x] = -1;
    used_[c] = 0;
    return ok;
  }

  bool extend(int pos) {
    if (pos == h_.vertex_count()) return true;
    int x = po_.order[pos];
    int a = po_.anchor[pos];
    if (a >= 0) {
      for (int c : gadj_[phi_[a]])
        if (try_candidate(pos, x, c)) return true;
    } else {
      for (int c = 0; c < g_.vertex_count(); ++c)
        if (try_candidate(pos, x, c)) return true;
    }
    return false;
  }

  const MultiGraph& h_;
  const MultiGraph& g_;
  StepCounter& counter_;
  PatternOrder po_;
  std::vector<std::vector<int>> gadj_;
  std::vector<int> phi_;
  std::vector<char> used_;
};

bool subgraph_search(const MultiGraph& h, const MultiGraph& g, StepCounter& counter) {
  return SubgraphSearch(h, g, counter).run();
}

// ------------------------------------------------- topological minor / immersion

// Injective map of pattern vertices plus one host path per unit of pattern
// multiplicity. Topological minors need internally vertex-disjoint paths whose
// interiors avoid branch vertices; immersions need edge-disjoint paths only.
class PathModelSearch {
 public:
  PathModelSearch(const MultiGraph& h, const MultiGraph& g, bool vertex_disjoint, StepCounter& counter)
      : h_(h),
        g_(g),
        vertex_disjoint_(vertex_disjoint),
        counter_(counter),
        po_(pattern_order(h)),
        gadj_(adjacency_lists(g)),
        dist_(all_distances(g)) {
    int n = g.vertex_count();
    phi_.assign(h.vertex_count(), -1);
    image_of_.assign(n, -1);
    interior_.assign(n, 0);
    cap_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) cap_[idx(u, v)] = g.multiplicity(u, v);
  }

  bool run() {
    if (h_.vertex_count() > g_.vertex_count() || h_.edge_count() > g_.edge_count()) return false;
    if (!degrees_dominated(h_, g_, false)) return false;
    if (vertex_disjoint_ && !degrees_dominated(h_, g_, true)) return false;
    return extend(0);
  }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * g_.vertex_count() + v; }
  bool free_vertex(int v) const { return image_of_[v] < 0 && !interior_[v]; }

  // Unused capacity at v towards vertices a future path may still enter.
  int residual_degree(int v, bool allow_images) const {
    int d = 0;
    for (int w : gadj_[v]) {
      if (vertex_disjoint_ && interior_[w]) continue;
      if (vertex_disjoint_ && !allow_images && image_of_[w] >= 0) continue;
      d += cap_[idx(v, w)];
    }
    return d;
  }

  // Every placed vertex still needs paths to its unplaced neighbours, and
  // those paths must leave through edges it has not used yet.
  bool lookahead() const {
    for (int z = 0; z < h_.vertex_count(); ++z) {
      if (phi_[z] < 0) continue;
      int need = 0;
      for (int y = 0; y < h_.vertex_count(); ++y)
        if (phi_[y] < 0) need += h_.multiplicity(z, y);
      if (need && residual_degree(phi_[z], false) < need) return false;
    }
    return true;
  }

  std::vector<int> candidates(int pos) const {
    std::vector<int> out;
    for (int c = 0; c < g_.vertex_count(); ++c)
      if (free_vertex(c)) out.push_back(c);
    int a = po_.anchor[pos];
    if (a >= 0) {
      int from = phi_[a];
      std::stable_sort(out.begin(), out.end(), [&](int x, int y) { return dist_[from][x] < dist_[from][y]; });
    }
    return out;
  }

  bool extend(int pos) {
    if (pos == h_.vertex_count()) return true;
    int x = po_.order[pos];
    for (int c : candidates(pos)) {
      counter_.tick();
      if (g_.degree(c) < h_.degree(x)) continue;
      if (vertex_disjoint_ && g_.neighbor_count(c) < h_.neighbor_count(x)) continue;
      if (residual_degree(c, true) < h_.degree(x)) continue;
      phi_[x] = c;
      image_of_[c] = x;
      std::vector<int> targets;
      for (int y = 0; y < h_.vertex_count(); ++y)
        if (phi_[y] >= 0 && y != x)
          for (int k = 0; k < h_.multiplicity(x, y); ++k) targets.push_back(phi_[y]);
      bool ok = route(pos, c, targets, 0);
      phi_[x] = -1;
      image_of_[c] = -1;
      if (ok) return true;
    }
    return false;
  }

  bool route(int pos, int source, const std::vector<int>& targets, std::size_t i) {
    if (i == targets.size()) return lookahead() && extend(pos + 1);
    int t = targets[i];
    std::vector<int> path{source};
    on_path_.assign(g_.vertex_count(), 0);
    on_path_[source] = 1;
    return walk(pos, source, t, targets, i, path);
  }

  bool reachable(int from, int t) const {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : gadj_[v]) {
        if (seen[w] || cap_[idx(v, w)] == 0) continue;
        if (w == t) return true;
        if (on_path_[w]) continue;
        if (vertex_disjoint_ && !free_vertex(w)) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  bool walk(int pos, int cur, int t, const std::vector<int>& targets, std::size_t i, std::vector<int>& path) {
    counter_.tick();
    if (!reachable(cur, t)) return false;
    std::vector<int> next;
    for (int w : gadj_[cur])
      if (cap_[idx(cur, w)] > 0) next.push_back(w);
    std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return dist_[a][t] < dist_[b][t]; });
    for (int w : next) {
      if (w != t) {
        if (on_path_[w]) continue;
        if (vertex_disjoint_ && !free_vertex(w)) continue;
      }
      --cap_[idx(cur, w)];
      --cap_[idx(w, cur)];
      bool ok;
      if (w == t) {
        if (vertex_disjoint_)
          for (std::size_t p = 1; p < path.size(); ++p) interior_[path[p]] = 1;
        auto saved = on_path_;
        ok = route(pos, path[0], targets, i + 1);
        on_path_ = saved;
        if (vertex_disjoint_)
          for (std::size_t p = 1; p < path.size(); ++p) interior_[path[p]] = 0;
      } else {
        on_path_[w] = 1;
        path.push_back(w);
        ok = walk(pos, w, t, targets, i, path);
        path.pop_back();
        on_path_[w] = 0;
      }
      ++cap_[idx(cur, w)];
      ++cap_[idx(w, cur)];
      if (ok) return true;
    }
    return false;
  }

  const MultiGraph& h_;
  const MultiGraph& g_;
  bool vertex_disjoint_;
  StepCounter& counter_;
  PatternOrder po_;
  std::vector<std::vector<int>> gadj_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> phi_;
  std::vector<int> image_of_;
  std::vector<char> interior_;
  std::vector<char> on_path_;
  std::vector<int> cap_;
};

bool path_model_search(const MultiGraph& h, const MultiGraph& g, bool vertex_disjoint, StepCounter& counter) {
  return PathModelSearch(h, g, vertex_disjoint, counter).run();
}

// ------------------------------------------------------------------- minor

// Minor-closed classes used as quick refutations: if g is in the class and h
// is not, h cannot be a minor of g. Evaluated on underlying simple graphs.
bool class_refutes(const MultiGraph& h, const MultiGraph& g) {
  using Test = bool (*)(const MultiGraph&);
  static const Test tests[] = {&is_linear_forest, &is_forest, &is_outerplanar, &is_planar, &is_apex_forest};
  auto hs = simplified(h);
  auto gs = simplified(g);
  for (Test t : tests)
    if (t(gs) && !t(hs)) return true;
  return false;
}

bool minor_necessary(const MultiGraph& h, const MultiGraph& g) {
  return h.vertex_count() <= g.vertex_count() && h.edge_count() <= g.edge_count() &&
         cycle_rank(h) <= cycle_rank(g) && branch_vertex_count(h) <= branch_vertex_count(g);
}

// Longest run of degree-2 pattern vertices that a single host chain might
// have to carry as separate branch sets.
int degree_two_run(const MultiGraph& h) {
  int n = h.vertex_count();
  std::vector<char> two(n, 0);
  for (int v = 0; v < n; ++v) two[v] = h.neighbor_count(v) == 2 ? 1 : 0;
  int best = 0;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!two[s] || seen[s]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w = 0; w < n; ++w)
        if (two[w] && !seen[w] && h.adjacent(v, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

// Host simplifications that preserve "h is a minor of g" for simple graphs
// when h has no isolated vertex and minimum degree at least two.
MultiGraph reduce_host(const MultiGraph& h, MultiGraph g) {
  if (h.vertex_count() == 0 || isolated_vertex_count(h) > 0) return g;
  int dmin = min_degree(h);
  auto drop_low = [&](int below) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < below) {
          g = delete_vertex(g, v);
          changed = true;
          break;
        }
    }
  };
  drop_low(1);
  if (dmin < 2) return g;
  drop_low(2);
  int keep = dmin >= 3 ? 0 : std::max(1, degree_two_run(h));
  // Shorten every maximal chain of degree-2 host vertices between two
  // distinct ends to `keep` interior vertices.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count() && !changed; ++v) {
      if (g.degree(v) != 2 || g.neighbor_count(v) != 2) continue;
      std::vector<int> chain{v};
      std::vector<int> ends;
      for (int dir : g.neighbors(v)) {
        int prev = v;
        int cur = dir;
        std::vector<int> part;
        while (cur != v && g.degree(cur) == 2 && g.neighbor_count(cur) == 2) {
          part.push_back(cur);
          auto nb = g.neighbors(cur);
          int nxt = nb[0] == prev ? nb[1] : nb[0];
          prev = cur;
          cur = nxt;
        }
        if (cur == v) {
          ends.clear();
          break;
        }
        chain.insert(chain.end(), part.begin(), part.end());
        ends.push_back(cur);
      }
      if (ends.size() != 2 || ends[0] == ends[1]) continue;
      if (static_cast<int>(chain.size()) <= keep) continue;
      if (keep == 0) {
        g.set_multiplicity(ends[0], ends[1], 1);
        g = delete_vertices(g, chain);
      } else {
        std::sort(chain.begin(), chain.end());
        std::vector<int> drop(chain.begin(), chain.end() - keep);
        std::vector<int> kept(chain.end() - keep, chain.end());
        for (int c : chain)
          for (int w = 0; w < g.vertex_count(); ++w) g.set_multiplicity(c, w, 0);
        g.set_multiplicity(ends[0], kept[0], 1);
        for (int i = 0; i + 1 < keep; ++i) g.set_multiplicity(kept[i], kept[i + 1], 1);
        g.set_multiplicity(kept.back(), ends[1], 1);
        g = delete_vertices(g, drop);
      }
      changed = true;
    }
  }
  return g;
}

class MinorSearch {
 public:
  MinorSearch(const MultiGraph& h, GraphMode mode, StepCounter& counter) : h_(h), mode_(mode), counter_(counter) {
    rank_ = cycle_rank(h);
    branch_ = branch_vertex_count(h);
  }

  // Every minor is a subgraph of a contraction, so explore contractions
  // (memoised up to isomorphism) and test for a subgraph at each one.
  bool run(const MultiGraph& g) {
    counter_.tick();
    if (g.vertex_count() < h_.vertex_count() || g.edge_count() < h_.edge_count()) return false;
    if (cycle_rank(g) < rank_ || branch_vertex_count(g) < branch_) return false;
    if (!seen_.insert(canonical_form(g)).second) return false;
    if (subgraph_search(h_, g, counter_)) return true;
    if (g.vertex_count() == h_.vertex_count()) return false;
    for (const auto& e : g.edges())
      if (run(contract_edge(g, e.u, e.v, mode_))) return true;
    return false;
  }

 private:
  const MultiGraph& h_;
  GraphMode mode_;
  StepCounter& counter_;
  int rank_ = 0;
  int branch_ = 0;
  FormSet seen_;
};

// Cheap witness attempt with its own step allowance; running out only means
// the caller has to fall back to its full search.
template <class Search>
bool probe(std::uint64_t limit, const char* what, Search&& search) {
  try {
    StepCounter counter(limit, what);
    return search(counter);
  } catch (const BudgetExceeded&) {
    return false;
  }
}

constexpr std::uint64_t kProbeSteps = 200'000;

bool max_degree_at_most_three(const MultiGraph& h) {
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 3) return false;
  return true;
}

bool minor_contains(const MultiGraph& h, MultiGraph g, GraphMode mode, const ContainmentOptions& options) {
  if (h.vertex_count() == 0) return true;
  if (!minor_necessary(h, g)) return false;
  if (class_refutes(h, g)) return false;
  if (mode == GraphMode::Simple) {
    g = reduce_host(h, std::move(g));
    if (!minor_necessary(h, g)) return false;
  }
  bool exact = h.vertex_count() <= options.max_pattern && g.vertex_count() <= options.max_host;
  StepCounter counter(exact ? 0 : options.effort_limit, "minor search");
  if (probe(kProbeSteps, "subgraph probe", [&](StepCounter& c) { return subgraph_search(h, g, c); })) return true;
  // For subcubic simple patterns minors and topological minors coincide.
  if (mode == GraphMode::Simple && max_degree_at_most_three(h)) return path_model_search(h, g, true, counter);
  if (probe(kProbeSteps, "minor probe", [&](StepCounter& c) { return path_model_search(h, g, true, c); }))
    return true;
  return MinorSearch(h, mode, counter).run(g);
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Subgraph:
      return "subgraph";
    case Relation::TopologicalMinor:
      return "topological_minor";
    case Relation::Minor:
      return "minor";
    case Relation::Immersion:
      return "immersion";
  }
  return "?";
}

Relation parse_relation(const std::string& s) {
  if (s == "subgraph") return Relation::Subgraph;
  if (s == "topological_minor" || s == "topminor" || s == "tm") return Relation::TopologicalMinor;
  if (s == "minor") return Relation::Minor;
  if (s == "immersion") return Relation::Immersion;
  throw InvalidInput("unknown relation '" + s + "'");
}

std::string to_string(GraphMode m) { return m == GraphMode::Simple ? "simple" : "multigraph"; }

GraphMode default_mode(Relation r) {
  return r == Relation::Minor || r == Relation::TopologicalMinor ? GraphMode::Simple : GraphMode::Multigraph;
}

bool contains(Relation rel, const MultiGraph& h0, const MultiGraph& g0, const ContainmentOptions& options) {
  GraphMode mode = options.mode.value_or(default_mode(rel));
  MultiGraph h = mode == GraphMode::Simple ? simplified(h0) : h0;
  MultiGraph g = mode == GraphMode::Simple ? simplified(g0) : g0;
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return false;
  if (rel == Relation::Minor) return minor_contains(h, std::move(g), mode, options);
  bool exact = h.vertex_count() <= options.max_pattern && g.vertex_count() <= options.max_host;
  StepCounter counter(exact ? 0 : options.effort_limit, to_string(rel) + " search");
  switch (rel) {
    case Relation::Subgraph:
      return subgraph_search(h, g, counter);
    case Relation::TopologicalMinor:
    case Relation::Immersion:
      if (probe(kProbeSteps, "subgraph probe", [&](StepCounter& c) { return subgraph_search(h, g, c); }))
        return true;
      return path_model_search(h, g, rel == Relation::TopologicalMinor, counter);
    case Relation::Minor:
      break;
  }
  return false;
}

bool contains_immersion_by_lifting(const MultiGraph& h, const MultiGraph& g, int max_host_vertices) {
  if (g.vertex_count() > max_host_vertices) throw BudgetExceeded("lifting closure limited to small hosts");
  auto target = canonical_form(h);
  FormSet seen;
  std::deque<MultiGraph> queue{g};
  seen.insert(canonical_form(g));
  while (!queue.empty()) {
    MultiGraph cur = std::move(queue.front());
    queue.pop_front();
    if (canonical_form(cur) == target) return true;
    for (auto& next : single_step_reductions(Relation::Immersion, cur, GraphMode::Multigraph)) {
      if (next.vertex_count() < h.vertex_count() || next.edge_count() < h.edge_count()) continue;
      if (seen.insert(canonical_form(next)).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

std::vector<MultiGraph> single_step_reductions(Relation rel, const MultiGraph& g, GraphMode mode) {
  std::vector<MultiGraph> out;
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v) out.push_back(delete_vertex(g, v));
  auto edges = g.edges();
  for (const auto& e : edges) out.push_back(delete_edge(g, e.u, e.v));
  switch (rel) {
    case Relation::Minor:
      for (const auto& e : edges) out.push_back(contract_edge(g, e.u, e.v, mode));
      break;
    case Relation::Immersion:
      for (int y = 0; y < n; ++y) {
        auto nb = g.neighbors(y);
        for (std::size_t a = 0; a < nb.size(); ++a)
          for (std::size_t b = a + 1; b < nb.size(); ++b) out.push_back(lift_pair(g, nb[a], y, nb[b]));
      }
      break;
    case Relation::TopologicalMinor:
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2 && g.neighbor_count(v) == 2) out.push_back(dissolve_vertex(g, v, mode));
      break;
    case Relation::Subgraph:
      break;
  }
  return out;
}

namespace {

GraphSet min_elements_impl(Relation rel, const GraphSet& s, const ContainmentOptions& options, bool parallel) {
  auto items = s.graphs();
  const long long count = static_cast<long long>(items.size());
  std::vector<char> minimal(items.size(), 1);
  parallel_for(count, parallel, [&](long long i) {
    for (long long j = 0; j < count && minimal[i]; ++j) {
      if (j == i) continue;
      if (!contains(rel, items[j], items[i], options)) continue;
      // Strictly below, or equivalent and earlier in EnumOrder.
      if (j < i || !contains(rel, items[i], items[j], options)) minimal[i] = 0;
    }
  });
  GraphSet out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (minimal[i]) out.insert(items[i]);
  return out;
}

std::vector<char> any_related(Relation rel, const std::vector<MultiGraph>& probes, const std::vector<MultiGraph>& fixed,
                              bool probe_is_host, const ContainmentOptions& options) {
  std::vector<char> hit(probes.size(), 0);
  parallel_for(static_cast<long long>(probes.size()), options.parallel, [&](long long i) {
    for (const auto& f : fixed) {
      bool rel_holds = probe_is_host ? contains(rel, f, probes[i], options) : contains(rel, probes[i], f, options);
      if (rel_holds) {
        hit[i] = 1;
        break;
      }
    }
  });
  return hit;
}

}  // namespace

GraphSet min_elements(Relation rel, const GraphSet& s, const ContainmentOptions& options) {
  return min_elements_impl(rel, s, options, options.parallel);
}

GraphSet min_elements_serial(Relation rel, const GraphSet& s, const ContainmentOptions& options) {
  return min_elements_impl(rel, s, options, false);
}

bool set_dominates(Relation rel, const GraphSet& a, const GraphSet& b, const ContainmentOptions& options) {
  auto hit = any_related(rel, b.graphs(), a.graphs(), true, options);
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GraphSet excl_within(Relation rel, const GraphSet& obstructions, const GraphSet& universe,
                     const ContainmentOptions& options) {
  auto items = universe.graphs();
  auto hit = any_related(rel, items, obstructions.graphs(), true, options);
  GraphSet out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!hit[i]) out.insert(items[i]);
  return out;
}

GraphSet down_closure_within(Relation rel, const GraphSet& seeds, const GraphSet& universe,
                             const ContainmentOptions& options) {
  auto items = universe.graphs();
  auto hit = any_related(rel, items, seeds.graphs(), false, options);
  GraphSet out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (hit[i]) out.insert(items[i]);
  return out;
}

GraphSet up_closure_within(Relation rel, const GraphSet& seeds, const GraphSet& universe,
                           const ContainmentOptions& options) {
  auto items = universe.graphs();
  auto hit = any_related(rel, items, seeds.graphs(), true, options);
  GraphSet out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (hit[i]) out.insert(items[i]);
  return out;
}

bool is_antichain(Relation rel, const GraphSet& s, const ContainmentOptions& options) {
  auto items = s.graphs();
  std::vector<char> bad(items.size(), 0);
  parallel_for(static_cast<long long>(items.size()), options.parallel, [&](long long i) {
    for (std::size_t j = 0; j < items.size(); ++j)
      if (static_cast<long long>(j) != i && contains(rel, items[i], items[j], options)) {
        bad[i] = 1;
        break;
      }
  });
  return std::none_of(bad.begin(), bad.end(), [](char c) { return c != 0; });
}

}  // namespace uobs
