#include "uobs/parameters.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>

#include "uobs/error.hpp"
#include "uobs/limits.hpp"
#include "uobs/parallel.hpp"

namespace uobs {

namespace {

using Mask = std::uint32_t;
constexpr int kHardLayoutCap = 26;

void check_layout_budget(const MultiGraph& g, const ParameterBudget& budget, const std::string& what) {
  int cap = std::min(budget.layout_max_vertices, kHardLayoutCap);
  if (g.vertex_count() > cap)
    throw BudgetExceeded(what + ": " + std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                         std::to_string(cap));
}

std::vector<Mask> adjacency_masks(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<Mask> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= Mask{1} << v;
  return adj;
}

Mask neighbourhood(const std::vector<Mask>& adj, Mask set) {
  Mask out = 0;
  for (Mask s = set; s; s &= s - 1) out |= adj[std::countr_zero(s)];
  return out;
}

// Minimum over vertex orders of the largest step cost. fill(prefix, cost)
// writes the cost of placing each vertex outside prefix next.
ParameterResult layout_dp(int n, const std::function<void(Mask, std::vector<int>&)>& fill, const std::string& what) {
  ParameterResult res;
  if (n == 0) return res;
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<int> best(static_cast<std::size_t>(full) + 1, INT_MAX);
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  best[0] = 0;
  std::vector<int> cost(n, 0);
  StepCounter counter(0, what);
  for (Mask p = 0; p < full; ++p) {
    counter.tick();
    fill(p, cost);
    for (Mask rest = full & ~p; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int val = std::max(best[p], cost[v]);
      Mask q = p | (Mask{1} << v);
      if (val < best[q]) {
        best[q] = val;
        last[q] = static_cast<std::int8_t>(v);
      }
    }
  }
  res.value = best[full];
  for (Mask s = full; s; s &= ~(Mask{1} << last[s])) res.layout.push_back(last[s]);
  std::reverse(res.layout.begin(), res.layout.end());
  return res;
}

void block_search(const MultiGraph& g, int v, int parent, int& timer, std::vector<int>& disc, std::vector<int>& low,
                  std::vector<std::pair<int, int>>& stack, std::vector<std::vector<int>>& out) {
  disc[v] = low[v] = timer++;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == v || !g.adjacent(v, w) || w == parent) continue;
    if (disc[w] < 0) {
      stack.push_back({v, w});
      block_search(g, w, v, timer, disc, low, stack, out);
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= disc[v]) {
        std::vector<int> block;
        while (true) {
          auto e = stack.back();
          stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == std::make_pair(v, w)) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.push_back(block);
      }
    } else if (disc[w] < disc[v]) {
      stack.push_back({v, w});
      low[v] = std::min(low[v], disc[w]);
    }
  }
}

}  // namespace

std::string to_string(ParameterKind k) {
  switch (k) {
    case ParameterKind::Treewidth:
      return "tw";
    case ParameterKind::Pathwidth:
      return "pw";
    case ParameterKind::Cutwidth:
      return "cw";
    case ParameterKind::BiPathwidth:
      return "bipw";
    case ParameterKind::EdgeDegree:
      return "edge_degree";
    case ParameterKind::ZApex:
      return "z_apex";
  }
  return "?";
}

ParameterKind parse_parameter_kind(const std::string& s) {
  if (s == "tw" || s == "treewidth") return ParameterKind::Treewidth;
  if (s == "pw" || s == "pathwidth") return ParameterKind::Pathwidth;
  if (s == "cw" || s == "cutwidth") return ParameterKind::Cutwidth;
  if (s == "bipw" || s == "bi_pw" || s == "bi_pathwidth") return ParameterKind::BiPathwidth;
  if (s == "ed" || s == "edge_degree") return ParameterKind::EdgeDegree;
  if (s == "z_apex" || s == "zapex") return ParameterKind::ZApex;
  throw InvalidInput("unknown parameter kind '" + s + "'");
}

std::string Parameter::name() const { return to_string(kind); }

Relation Parameter::monotone_under() const {
  return kind == ParameterKind::Cutwidth || kind == ParameterKind::EdgeDegree ? Relation::Immersion
                                                                               : Relation::Minor;
}

ParameterResult treewidth(const MultiGraph& g, const ParameterBudget& budget) {
  check_layout_budget(g, budget, "treewidth");
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  return layout_dp(
      n,
      [&](Mask prefix, std::vector<int>& cost) {
        Mask left = full & ~prefix;
        while (left) {
          Mask comp = left & (~left + 1);
          Mask frontier = comp;
          while (frontier) {
            Mask grow = neighbourhood(adj, frontier) & left & ~comp;
            comp |= grow;
            frontier = grow;
          }
          int c = std::popcount(neighbourhood(adj, comp) & prefix);
          for (Mask s = comp; s; s &= s - 1) cost[std::countr_zero(s)] = c;
          left &= ~comp;
        }
      },
      "treewidth");
}

int treewidth_by_elimination(const MultiGraph& g, const ParameterBudget& budget) {
  check_layout_budget(g, budget, "treewidth");
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  return layout_dp(
             n,
             [&](Mask eliminated, std::vector<int>& cost) {
               for (Mask rest = full & ~eliminated; rest; rest &= rest - 1) {
                 int v = std::countr_zero(rest);
                 Mask inside = 0;
                 Mask frontier = adj[v] & eliminated;
                 while (frontier) {
                   inside |= frontier;
                   frontier = neighbourhood(adj, frontier) & eliminated & ~inside;
                 }
                 Mask reach = (adj[v] | neighbourhood(adj, inside)) & ~eliminated & ~(Mask{1} << v);
                 cost[v] = std::popcount(reach);
               }
             },
             "treewidth")
      .value;
}

ParameterResult pathwidth(const MultiGraph& g, const ParameterBudget& budget) {
  check_layout_budget(g, budget, "pathwidth");
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  return layout_dp(
      n,
      [&](Mask prefix, std::vector<int>& cost) {
        int c = std::popcount(neighbourhood(adj, full & ~prefix) & prefix);
        std::fill(cost.begin(), cost.end(), c);
      },
      "pathwidth");
}

ParameterResult cutwidth(const MultiGraph& g, const ParameterBudget& budget) {
  check_layout_budget(g, budget, "cutwidth");
  int n = g.vertex_count();
  return layout_dp(
      n,
      [&](Mask prefix, std::vector<int>& cost) {
        int c = 0;
        for (int u = 0; u < n; ++u)
          if (prefix >> u & 1)
            for (int v = 0; v < n; ++v)
              if (!(prefix >> v & 1)) c += g.multiplicity(u, v);
        std::fill(cost.begin(), cost.end(), c);
      },
      "cutwidth");
}

std::vector<std::vector<int>> blocks(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  for (int v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.neighbor_count(v) == 0) {
      disc[v] = timer++;
      out.push_back({v});
      continue;
    }
    block_search(g, v, -1, timer, disc, low, stack, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParameterResult bi_pathwidth(const MultiGraph& g, const ParameterBudget& budget) {
  ParameterResult res;
  MultiGraph s = simplified(g);
  for (const auto& b : blocks(s)) res.value = std::max(res.value, pathwidth(induced_subgraph(s, b), budget).value);
  return res;
}

ParameterResult edge_degree(const MultiGraph& g) {
  ParameterResult res;
  res.value = max_degree(g);
  return res;
}

ParameterResult z_apex(const MultiGraph& g, const GraphSet& z_list, const ParameterBudget& budget) {
  int n = g.vertex_count();
  if (n > budget.z_apex_max_vertices)
    throw BudgetExceeded("z_apex: " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(budget.z_apex_max_vertices));
  auto free_of_z = [&](const MultiGraph& x) {
    for (const auto& [key, z] : z_list)
      if (contains(Relation::Minor, z, x)) return false;
    return true;
  };
  for (int size = 0; size <= n; ++size) {
    std::vector<std::vector<int>> sets;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      sets.push_back(pick);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<char> ok(sets.size(), 0);
    parallel_for(static_cast<long long>(sets.size()), budget.parallel,
                 [&](long long i) { ok[i] = free_of_z(delete_vertices(g, sets[i])); });
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (ok[i]) {
        ParameterResult res;
        res.value = size;
        res.deletion_set = sets[i];
        return res;
      }
  }
  throw InternalError("z_apex: deleting every vertex must leave a Z-minor-free graph");
}

ParameterResult evaluate(const Parameter& p, const MultiGraph& g, const ParameterBudget& budget) {
  switch (p.kind) {
    case ParameterKind::Treewidth:
      return treewidth(g, budget);
    case ParameterKind::Pathwidth:
      return pathwidth(g, budget);
    case ParameterKind::Cutwidth:
      return cutwidth(g, budget);
    case ParameterKind::BiPathwidth:
      return bi_pathwidth(g, budget);
    case ParameterKind::EdgeDegree:
      return edge_degree(g);
    case ParameterKind::ZApex:
      return z_apex(g, p.z_list, budget);
  }
  throw InternalError("unhandled parameter kind");
}

bool parameter_at_most(const Parameter& p, int k, const MultiGraph& g, const ParameterBudget& budget) {
  return evaluate(p, g, budget).value <= k;
}

int layout_width(ParameterKind kind, const MultiGraph& g, const std::vector<int>& layout) {
  int n = g.vertex_count();
  std::vector<int> pos(n, -1);
  if (static_cast<int>(layout.size()) != n) throw InvalidInput("layout must list every vertex once");
  for (int i = 0; i < n; ++i) {
    int v = layout[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw InvalidInput("layout must list every vertex once");
    pos[v] = i;
  }
  int width = 0;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    if (kind == ParameterKind::Cutwidth) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (pos[u] < i && pos[v] >= i) count += g.multiplicity(u, v);
    } else if (kind == ParameterKind::Pathwidth) {
      for (int u = 0; u < n; ++u) {
        if (pos[u] >= i) continue;
        bool touches = false;
        for (int v = 0; v < n && !touches; ++v) touches = pos[v] >= i && g.adjacent(u, v);
        count += touches;
      }
    } else if (kind == ParameterKind::Treewidth) {
      std::vector<char> comp(n, 0);
      std::vector<int> stack{layout[i]};
      comp[layout[i]] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
          if (!comp[w] && pos[w] >= i && g.adjacent(v, w)) {
            comp[w] = 1;
            stack.push_back(w);
          }
      }
      for (int u = 0; u < n; ++u) {
        if (pos[u] >= i) continue;
        bool touches = false;
        for (int v = 0; v < n && !touches; ++v) touches = comp[v] && g.adjacent(u, v);
        count += touches;
      }
    } else {
      throw InvalidInput("layout_width applies to tw, pw and cw only");
    }
    width = std::max(width, count);
  }
  return width;
}

}  // namespace uobs
