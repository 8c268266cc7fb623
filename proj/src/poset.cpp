#include "uobs/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

#include "uobs/error.hpp"
#include "uobs/parallel.hpp"

namespace uobs {

namespace {

void check_square(std::size_t n, const OrderMatrix& le) {
  if (le.size() != n) throw InvalidInput("order matrix has " + std::to_string(le.size()) + " rows for " +
                                         std::to_string(n) + " elements");
  for (const auto& row : le)
    if (row.size() != n) throw InvalidInput("order matrix is not square");
}

void check_quasi_order(const OrderMatrix& le) {
  std::size_t n = le.size();
  for (std::size_t a = 0; a < n; ++a)
    if (!le[a][a]) throw InvalidInput("order is not reflexive at element " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!le[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (le[b][c] && !le[a][c])
          throw InvalidInput("order is not transitive at " + std::to_string(a) + " <= " + std::to_string(b) +
                             " <= " + std::to_string(c));
    }
}

// Maximum matching from a to b over a < b; match_right[b] = a or -1.
std::vector<int> strict_order_matching(const FinitePoset& p) {
  int n = p.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int a) -> bool {
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.le(a, b) || seen[b]) continue;
      seen[b] = 1;
      if (match_right[b] < 0 || self(self, match_right[b])) {
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  for (int a = 0; a < n; ++a) {
    seen.assign(n, 0);
    augment(augment, a);
  }
  return match_right;
}

using Mask = std::uint64_t;

void grow_clique(const std::vector<Mask>& adj, Mask current, int size, Mask candidates, Mask& best, int& best_size) {
  if (candidates == 0) {
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    return;
  }
  if (size + std::popcount(candidates) <= best_size) return;
  while (candidates) {
    if (size + std::popcount(candidates) <= best_size) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, current | (Mask{1} << v), size + 1, candidates & adj[v], best, best_size);
  }
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels, OrderMatrix le) : labels_(std::move(labels)), le_(std::move(le)) {
  check_square(labels_.size(), le_);
  check_quasi_order(le_);
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (le_[a][b] && le_[b][a])
        throw InvalidInput("order is not antisymmetric: " + labels_[a] + " and " + labels_[b]);
}

Quotient quotient(const std::vector<std::string>& labels, const OrderMatrix& le) {
  check_square(labels.size(), le);
  check_quasi_order(le);
  int n = static_cast<int>(labels.size());
  std::vector<int> cls(n, -1);
  Quotient q;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    cls[a] = static_cast<int>(q.classes.size());
    q.classes.push_back({a});
    for (int b = a + 1; b < n; ++b)
      if (cls[b] < 0 && le[a][b] && le[b][a]) {
        cls[b] = cls[a];
        q.classes.back().push_back(b);
      }
  }
  int k = static_cast<int>(q.classes.size());
  std::vector<std::string> names(k);
  OrderMatrix m(k, std::vector<char>(k, 0));
  for (int x = 0; x < k; ++x) {
    for (std::size_t i = 0; i < q.classes[x].size(); ++i) names[x] += (i ? "=" : "") + labels[q.classes[x][i]];
    for (int y = 0; y < k; ++y) m[x][y] = le[q.classes[x][0]][q.classes[y][0]];
  }
  q.poset = FinitePoset(std::move(names), std::move(m));
  return q;
}

OrderMatrix closure(int n, const std::vector<std::pair<int, int>>& pairs) {
  OrderMatrix le(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) le[a][a] = 1;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("order pair out of range");
    le[a][b] = 1;
  }
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      if (le[a][c])
        for (int b = 0; b < n; ++b)
          if (le[c][b]) le[a][b] = 1;
  return le;
}

Quotient parse_poset(const std::string& text) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw InvalidInput("line " + std::to_string(line_no) + ": unknown element '" + s + "'");
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string key;
    if (!(words >> key) || key[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    if (key == "elem" && args.size() == 1) {
      if (!pairs.empty()) throw InvalidInput("line " + std::to_string(line_no) + ": elem after le");
      if (!index.emplace(args[0], static_cast<int>(labels.size())).second)
        throw InvalidInput("line " + std::to_string(line_no) + ": duplicate element '" + args[0] + "'");
      labels.push_back(args[0]);
    } else if (key == "le" && args.size() == 2) {
      pairs.emplace_back(lookup(args[0]), lookup(args[1]));
    } else {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected 'elem <label>' or 'le <a> <b>'");
    }
  }
  return quotient(labels, closure(static_cast<int>(labels.size()), pairs));
}

std::string to_text(const FinitePoset& p) {
  std::ostringstream out;
  for (const auto& l : p.labels()) out << "elem " << l << "\n";
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.le(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && p.le(a, c) && p.le(c, b)) cover = false;
      if (cover) out << "le " << p.label(a) << " " << p.label(b) << "\n";
    }
  return out.str();
}

bool is_antichain(const FinitePoset& p, const std::vector<int>& elements) {
  for (std::size_t x = 0; x < elements.size(); ++x)
    for (std::size_t y = x + 1; y < elements.size(); ++y)
      if (elements[x] == elements[y] || p.comparable(elements[x], elements[y])) return false;
  return true;
}

bool is_chain(const FinitePoset& p, const std::vector<int>& elements) {
  for (std::size_t x = 0; x < elements.size(); ++x)
    for (std::size_t y = x + 1; y < elements.size(); ++y)
      if (!p.comparable(elements[x], elements[y])) return false;
  return true;
}

std::vector<int> maximum_antichain_by_search(const FinitePoset& p, bool parallel) {
  int n = p.size();
  if (n > 64) throw BudgetExceeded("antichain search is limited to 64 elements");
  if (n == 0) return {};
  std::vector<Mask> adj(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !p.comparable(a, b)) adj[a] |= Mask{1} << b;
  // Branch v holds the antichains whose smallest element is v.
  std::vector<Mask> best(n, 0);
  std::vector<int> best_size(n, 0);
  parallel_for(n, parallel, [&](long long v) {
    Mask later = v + 1 >= 64 ? 0 : ~Mask{0} << (v + 1);
    grow_clique(adj, Mask{1} << v, 1, adj[v] & later, best[v], best_size[v]);
  });
  int pick = static_cast<int>(std::max_element(best_size.begin(), best_size.end()) - best_size.begin());
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (best[pick] >> v & 1) out.push_back(v);
  return out;
}

std::vector<int> maximum_antichain_by_matching(const FinitePoset& p) {
  int n = p.size();
  auto match_right = strict_order_matching(p);
  std::vector<int> match_left(n, -1);
  for (int b = 0; b < n; ++b)
    if (match_right[b] >= 0) match_left[match_right[b]] = b;
  // Alternating reachability from unmatched left vertices.
  std::vector<char> left_seen(n, 0), right_seen(n, 0);
  std::vector<int> stack;
  for (int a = 0; a < n; ++a)
    if (match_left[a] < 0) {
      left_seen[a] = 1;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.le(a, b) || right_seen[b] || match_left[a] == b) continue;
      right_seen[b] = 1;
      int next = match_right[b];
      if (next >= 0 && !left_seen[next]) {
        left_seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (left_seen[x] && !right_seen[x]) out.push_back(x);
  return out;
}

std::vector<int> maximum_antichain(const FinitePoset& p, bool parallel) {
  return p.size() <= 25 ? maximum_antichain_by_search(p, parallel) : maximum_antichain_by_matching(p);
}

int poset_width(const FinitePoset& p, bool parallel) { return static_cast<int>(maximum_antichain(p, parallel).size()); }

std::vector<std::vector<int>> chain_partition(const FinitePoset& p) {
  int n = p.size();
  auto match_right = strict_order_matching(p);
  std::vector<int> next(n, -1);
  for (int b = 0; b < n; ++b)
    if (match_right[b] >= 0) next[match_right[b]] = b;
  std::vector<std::vector<int>> chains;
  for (int x = 0; x < n; ++x) {
    if (match_right[x] >= 0) continue;
    chains.emplace_back();
    for (int y = x; y >= 0; y = next[y]) chains.back().push_back(y);
  }
  return chains;
}

bool rado_order(const RadoElement& a, const RadoElement& b) { return (a.i == b.i && a.j <= b.j) || a.j < b.i; }

std::vector<RadoElement> rado_elements(int n) {
  std::vector<RadoElement> out;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) out.push_back({i, j});
  return out;
}

FinitePoset rado_truncation(int n) {
  if (n < 2) throw InvalidInput("Rado truncation needs n >= 2");
  auto elems = rado_elements(n);
  std::size_t k = elems.size();
  std::vector<std::string> labels;
  OrderMatrix le(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back("(" + std::to_string(elems[a].i) + "," + std::to_string(elems[a].j) + ")");
    for (std::size_t b = 0; b < k; ++b) le[a][b] = rado_order(elems[a], elems[b]);
  }
  return FinitePoset(std::move(labels), std::move(le));
}

bool rado_star_le(const std::vector<RadoElement>& a, const std::vector<RadoElement>& b) {
  return std::all_of(b.begin(), b.end(), [&](const RadoElement& y) {
    return std::any_of(a.begin(), a.end(), [&](const RadoElement& x) { return rado_order(x, y); });
  });
}

RadoFamilyReport rado_family_report(const std::vector<std::vector<RadoElement>>& family) {
  RadoFamilyReport report;
  int m = static_cast<int>(family.size());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && rado_star_le(family[x], family[y])) report.comparable.emplace_back(x, y);
  report.antichain = report.comparable.empty();
  return report;
}

std::vector<std::vector<RadoElement>> rado_row_family(int m, int n) {
  if (m < 1 || m >= n) throw InvalidInput("row family needs 1 <= m < n");
  std::vector<std::vector<RadoElement>> out;
  for (int i = 1; i <= m; ++i) {
    out.emplace_back();
    for (int j = i + 1; j <= n; ++j) out.back().push_back({i, j});
  }
  return out;
}

std::vector<std::vector<RadoElement>> rado_column_family(int m, int n) {
  if (m < 1 || m > n) throw InvalidInput("column family needs 1 <= m <= n");
  std::vector<std::vector<RadoElement>> out;
  for (int i = n - m + 1; i <= n; ++i) {
    out.emplace_back();
    for (int j = 0; j < i; ++j) out.back().push_back({j, i});
  }
  return out;
}

bool rado_star_antichain_witness(int m, int n) { return rado_family_report(rado_row_family(m, n)).antichain; }

Quotient sequence_order(const std::vector<MultiGraph>& prefix, Relation relation, const ContainmentOptions& options) {
  int n = static_cast<int>(prefix.size());
  std::vector<std::string> labels;
  OrderMatrix le(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) labels.push_back("H" + std::to_string(a));
  parallel_for(static_cast<long long>(n) * n, options.parallel, [&](long long idx) {
    int a = static_cast<int>(idx / n), b = static_cast<int>(idx % n);
    ContainmentOptions inner = options;
    inner.parallel = false;
    le[a][b] = a == b || contains(relation, prefix[a], prefix[b], inner);
  });
  return quotient(labels, le);
}

int sequence_width(const std::vector<MultiGraph>& prefix, Relation relation, const ContainmentOptions& options) {
  return poset_width(sequence_order(prefix, relation, options).poset, options.parallel);
}

Rationalization rationalize(const std::vector<MultiGraph>& prefix, Relation relation,
                            const ContainmentOptions& options) {
  auto q = sequence_order(prefix, relation, options);
  const auto& p = q.poset;
  Rationalization out;
  auto chains = chain_partition(p);
  out.width = static_cast<int>(chains.size());
  int n = static_cast<int>(prefix.size());
  int final_quarter = n - (n + 3) / 4;
  for (const auto& chain : chains) {
    RationalChain rc;
    for (int c : chain)
      for (int idx : q.classes[c]) rc.indices.push_back(idx);
    rc.growing = !rc.indices.empty() && *std::max_element(rc.indices.begin(), rc.indices.end()) >= final_quarter;
    out.chains.push_back(rc);
  }
  // x below y: every member of chain x lies under some member of chain y.
  auto below = [&](std::size_t x, std::size_t y) {
    return std::all_of(chains[x].begin(), chains[x].end(), [&](int a) {
      return std::any_of(chains[y].begin(), chains[y].end(), [&](int b) { return p.le(a, b); });
    });
  };
  for (std::size_t x = 0; x < chains.size(); ++x) {
    if (!out.chains[x].growing) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < chains.size() && minimal; ++y)
      if (y != x && out.chains[y].growing && below(y, x) && !below(x, y)) minimal = false;
    out.chains[x].minimal_growing = minimal;
  }
  return out;
}

}  // namespace uobs
