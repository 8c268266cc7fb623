#include "uobs/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "uobs/canonical.hpp"
#include "uobs/error.hpp"

namespace uobs {

namespace {

MultiGraph decode(const CanonicalForm& f) {
  int n = f.bytes[0];
  MultiGraph g(n);
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = f.bytes[pos++];
      if (m == 255) {
        m = (f.bytes[pos] << 8) | f.bytes[pos + 1];
        pos += 2;
      }
      if (m) g.set_multiplicity(i, j, m);
    }
  return g;
}

// All one-vertex extensions of `base`, canonized and deduplicated locally.
void extend(const MultiGraph& base, int mult_max, std::unordered_set<CanonicalForm, CanonicalForm_hash>& out) {
  int k = base.vertex_count();
  MultiGraph g = base;
  int w = g.add_vertex();
  std::vector<int> vec(k, 0);
  while (true) {
    out.insert(canonical_form(g));
    int i = 0;
    while (i < k && vec[i] == mult_max) {
      vec[i] = 0;
      g.set_multiplicity(i, w, 0);
      ++i;
    }
    if (i == k) break;
    ++vec[i];
    g.set_multiplicity(i, w, vec[i]);
  }
}

std::vector<MultiGraph> finish_level(const std::unordered_set<CanonicalForm, CanonicalForm_hash>& found) {
  std::vector<std::pair<int, const CanonicalForm*>> keyed;
  std::vector<MultiGraph> decoded;
  keyed.reserve(found.size());
  for (const auto& f : found) keyed.push_back({0, &f});
  for (auto& k : keyed) k.first = decode(*k.second).edge_count();
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : *a.second < *b.second;
  });
  decoded.reserve(keyed.size());
  for (const auto& k : keyed) decoded.push_back(decode(*k.second));
  return decoded;
}

std::vector<MultiGraph> run(int n_max, int mult_max, const GraphPredicate& predicate, const EnumerationOptions& options,
                            bool parallel) {
  options.budget.check(n_max, mult_max);
  std::vector<MultiGraph> output;
  if (n_max < 0) return output;
  std::vector<MultiGraph> level{MultiGraph(0)};
  for (int n = 0;; ++n) {
    std::vector<char> keep(level.size(), 1);
    if (predicate) {
      const long long count = static_cast<long long>(level.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
      for (long long i = 0; i < count; ++i) keep[i] = predicate(level[i]) ? 1 : 0;
    }
    std::vector<MultiGraph> frontier;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (keep[i]) output.push_back(level[i]);
      if (keep[i] || !options.predicate_hereditary) frontier.push_back(std::move(level[i]));
    }
    if (n == n_max) break;
    std::unordered_set<CanonicalForm, CanonicalForm_hash> found;
    const long long count = static_cast<long long>(frontier.size());
#pragma omp parallel if (parallel)
    {
      std::unordered_set<CanonicalForm, CanonicalForm_hash> local;
#pragma omp for schedule(dynamic, 4) nowait
      for (long long i = 0; i < count; ++i) extend(frontier[i], mult_max, local);
#pragma omp critical(uobs_enumerate_merge)
      found.merge(local);
    }
    level = finish_level(found);
  }
  return output;
}

}  // namespace

void EnumerationBudget::check(int n_max, int mult_max) const {
  if (mult_max < 1) throw InvalidInput("mult_max must be at least 1");
  if (mult_max > max_multiplicity)
    throw BudgetExceeded("mult_max " + std::to_string(mult_max) + " exceeds budget " + std::to_string(max_multiplicity));
  int cap = mult_max == 1 ? max_vertices_simple : max_vertices_multi;
  if (n_max > cap)
    throw BudgetExceeded("n_max " + std::to_string(n_max) + " exceeds budget " + std::to_string(cap) +
                         " for mult_max " + std::to_string(mult_max));
}

std::vector<MultiGraph> enumerate_graphs(int n_max, int mult_max, const GraphPredicate& predicate,
                                         const EnumerationOptions& options) {
  return run(n_max, mult_max, predicate, options, options.parallel);
}

std::vector<MultiGraph> enumerate_graphs_serial(int n_max, int mult_max, const GraphPredicate& predicate,
                                                const EnumerationOptions& options) {
  return run(n_max, mult_max, predicate, options, false);
}

}  // namespace uobs
