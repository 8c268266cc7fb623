#include "uobs/obstructions.hpp"

#include <algorithm>
#include <unordered_map>

#include "uobs/canonical.hpp"
#include "uobs/classes.hpp"
#include "uobs/error.hpp"
#include "uobs/parallel.hpp"

namespace uobs {

namespace {

ObstructionReport scan(const NamedClass& cls, const ObstructionOptions& options, bool parallel) {
  ObstructionReport report;
  report.class_name = cls.name;
  report.relation = cls.relation;
  report.mode = cls.mode;
  report.n_max = options.n_max;
  report.mult_max = cls.mode == GraphMode::Simple ? 1 : options.mult_max;
  if (cls.mode == GraphMode::Simple && options.mult_max > 1)
    report.note = "simple-mode class: universe restricted to simple graphs. ";

  EnumerationOptions eopt;
  eopt.budget = options.budget;
  eopt.parallel = parallel;
  auto universe = enumerate_graphs(report.n_max, report.mult_max, {}, eopt);
  const long long count = static_cast<long long>(universe.size());
  report.universe_size = universe.size();

  std::vector<char> member(universe.size(), 0);
  std::vector<CanonicalForm> forms(universe.size());
  parallel_for(count, parallel, [&](long long i) {
    member[i] = cls.member(universe[i]) ? 1 : 0;
    forms[i] = canonical_form(universe[i]);
  });
  std::unordered_map<CanonicalForm, char, CanonicalForm_hash> known;
  for (std::size_t i = 0; i < universe.size(); ++i) known.emplace(forms[i], member[i]);
  // Lifting may raise a multiplicity past the universe cap; such reductions
  // are tested directly.
  auto is_member = [&](const MultiGraph& r) {
    auto it = known.find(canonical_form(r));
    return it != known.end() ? it->second != 0 : cls.member(r);
  };

  std::vector<char> minimal(universe.size(), 0);
  std::vector<std::string> violation(universe.size());
  parallel_for(count, parallel, [&](long long i) {
    auto reductions = single_step_reductions(cls.relation, universe[i], cls.mode);
    if (member[i]) {
      if (!options.check_closure) return;
      for (const auto& r : reductions)
        if (!is_member(r)) {
          violation[i] = "member " + describe(universe[i]) + " has non-member reduction " + describe(r);
          return;
        }
      return;
    }
    minimal[i] = std::all_of(reductions.begin(), reductions.end(), is_member) ? 1 : 0;
  });
  for (const auto& v : violation)
    if (!v.empty()) throw NotClosed("class " + cls.name + " is not closed under " + to_string(cls.relation) + ": " + v);

  for (std::size_t i = 0; i < universe.size(); ++i) {
    report.members += member[i];
    if (minimal[i]) report.obstructions.insert(universe[i]);
  }
  ContainmentOptions copt;
  copt.mode = cls.mode;
  copt.parallel = parallel;
  report.antichain = is_antichain(cls.relation, report.obstructions, copt);
  report.note += "complete for graphs with at most " + std::to_string(report.n_max) +
                 " vertices and multiplicity at most " + std::to_string(report.mult_max) +
                 "; larger obstructions are not searched";
  return report;
}

}  // namespace

const std::vector<NamedClass>& builtin_classes() {
  static const std::vector<NamedClass> classes = {
      {"forests", Relation::Minor, GraphMode::Simple, is_forest},
      {"linear_forests", Relation::Minor, GraphMode::Simple, is_linear_forest},
      {"outerplanar", Relation::Minor, GraphMode::Simple, is_outerplanar},
      {"planar", Relation::Minor, GraphMode::Simple, is_planar},
      {"apex_forest", Relation::Minor, GraphMode::Simple, is_apex_forest},
      {"subcubic_forest", Relation::Immersion, GraphMode::Multigraph, is_subcubic_forest},
      {"star_or_edgeless", Relation::Immersion, GraphMode::Multigraph, is_star_or_edgeless},
      {"theta_like", Relation::Immersion, GraphMode::Multigraph, is_theta_like},
  };
  return classes;
}

const NamedClass& find_builtin_class(const std::string& name) {
  for (const auto& c : builtin_classes())
    if (c.name == name) return c;
  throw InvalidInput("unknown class '" + name + "'");
}

NamedClass parameter_class(const Parameter& p, int k) {
  NamedClass c;
  c.name = p.name() + "<=" + std::to_string(k);
  c.relation = p.monotone_under();
  c.mode = default_mode(c.relation);
  c.member = [p, k](const MultiGraph& g) { return parameter_at_most(p, k, g); };
  return c;
}

NamedClass class_from_spec(const ClassSpec& spec, const std::string& name) {
  NamedClass c;
  c.name = name;
  c.relation = spec.relation;
  c.mode = spec.mode;
  c.member = [spec](const MultiGraph& g) { return spec.member(g); };
  return c;
}

ObstructionReport compute_obstructions(const NamedClass& cls, const ObstructionOptions& options) {
  return scan(cls, options, options.parallel);
}

ObstructionReport compute_obstructions_serial(const NamedClass& cls, const ObstructionOptions& options) {
  return scan(cls, options, false);
}

GraphSet obstructions_by_pairwise_minimality(const NamedClass& cls, const ObstructionOptions& options) {
  int mult = cls.mode == GraphMode::Simple ? 1 : options.mult_max;
  EnumerationOptions eopt;
  eopt.budget = options.budget;
  eopt.parallel = options.parallel;
  GraphSet outside;
  for (const auto& g : enumerate_graphs(options.n_max, mult, {}, eopt))
    if (!cls.member(g)) outside.insert(g);
  ContainmentOptions copt;
  copt.mode = cls.mode;
  copt.parallel = options.parallel;
  return min_elements(cls.relation, outside, copt);
}

ObstructionChain obstruction_chain(const Parameter& p, int length, const ObstructionOptions& options) {
  if (length < 1) throw InvalidInput("obstruction chain length must be at least 1");
  Relation rel = p.monotone_under();
  std::vector<std::vector<MultiGraph>> levels;
  for (int i = 1; i <= length; ++i) levels.push_back(compute_obstructions(parameter_class(p, i), options).obstructions.graphs());
  ObstructionChain chain;
  auto extend = [&](auto&& self, int level) -> bool {
    if (level == length) return true;
    for (const auto& c : levels[level]) {
      if (level > 0 && !contains(rel, chain.graphs.back(), c)) continue;
      chain.graphs.push_back(c);
      chain.levels.push_back(level + 1);
      if (self(self, level + 1)) return true;
      chain.graphs.pop_back();
      chain.levels.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0))
    throw BudgetExceeded("no obstruction chain of length " + std::to_string(length) + " for " + p.name() +
                         " within n <= " + std::to_string(options.n_max));
  return chain;
}

SampleReport universal_sample_check(const Parameter& p, const std::vector<ParametricFamily>& families, int k_max,
                                    int prefix_length, const ObstructionOptions& options) {
  SampleReport report;
  report.parameter = p.name();
  report.relation = p.monotone_under();
  for (int k = 1; k <= k_max; ++k) {
    SampleRow row;
    row.k = k;
    auto obs = compute_obstructions(parameter_class(p, k), options).obstructions.graphs();
    row.obstruction_count = obs.size();
    for (const auto& u : obs)
      for (const auto& f : families)
        for (int i = f.base_index; i < f.base_index + prefix_length; ++i) {
          if (row.found && i >= row.index) break;
          if (!contains(report.relation, u, f.at(i))) continue;
          row.found = true;
          row.sample = u;
          row.family = f.name;
          row.index = i;
          break;
        }
    report.rows.push_back(row);
  }
  bool all = std::all_of(report.rows.begin(), report.rows.end(), [](const SampleRow& r) { return r.found; });
  report.note = all ? "every level has an obstruction inside a family member"
                    : "some levels have no obstruction inside the tested prefixes; compare the parameters with a "
                      "gap report instead";
  return report;
}

}  // namespace uobs
