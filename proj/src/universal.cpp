#include "uobs/universal.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "uobs/canonical.hpp"
#include "uobs/classes.hpp"
#include "uobs/error.hpp"
#include "uobs/graph_set.hpp"
#include "uobs/parallel.hpp"

namespace uobs {

namespace {

int size_of(const MultiGraph& g) { return g.vertex_count() + g.edge_count(); }

ContainmentOptions with_mode(Relation rel, const ContainmentOptions& options) {
  ContainmentOptions o = options;
  if (!o.mode) o.mode = default_mode(rel);
  return o;
}

// Members from the base index up to (excluding) the first one larger than g.
std::vector<MultiGraph> members_up_to(const ParametricFamily& f, const MultiGraph& g) {
  std::vector<MultiGraph> out;
  int prev = -1;
  for (int k = f.base_index;; ++k) {
    auto h = f.at(k);
    int s = size_of(h);
    if (s <= prev) throw InvalidInput("family " + f.name + " does not grow strictly at index " + std::to_string(k));
    prev = s;
    if (s > size_of(g)) return out;
    out.push_back(std::move(h));
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

long long parse_integer(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("expected an integer, got '" + s + "'");
  }
}

}  // namespace

int PrimeCollection::min_base_index() const {
  if (families.empty()) throw InvalidInput("collection " + name + " has no families");
  int b = families.front().base_index;
  for (const auto& f : families) b = std::min(b, f.base_index);
  return b;
}

CollectionCheck check_collection(const PrimeCollection& coll, const ContainmentOptions& options) {
  CollectionCheck check;
  auto copt = with_mode(coll.relation, options);
  if (coll.families.empty()) {
    check.growing = false;
    check.problems.push_back("no families");
    return check;
  }
  std::vector<std::vector<MultiGraph>> prefixes;
  for (const auto& f : coll.families) prefixes.push_back(f.prefix(coll.prefix_length));
  for (std::size_t a = 0; a < prefixes.size(); ++a) {
    const auto& p = prefixes[a];
    const auto& name = coll.families[a].name;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (size_of(p[i]) >= size_of(p[i + 1])) {
        check.growing = false;
        check.problems.push_back(name + " does not grow at index " + std::to_string(coll.families[a].base_index + i + 1));
      }
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (!contains(coll.relation, p[i], p[j], copt)) {
          check.prime = false;
          check.problems.push_back(name + ": member " + std::to_string(coll.families[a].base_index + i) +
                                   " is not contained in member " + std::to_string(coll.families[a].base_index + j));
        }
  }
  // Prefixes are chains, so a member avoiding the last member of the other
  // prefix avoids all of it.
  for (std::size_t a = 0; a < prefixes.size(); ++a)
    for (std::size_t b = 0; b < prefixes.size(); ++b) {
      if (a == b) continue;
      bool witness = false;
      for (const auto& h : prefixes[a]) {
        bool inside = false;
        for (const auto& f : prefixes[b])
          if (contains(coll.relation, h, f, copt)) {
            inside = true;
            break;
          }
        if (!inside) {
          witness = true;
          break;
        }
      }
      if (!witness) {
        check.incomparable = false;
        check.problems.push_back("every tested member of " + coll.families[a].name + " lies in a member of " +
                                 coll.families[b].name);
      }
    }
  return check;
}

const std::vector<PrimeCollection>& shipped_collections() {
  static const std::vector<PrimeCollection> collections = [] {
    auto f = [](const char* name) { return find_family(name); };
    return std::vector<PrimeCollection>{
        {"grid", Relation::Minor, {f("grid")}, 5},
        {"ternary", Relation::Minor, {f("ternary_tree")}, 5},
        {"apex_trees", Relation::Minor, {f("ternary_tree_apex"), f("ternary_tree_apex_dual")}, 4},
        {"theta_star", Relation::Immersion, {f("theta"), f("star")}, 5},
        {"theta_star_tree", Relation::Immersion, {f("theta"), f("star"), f("ternary_tree")}, 4},
    };
  }();
  return collections;
}

const PrimeCollection& find_collection(const std::string& name) {
  for (const auto& c : shipped_collections())
    if (c.name == name) return c;
  throw InvalidInput("unknown collection '" + name + "'");
}

PrimeCollection parse_collection(const std::string& text) {
  PrimeCollection coll;
  coll.name = "custom";
  bool have_relation = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string key, value, extra;
    if (!(words >> key) || key[0] == '#') continue;
    if (!(words >> value) || (words >> extra)) throw InvalidInput("collection line '" + line + "' needs one value");
    if (key == "collection") return find_collection(value);
    if (key == "name") {
      coll.name = value;
    } else if (key == "relation") {
      coll.relation = parse_relation(value);
      have_relation = true;
    } else if (key == "prefix") {
      coll.prefix_length = static_cast<int>(parse_integer(value));
      if (coll.prefix_length < 1) throw InvalidInput("prefix length must be positive");
    } else if (key == "family") {
      coll.families.push_back(find_family(value));
    } else {
      throw InvalidInput("unknown collection key '" + key + "'");
    }
  }
  if (!have_relation) throw InvalidInput("collection needs a relation line");
  if (coll.families.empty()) throw InvalidInput("collection needs at least one family");
  return coll;
}

std::string to_text(const PrimeCollection& coll) {
  std::ostringstream out;
  out << "name " << coll.name << "\nrelation " << to_string(coll.relation) << "\nprefix " << coll.prefix_length << "\n";
  for (const auto& f : coll.families) out << "family " << f.name << "\n";
  return out.str();
}

int p_of_sequence(const ParametricFamily& family, const MultiGraph& g, Relation relation,
                  const ContainmentOptions& options) {
  auto copt = with_mode(relation, options);
  auto members = members_up_to(family, g);
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!contains(relation, members[i], g, copt)) return family.base_index + static_cast<int>(i);
  return family.base_index + static_cast<int>(members.size());
}

int p_of_sequence(const ParametricFamily& family, const MultiGraph& g, const ContainmentOptions& options) {
  return p_of_sequence(family, g, family.relation, options);
}

int p_of_sequence_literal(const ParametricFamily& family, const MultiGraph& g, Relation relation,
                          const ContainmentOptions& options) {
  auto copt = with_mode(relation, options);
  auto members = members_up_to(family, g);
  for (std::size_t k = 0; k < members.size(); ++k) {
    GraphSet tail(std::vector<MultiGraph>(members.begin() + static_cast<long>(k), members.end()));
    bool dominated = false;
    for (const auto& m : min_elements(relation, tail, copt).graphs())
      if (contains(relation, m, g, copt)) {
        dominated = true;
        break;
      }
    if (!dominated) return family.base_index + static_cast<int>(k);
  }
  return family.base_index + static_cast<int>(members.size());
}

CollectionValue evaluate_collection(const PrimeCollection& coll, const MultiGraph& g,
                                    const ContainmentOptions& options) {
  auto copt = with_mode(coll.relation, options);
  CollectionValue out;
  out.max_form = coll.min_base_index();
  for (const auto& f : coll.families) {
    out.per_family.push_back(p_of_sequence(f, g, coll.relation, copt));
    out.max_form = std::max(out.max_form, out.per_family.back());
  }

  std::vector<std::vector<MultiGraph>> members;
  for (const auto& f : coll.families) members.push_back(members_up_to(f, g));
  auto member_inside = [&](std::size_t i, int k) {
    const auto& f = coll.families[i];
    if (k < f.base_index) return true;
    std::size_t idx = static_cast<std::size_t>(k - f.base_index);
    return idx < members[i].size() && contains(coll.relation, members[i][idx], g, copt);
  };
  for (int k = coll.min_base_index();; ++k) {
    bool any = false;
    for (std::size_t i = 0; i < coll.families.size() && !any; ++i) any = member_inside(i, k);
    if (!any) {
      out.min_form = k;
      break;
    }
  }
  if (out.max_form != out.min_form)
    throw InternalError("collection " + coll.name + " on " + describe(g) + ": maximum form " +
                        std::to_string(out.max_form) + " differs from minimum form " + std::to_string(out.min_form));
  out.value = out.max_form;
  return out;
}

int p_of_collection(const PrimeCollection& coll, const MultiGraph& g, const ContainmentOptions& options) {
  return evaluate_collection(coll, g, options).value;
}

GapFunction GapFunction::identity() { return {}; }

GapFunction GapFunction::linear(long long a, long long b) {
  if (a < 0) throw InvalidInput("linear gap needs a non-negative slope");
  GapFunction f;
  f.kind = Kind::Linear;
  f.a = a;
  f.b = b;
  return f;
}

GapFunction GapFunction::polynomial(int c, long long a, long long b) {
  if (c < 0 || a < 0) throw InvalidInput("polynomial gap needs non-negative exponent and coefficient");
  GapFunction f;
  f.kind = Kind::Polynomial;
  f.a = a;
  f.b = b;
  f.c = c;
  return f;
}

GapFunction GapFunction::tabulated(std::vector<int> table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0) throw InvalidInput("tabulated gap values must be non-negative");
    if (i > 0 && table[i] < table[i - 1]) throw InvalidInput("tabulated gap is not monotone");
  }
  GapFunction f;
  f.kind = Kind::Tabulated;
  f.table = std::move(table);
  return f;
}

bool GapFunction::defined_at(int k) const {
  return k >= 0 && (kind != Kind::Tabulated || k < static_cast<int>(table.size()));
}

int GapFunction::operator()(int k) const {
  if (!defined_at(k)) throw InvalidInput("gap " + to_string() + " is undefined at " + std::to_string(k));
  long long v = 0;
  switch (kind) {
    case Kind::Identity:
      v = k;
      break;
    case Kind::Linear:
      v = a * k + b;
      break;
    case Kind::Polynomial: {
      long long p = 1;
      for (int i = 0; i < c; ++i) {
        p *= k;
        if (p > (1LL << 31)) throw BudgetExceeded("gap value overflows");
      }
      v = a * p + b;
      break;
    }
    case Kind::Tabulated:
      v = table[static_cast<std::size_t>(k)];
      break;
  }
  if (v < 0 || v > (1LL << 31) - 1) throw BudgetExceeded("gap value out of range at " + std::to_string(k));
  return static_cast<int>(v);
}

std::string GapFunction::to_string() const {
  switch (kind) {
    case Kind::Identity:
      return "identity";
    case Kind::Linear:
      return "linear:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Polynomial:
      return "poly:" + std::to_string(c) + "," + std::to_string(a) + "," + std::to_string(b);
    case Kind::Tabulated: {
      std::string s = "table:";
      for (std::size_t i = 0; i < table.size(); ++i) s += (i ? "," : "") + std::to_string(table[i]);
      return s;
    }
  }
  return "";
}

GapFunction parse_gap(const std::string& text) {
  if (text == "identity") return GapFunction::identity();
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("unknown gap '" + text + "'");
  std::string tag = text.substr(0, colon);
  std::vector<long long> v;
  for (const auto& part : split(text.substr(colon + 1), ',')) v.push_back(parse_integer(part));
  if (tag == "linear" && v.size() == 2) return GapFunction::linear(v[0], v[1]);
  if (tag == "poly" && v.size() == 1) return GapFunction::polynomial(static_cast<int>(v[0]));
  if (tag == "poly" && v.size() == 3) return GapFunction::polynomial(static_cast<int>(v[0]), v[1], v[2]);
  if (tag == "table" && !v.empty()) {
    std::vector<int> table;
    for (auto x : v) table.push_back(static_cast<int>(x));
    return GapFunction::tabulated(std::move(table));
  }
  throw InvalidInput("malformed gap '" + text + "'");
}

std::string to_string(VerdictKind v) { return v == VerdictKind::Above ? "above" : "at_most"; }

Verdict approximate(const PrimeCollection& coll, const GapFunction& gap, const MultiGraph& g, int k,
                    const ContainmentOptions& options) {
  if (k < 0) throw InvalidInput("k must be non-negative");
  Verdict v;
  v.k = k;
  v.threshold = gap(k);
  v.p_h = p_of_collection(coll, g, options);
  if (v.p_h > v.threshold) {
    v.kind = VerdictKind::Above;
    v.bound = k;
  } else {
    v.kind = VerdictKind::AtMost;
    v.bound = gap(v.threshold);
  }
  return v;
}

const std::vector<Certificate>& shipped_certificates() {
  static const std::vector<Certificate> certs = [] {
    std::vector<Certificate> out;
    Certificate tw;
    tw.name = "tw_grid";
    tw.kind = ParameterKind::Treewidth;
    tw.collection = "grid";
    tw.gap = GapFunction::linear(1, 1);
    tw.at_most_certified = false;
    tw.domain_name = "graphs with an edge, and K0";
    tw.domain = [](const MultiGraph& g) { return g.vertex_count() == 0 || g.edge_count() > 0; };
    tw.note =
        "p_grid <= tw + 1 certifies above verdicts; the reverse direction has no linear bound. "
        "Edgeless graphs with vertices contain the 1x1 grid and have p_grid = 2 > tw + 1";
    out.push_back(tw);

    Certificate ed;
    ed.name = "ed_theta_star";
    ed.kind = ParameterKind::EdgeDegree;
    ed.collection = "theta_star";
    ed.gap = GapFunction::linear(1, 1);
    ed.domain_name = "simple graphs and graphs on at most two vertices";
    ed.domain = [](const MultiGraph& g) { return g.is_simple() || g.vertex_count() <= 2; };
    ed.note = "on the domain p_h = edge_degree + 1; a multigraph vertex with several heavy edges can exceed p_h + 1";
    out.push_back(ed);

    Certificate edg;
    edg.name = "ed_theta_star_general";
    edg.kind = ParameterKind::EdgeDegree;
    edg.collection = "theta_star";
    edg.gap = GapFunction::polynomial(2, 1, 1);
    edg.domain_name = "all graphs";
    edg.note = "a vertex with r neighbours and largest multiplicity t has degree at most r * t <= (p_h - 1)^2";
    out.push_back(edg);

    // Fitted by gap_report on tree_corpus(9).
    Certificate pw;
    pw.name = "pw_ternary";
    pw.kind = ParameterKind::Pathwidth;
    pw.collection = "ternary";
    pw.gap = GapFunction::tabulated({1, 2, 2});
    pw.domain_name = "trees with at most 9 vertices";
    pw.domain = [](const MultiGraph& g) { return g.vertex_count() <= 9 && is_forest(g) && is_connected(g); };
    pw.note = "empirical, corpus-valid only";
    out.push_back(pw);
    return out;
  }();
  return certs;
}

const Certificate& find_certificate(const std::string& name) {
  for (const auto& c : shipped_certificates())
    if (c.name == name) return c;
  throw InvalidInput("unknown certificate '" + name + "'");
}

CertifiedVerdict approximate(const Certificate& cert, const MultiGraph& g, int k, const ContainmentOptions& options) {
  CertifiedVerdict out;
  out.verdict = approximate(find_collection(cert.collection), cert.gap, g, k, options);
  out.in_domain = cert.in_domain(g);
  out.certified =
      out.in_domain && (out.verdict.kind == VerdictKind::Above ? cert.above_certified : cert.at_most_certified);
  return out;
}

GapFunction fit_gap(const std::vector<GapRow>& rows) {
  int top = 0;
  for (const auto& r : rows) top = std::max({top, r.parameter, r.p_h});
  std::vector<int> table(static_cast<std::size_t>(top) + 1);
  for (int x = 0; x <= top; ++x) table[x] = x;
  for (const auto& r : rows) {
    table[r.parameter] = std::max(table[r.parameter], r.p_h);
    table[r.p_h] = std::max(table[r.p_h], r.parameter);
  }
  for (std::size_t x = 1; x < table.size(); ++x) table[x] = std::max(table[x], table[x - 1]);
  return GapFunction::tabulated(std::move(table));
}

GapReport gap_report(const Parameter& p, const PrimeCollection& coll, const std::vector<MultiGraph>& corpus,
                     bool parallel) {
  GapReport report;
  report.parameter = p.name();
  report.collection = coll.name;
  auto graphs = GraphSet(corpus).graphs();
  report.rows.resize(graphs.size());
  ContainmentOptions copt;
  copt.parallel = false;
  parallel_for(static_cast<long long>(graphs.size()), parallel, [&](long long i) {
    auto& row = report.rows[i];
    row.graph = graphs[i];
    row.parameter = evaluate(p, graphs[i]).value;
    row.p_h = p_of_collection(coll, graphs[i], copt);
  });
  bool first = true;
  for (const auto& r : report.rows) {
    auto& e1 = report.p_h_envelope[r.parameter];
    e1 = std::max(e1, r.p_h);
    auto& e2 = report.parameter_envelope[r.p_h];
    e2 = std::max(e2, r.parameter);
    int d = r.p_h - r.parameter;
    report.min_difference = first ? d : std::min(report.min_difference, d);
    report.max_difference = first ? d : std::max(report.max_difference, d);
    first = false;
  }
  report.fitted = fit_gap(report.rows);
  return report;
}

std::vector<MultiGraph> standard_corpus() {
  std::mt19937 rng(20240531);
  std::vector<MultiGraph> out;
  for (int i = 0; i < 250; ++i) {
    int n = 1 + static_cast<int>(rng() % 7);
    MultiGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.set_multiplicity(u, v, 1);
    out.push_back(g);
  }
  for (int i = 0; i < 250; ++i) {
    int n = 1 + static_cast<int>(rng() % 5);
    MultiGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.set_multiplicity(u, v, static_cast<int>(rng() % 3));
    out.push_back(g);
  }
  return out;
}

std::vector<MultiGraph> theta_star_corpus(int k_max) {
  std::vector<MultiGraph> out;
  for (int k = 1; k <= k_max; ++k) {
    out.push_back(theta(k));
    out.push_back(star(k));
  }
  return out;
}

std::vector<MultiGraph> tree_corpus(int n_max) {
  EnumerationOptions eopt;
  eopt.budget.max_vertices_simple = std::max(eopt.budget.max_vertices_simple, n_max);
  eopt.predicate_hereditary = true;
  std::vector<MultiGraph> out;
  for (auto& g : enumerate_graphs(n_max, 1, is_forest, eopt))
    if (g.vertex_count() >= 1 && is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace uobs
