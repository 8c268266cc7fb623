#include "uobs/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "uobs/canonical.hpp"
#include "uobs/enumerate.hpp"
#include "uobs/error.hpp"
#include "uobs/graph_io.hpp"

namespace uobs {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

int tree_size(int k) { return 1 + 3 * ((1 << k) - 1); }

}  // namespace

MultiGraph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return MultiGraph(n);
}

MultiGraph path_graph(int n) {
  require(n >= 0, "path needs n >= 0");
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_multiplicity(i, i + 1, 1);
  return g;
}

MultiGraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  MultiGraph g = path_graph(n);
  g.set_multiplicity(0, n - 1, 1);
  return g;
}

MultiGraph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_multiplicity(i, j, 1);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "complete bipartite graph needs non-negative sides");
  MultiGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.set_multiplicity(i, a + j, 1);
  return g;
}

MultiGraph star(int k) {
  require(k >= 0, "star needs k >= 0");
  return complete_bipartite(1, k);
}

MultiGraph theta(int k) {
  require(k >= 1, "theta needs k >= 1");
  return MultiGraph::from_edges(2, {{0, 1, k}});
}

MultiGraph grid(int k) {
  require(k >= 1, "grid needs k >= 1");
  MultiGraph g(k * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) g.set_multiplicity(r * k + c, r * k + c + 1, 1);
      if (r + 1 < k) g.set_multiplicity(r * k + c, (r + 1) * k + c, 1);
    }
  return g;
}

MultiGraph ternary_tree(int k) {
  require(k >= 1, "ternary tree needs k >= 1");
  require(k <= 12, "ternary tree depth too large");
  MultiGraph g(tree_size(k));
  int next = 1;
  int level_start = 0;
  int level_size = 1;
  for (int depth = 0; depth < k; ++depth) {
    int children = depth == 0 ? 3 : 2;
    for (int p = level_start; p < level_start + level_size; ++p)
      for (int c = 0; c < children; ++c) g.set_multiplicity(p, next++, 1);
    level_start += level_size;
    level_size *= children;
  }
  return g;
}

MultiGraph ternary_tree_apex(int k) {
  require(k >= 2, "apex ternary tree needs k >= 2");
  MultiGraph g = ternary_tree(k);
  int leaves = 3 << (k - 1);
  int first_leaf = g.vertex_count() - leaves;
  int apex = g.add_vertex();
  for (int l = first_leaf; l < apex; ++l) g.set_multiplicity(l, apex, 1);
  return g;
}

MultiGraph ternary_tree_apex_dual(int k) {
  require(k >= 2, "dual of the apex ternary tree needs k >= 2");
  MultiGraph primal = ternary_tree_apex(k);
  const int n = primal.vertex_count();
  const int apex = n - 1;
  const int leaves = 3 << (k - 1);
  const int first_leaf = apex - leaves;

  // Clockwise rotation at every vertex for the drawing with the root on top,
  // children left to right below their parent and the apex under the leaves.
  std::vector<std::vector<int>> rot(n);
  std::vector<int> parent(n, -1);
  std::vector<std::vector<int>> children(n);
  for (int v = 1; v < apex; ++v)
    for (int p = 0; p < v; ++p)
      if (primal.adjacent(p, v)) {
        parent[v] = p;
        children[p].push_back(v);
        break;
      }
  for (int v = 0; v < apex; ++v) {
    if (parent[v] >= 0) rot[v].push_back(parent[v]);
    if (children[v].empty()) {
      rot[v].push_back(apex);
    } else {
      for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) rot[v].push_back(*it);
    }
  }
  for (int l = first_leaf; l < apex; ++l) rot[apex].push_back(l);

  auto successor = [&](int v, int u) {
    const auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), u);
    ++it;
    return it == r.end() ? r.front() : *it;
  };

  // Trace faces: dart (u, v) is followed by (v, successor of u around v).
  std::map<std::pair<int, int>, int> face_of;
  int faces = 0;
  auto trace = [&](int u, int v) {
    if (face_of.count({u, v})) return;
    int id = faces++;
    int a = u;
    int b = v;
    while (!face_of.count({a, b})) {
      face_of[{a, b}] = id;
      int c = successor(b, a);
      a = b;
      b = c;
    }
  };
  for (int l = first_leaf; l < apex; ++l) trace(apex, l);
  for (const auto& e : primal.edges()) {
    trace(e.u, e.v);
    trace(e.v, e.u);
  }
  const int edges = primal.edge_count();
  if (n - edges + faces != 2) throw InternalError("rotation system of the apex ternary tree is not planar");

  MultiGraph dual(faces);
  for (const auto& e : primal.edges()) {
    int f = face_of.at({e.u, e.v});
    int g = face_of.at({e.v, e.u});
    if (f == g) throw InternalError("dual of the apex ternary tree has a loop");
    dual.set_multiplicity(f, g, dual.multiplicity(f, g) + 1);
  }
  for (const auto& e : dual.edges())
    for (int extra = 1; extra < e.mult; ++extra) dual = subdivide_edge(dual, e.u, e.v);
  return dual;
}

MultiGraph ParametricFamily::at(int k) const {
  if (k < base_index)
    throw InvalidInput("family " + name + " starts at index " + std::to_string(base_index));
  return generator(k);
}

std::vector<MultiGraph> ParametricFamily::prefix(int count) const {
  std::vector<MultiGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(at(base_index + i));
  return out;
}

const std::vector<ParametricFamily>& family_registry() {
  static const std::vector<ParametricFamily> registry = {
      {"grid", 1, Relation::Minor, grid},
      {"ternary_tree", 1, Relation::Minor, ternary_tree},
      {"ternary_tree_apex", 2, Relation::Minor, ternary_tree_apex},
      {"ternary_tree_apex_dual", 2, Relation::Minor, ternary_tree_apex_dual},
      {"theta", 1, Relation::Immersion, theta},
      {"star", 1, Relation::Immersion, star},
      {"path", 1, Relation::Minor, path_graph},
      {"complete", 1, Relation::Minor, complete_graph},
      {"cycle", 3, Relation::Minor, cycle_graph},
  };
  return registry;
}

const ParametricFamily& find_family(const std::string& name) {
  for (const auto& f : family_registry())
    if (f.name == name) return f;
  throw InvalidInput("unknown family '" + name + "'");
}

ParametricFamily copies_family(const MultiGraph& z, const std::string& name) {
  return {name, 1, Relation::Minor, [z](int k) { return copies(z, k); }};
}

bool ClassSpec::member(const MultiGraph& g, const ContainmentOptions& options) const {
  ContainmentOptions o = options;
  o.mode = mode;
  for (const auto& [key, h] : obstructions)
    if (contains(relation, h, g, o)) return false;
  return true;
}

std::string ClassSpec::key() const {
  std::string k = to_string(relation) + "|" + to_string(mode) + "|" + std::to_string(mult_cap);
  for (const auto& [key, g] : obstructions) k += "|" + key.form.hex();
  return k;
}

ClassSpec parse_class_spec(const std::string& text) {
  ClassSpec spec;
  std::istringstream in(text);
  std::string line;
  std::string body;
  bool have_relation = false;
  bool have_mode = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (!have_relation && word == "relation") {
      std::string name;
      ls >> name;
      spec.relation = parse_relation(name);
      have_relation = true;
      continue;
    }
    if (!have_mode && word == "mode") {
      std::string name;
      ls >> name;
      if (name == "simple") {
        spec.mode = GraphMode::Simple;
        spec.mult_cap = 1;
      } else if (name == "multigraph") {
        spec.mode = GraphMode::Multigraph;
        if (!(ls >> spec.mult_cap) || spec.mult_cap < 1) throw InvalidInput("mode multigraph needs a cap >= 1");
      } else {
        throw InvalidInput("unknown mode '" + name + "'");
      }
      have_mode = true;
      continue;
    }
    body += line + "\n";
  }
  if (!have_relation) throw InvalidInput("class spec needs a 'relation' line");
  if (!have_mode) spec.mode = default_mode(spec.relation);
  for (const auto& g : parse_text_list(body)) spec.obstructions.insert(g);
  return spec;
}

std::string to_text(const ClassSpec& spec) {
  std::ostringstream os;
  os << "relation " << to_string(spec.relation) << "\n";
  if (spec.mode == GraphMode::Simple)
    os << "mode simple\n";
  else
    os << "mode multigraph " << spec.mult_cap << "\n";
  for (const auto& [key, g] : spec.obstructions) os << "\n" << to_text(g);
  return os.str();
}

MultiGraph omnivore_step(const ClassSpec& cls, int k, const std::optional<MultiGraph>& prev,
                         const OmnivoreOptions& options) {
  if (k < 1) throw InvalidInput("omnivore step needs k >= 1");
  static std::mutex memo_lock;
  static std::map<std::string, MultiGraph> memo;
  std::string memo_key = cls.key() + "#" + std::to_string(k) + "#" + (prev ? canonical_form(*prev).hex() : "-");
  {
    std::lock_guard<std::mutex> guard(memo_lock);
    auto it = memo.find(memo_key);
    if (it != memo.end()) return it->second;
  }

  ContainmentOptions copt = options.containment;
  copt.mode = cls.mode;
  auto member = [&](const MultiGraph& g) { return cls.member(g, copt); };
  EnumerationOptions eopt;
  eopt.predicate_hereditary = true;
  eopt.budget.max_vertices_simple = std::max(eopt.budget.max_vertices_simple, options.max_vertices);
  eopt.budget.max_vertices_multi = std::max(eopt.budget.max_vertices_multi, options.max_vertices);
  if (k > options.max_vertices) throw BudgetExceeded("omnivore step: k exceeds the candidate size bound");

  // Only the maximal small members need to be checked against a candidate.
  auto small = enumerate_graphs(k, cls.mult_cap, member, eopt);
  std::vector<MultiGraph> required;
  for (std::size_t i = 0; i < small.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < small.size() && !dominated; ++j)
      dominated = j != i && small[j].vertex_count() >= small[i].vertex_count() &&
                  contains(cls.relation, small[i], small[j], copt);
    if (!dominated) required.push_back(small[i]);
  }
  if (prev) required.push_back(*prev);

  int lower = 0;
  for (const auto& r : required) lower = std::max(lower, r.vertex_count());
  for (int n = lower; n <= options.max_vertices; ++n) {
    for (const auto& cand : enumerate_graphs(n, cls.mult_cap, member, eopt)) {
      if (cand.vertex_count() != n) continue;
      bool ok = std::all_of(required.begin(), required.end(),
                            [&](const MultiGraph& r) { return contains(cls.relation, r, cand, copt); });
      if (!ok) continue;
      std::lock_guard<std::mutex> guard(memo_lock);
      memo.emplace(memo_key, cand);
      return cand;
    }
  }
  throw BudgetExceeded("omnivore step: no witness with at most " + std::to_string(options.max_vertices) +
                       " vertices (frontier n=" + std::to_string(options.max_vertices) + ")");
}

}  // namespace uobs
