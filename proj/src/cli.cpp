#include "uobs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "uobs/canonical.hpp"
#include "uobs/enumerate.hpp"
#include "uobs/error.hpp"
#include "uobs/families.hpp"
#include "uobs/graph_io.hpp"
#include "uobs/limits.hpp"
#include "uobs/obstructions.hpp"
#include "uobs/parameters.hpp"
#include "uobs/poset.hpp"
#include "uobs/relations.hpp"
#include "uobs/universal.hpp"
#include "uobs/verify.hpp"

namespace uobs {

namespace {

using Json = nlohmann::ordered_json;

// Flag combinations CLI11 cannot express; reported like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;
  std::optional<long long> budget_ms;
  bool serial = false;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_input(const std::string& path) {
  if (path != "-") return read_file(path);
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

MultiGraph read_graph(const std::string& path) {
  if (path != "-") return load_graph(path);
  return parse_text(read_input(path));
}

std::vector<MultiGraph> read_graphs(const std::string& path) {
  auto text = read_input(path);
  if (!ends_with(path, ".g6")) return parse_text_list(text);
  std::vector<MultiGraph> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(parse_graph6(line));
  return out;
}

Json conventions() {
  Json c;
  c["bi_pathwidth_aggregation"] = "max";
  c["empty_graph_parameters"] = 0;
  c["minor_mode_default"] = to_string(default_mode(Relation::Minor));
  c["topological_minor_mode_default"] = to_string(default_mode(Relation::TopologicalMinor));
  c["subgraph_mode_default"] = to_string(default_mode(Relation::Subgraph));
  c["immersion_mode_default"] = to_string(default_mode(Relation::Immersion));
  c["graph_order"] = "vertices, edges with multiplicity, canonical bytes";
  ContainmentOptions defaults;
  c["containment_exact_zone"] = {{"max_pattern", defaults.max_pattern}, {"max_host", defaults.max_host}};
  c["containment_effort_limit"] = defaults.effort_limit;
  return c;
}

Json graph_json(const MultiGraph& g) {
  Json j;
  j["name"] = graph_name(g);
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  j["edges"] = edges;
  if (g.is_simple()) j["graph6"] = to_graph6(g);
  return j;
}

Json graphs_json(const std::vector<MultiGraph>& gs) {
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(graph_json(g));
  return a;
}

// Tabs and newlines inside cells are written as \t and \n.
std::string scalar_text(const Json& v) {
  if (v.is_string()) {
    std::string out;
    for (char c : v.get<std::string>()) {
      if (c == '\n')
        out += "\\n";
      else if (c == '\t')
        out += "\\t";
      else
        out += c;
    }
    return out;
  }
  if (v.is_null()) return "";
  return v.dump();
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_object()) return false;
  return true;
}

// Scalars become "path<TAB>value" lines; arrays of objects become tables
// introduced by a "[path]" line and a header row.
void write_tsv(const Json& j, const std::string& prefix, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      write_tsv(v, path, out);
    } else if (is_table(v)) {
      out << "[" << path << "]\n";
      std::vector<std::string> columns;
      for (const auto& row : v)
        for (auto c = row.begin(); c != row.end(); ++c)
          if (std::find(columns.begin(), columns.end(), c.key()) == columns.end()) columns.push_back(c.key());
      for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "\t" : "") << columns[c];
      out << "\n";
      for (const auto& row : v) {
        for (std::size_t c = 0; c < columns.size(); ++c)
          out << (c ? "\t" : "") << (row.contains(columns[c]) ? scalar_text(row[columns[c]]) : "");
        out << "\n";
      }
    } else if (v.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? "," : "") + scalar_text(v[i]);
      out << path << "\t" << joined << "\n";
    } else {
      out << path << "\t" << scalar_text(v) << "\n";
    }
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "tsv")
    write_tsv(j, "", out);
  else
    out << j.dump(2) << "\n";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("--format must be one of " + list + " for this command");
}

void write_graph_blocks(const std::vector<MultiGraph>& gs, const std::vector<std::string>& header, std::ostream& out) {
  for (const auto& h : header) out << "# " << h << "\n";
  for (const auto& g : gs) out << "\n# " << graph_name(g) << "\n" << to_text(g);
}

GraphMode parse_mode(const std::string& s) {
  if (s == "simple") return GraphMode::Simple;
  if (s == "multigraph" || s == "multi") return GraphMode::Multigraph;
  throw InvalidInput("unknown mode '" + s + "' (simple, multigraph)");
}

PrimeCollection load_collection(const std::string& spec) {
  for (const auto& c : shipped_collections())
    if (c.name == spec) return c;
  return parse_collection(read_input(spec));
}

Json collection_json(const PrimeCollection& c) {
  Json j;
  j["name"] = c.name;
  j["relation"] = to_string(c.relation);
  Json fams = Json::array();
  for (const auto& f : c.families) fams.push_back(f.name);
  j["families"] = fams;
  j["prefix_length"] = c.prefix_length;
  j["min_base_index"] = c.min_base_index();
  return j;
}

Parameter make_parameter(const std::string& kind, const std::string& z_file) {
  Parameter p;
  p.kind = parse_parameter_kind(kind);
  if (p.kind == ParameterKind::ZApex) {
    if (z_file.empty()) throw UsageError("z_apex needs --z with the graphs of the minor list");
    p.z_list = GraphSet(read_graphs(z_file));
  }
  return p;
}

std::vector<MultiGraph> load_corpus(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::optional<int> arg;
  if (colon != std::string::npos) {
    try {
      arg = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidInput("bad corpus size in '" + spec + "'");
    }
  }
  if (name == "standard") return standard_corpus();
  if (name == "theta_star") return theta_star_corpus(arg.value_or(8));
  if (name == "trees") return tree_corpus(arg.value_or(9));
  if (name == "graphs") return enumerate_graphs(arg.value_or(6), 1);
  return read_graphs(spec);
}

struct Command {
  CLI::App* app = nullptr;
  std::function<int(const Globals&, Json& config, std::ostream& out)> run;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph containment, obstruction sets, parameters and universal obstructions"};
  app.name("uobs");
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Output format: json (default) or tsv; text for gen and obs")
      ->check(CLI::IsMember({"json", "tsv", "text", "graph6"}));
  app.add_option("--budget-ms", globals.budget_ms,
                 "Wall-clock budget in milliseconds (default from UOBS_BUDGET_MS, else none)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--serial", globals.serial, "Run every batch loop on one thread");

  std::vector<Command> commands;

  // contain
  std::string c_rel, c_h, c_g, c_mode;
  auto* contain = app.add_subcommand("contain", "Test whether H is contained in G");
  contain->set_help_flag("--help", "Print this help message and exit");
  contain->add_option("--relation", c_rel, "subgraph, topological_minor, minor or immersion")->required();
  contain->add_option("--h", c_h, "Pattern graph file (text, or graph6 for .g6)")->required();
  contain->add_option("--g", c_g, "Host graph file")->required();
  contain->add_option("--mode", c_mode, "simple or multigraph (default depends on the relation)");
  commands.push_back({contain, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        Relation rel = parse_relation(c_rel);
                        ContainmentOptions opts;
                        opts.parallel = !gl.serial;
                        if (!c_mode.empty()) opts.mode = parse_mode(c_mode);
                        auto h = read_graph(c_h), g = read_graph(c_g);
                        config["relation"] = to_string(rel);
                        config["mode"] = to_string(opts.mode.value_or(default_mode(rel)));
                        bool result = contains(rel, h, g, opts);
                        Json j;
                        j["config"] = config;
                        j["h"] = graph_json(h);
                        j["g"] = graph_json(g);
                        j["contains"] = result;
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  // param
  std::string p_kind, p_g, p_z;
  bool p_all = false;
  int p_layout_max = ParameterBudget{}.layout_max_vertices;
  auto* param = app.add_subcommand("param", "Evaluate a graph parameter");
  auto* kind_opt = param->add_option("--kind", p_kind, "tw, pw, cw, bipw, edge_degree or z_apex");
  param->add_flag("--all-kinds", p_all, "Evaluate every kind (z_apex only with --z)")->excludes(kind_opt);
  param->add_option("--g", p_g, "Graph file")->required();
  param->add_option("--z", p_z, "Graph list file with the minor list of z_apex");
  param->add_option("--layout-max", p_layout_max, "Vertex cap of the layout dynamic programmes")
      ->check(CLI::Range(1, 26));
  commands.push_back({param, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        if (p_kind.empty() && !p_all) throw UsageError("param needs --kind or --all-kinds");
                        std::vector<std::string> kinds;
                        if (p_all) {
                          kinds = {"tw", "pw", "cw", "bipw", "edge_degree"};
                          if (!p_z.empty()) kinds.push_back("z_apex");
                        } else {
                          kinds = {p_kind};
                        }
                        std::vector<Parameter> params;
                        for (const auto& k : kinds) params.push_back(make_parameter(k, p_z));
                        auto g = read_graph(p_g);
                        ParameterBudget budget;
                        budget.layout_max_vertices = p_layout_max;
                        budget.parallel = !gl.serial;
                        config["layout_max_vertices"] = budget.layout_max_vertices;
                        config["z_apex_max_vertices"] = budget.z_apex_max_vertices;
                        if (!p_z.empty()) config["z_list"] = graphs_json(params.back().z_list.graphs());
                        Json values = Json::array();
                        for (const auto& p : params) {
                          auto r = evaluate(p, g, budget);
                          Json v;
                          v["parameter"] = p.name();
                          v["monotone_under"] = to_string(p.monotone_under());
                          v["value"] = r.value;
                          if (!r.layout.empty()) v["layout"] = r.layout;
                          if (p.kind == ParameterKind::ZApex) v["deletion_set"] = r.deletion_set;
                          values.push_back(v);
                        }
                        Json j;
                        j["config"] = config;
                        j["graph"] = graph_json(g);
                        j["values"] = values;
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  // obs
  std::string o_class, o_class_file, o_param, o_z, o_relation, o_sample;
  int o_k = -1, o_nmax = ObstructionOptions{}.n_max, o_multmax = ObstructionOptions{}.mult_max;
  int o_chain = 0, o_kmax = 2, o_prefix = 4;
  bool o_no_closure = false;
  auto* obs = app.add_subcommand("obs", "Compute an obstruction set within a bounded universe");
  auto* cls_opt = obs->add_option("--class", o_class, "Built-in class name");
  auto* file_opt = obs->add_option("--class-file", o_class_file, "Class given by an obstruction list file");
  auto* par_opt = obs->add_option("--param", o_param, "Parameter kind; the class is {p <= k}");
  cls_opt->excludes(file_opt)->excludes(par_opt);
  file_opt->excludes(par_opt);
  obs->add_option("--k", o_k, "Bound for --param")->check(CLI::NonNegativeNumber);
  obs->add_option("--z", o_z, "Graph list file with the minor list of z_apex");
  obs->add_option("--relation", o_relation, "Expected relation of the class (checked)");
  obs->add_option("--nmax", o_nmax, "Largest vertex count of the universe")->check(CLI::NonNegativeNumber);
  obs->add_option("--multmax", o_multmax, "Largest edge multiplicity of the universe")->check(CLI::PositiveNumber);
  obs->add_flag("--no-closure-check", o_no_closure, "Skip the closure check of the class predicate");
  obs->add_option("--chain", o_chain, "With --param: build an obstruction chain of this length");
  obs->add_option("--sample", o_sample, "With --param: comma-separated families to embed obstructions into");
  obs->add_option("--kmax", o_kmax, "With --sample: largest bound sampled");
  obs->add_option("--prefix", o_prefix, "With --sample: members searched per family");
  commands.push_back({obs, [&](const Globals& gl, Json& config, std::ostream& o) {
                        std::string format = gl.format;
                        require_format(format, {"json", "tsv", "text"});
                        int sources = !o_class.empty() + !o_class_file.empty() + !o_param.empty();
                        if (sources != 1) throw UsageError("obs needs one of --class, --class-file, --param");
                        if (!o_param.empty() && o_chain == 0 && o_sample.empty() && o_k < 0)
                          throw UsageError("--param needs --k");
                        if ((o_chain > 0 || !o_sample.empty()) && o_param.empty())
                          throw UsageError("--chain and --sample need --param");
                        ObstructionOptions opts;
                        opts.n_max = o_nmax;
                        opts.mult_max = o_multmax;
                        opts.parallel = !gl.serial;
                        opts.check_closure = !o_no_closure;
                        config["n_max"] = opts.n_max;
                        config["mult_max"] = opts.mult_max;
                        config["check_closure"] = opts.check_closure;
                        Json j;
                        if (!o_param.empty() && (o_chain > 0 || !o_sample.empty())) {
                          require_format(format, {"json", "tsv"});
                          auto p = make_parameter(o_param, o_z);
                          config["parameter"] = p.name();
                          config["relation"] = to_string(p.monotone_under());
                          j["config"] = config;
                          if (o_chain > 0) {
                            auto chain = obstruction_chain(p, o_chain, opts);
                            Json rows = Json::array();
                            for (std::size_t i = 0; i < chain.graphs.size(); ++i) {
                              Json r = graph_json(chain.graphs[i]);
                              r["level"] = chain.levels[i];
                              rows.push_back(r);
                            }
                            j["chain"] = rows;
                          }
                          if (!o_sample.empty()) {
                            std::vector<ParametricFamily> families;
                            std::stringstream ss(o_sample);
                            for (std::string f; std::getline(ss, f, ',');) families.push_back(find_family(f));
                            auto report = universal_sample_check(p, families, o_kmax, o_prefix, opts);
                            Json rows = Json::array();
                            for (const auto& row : report.rows) {
                              Json r;
                              r["k"] = row.k;
                              r["obstructions"] = row.obstruction_count;
                              r["found"] = row.found;
                              if (row.found) {
                                r["sample"] = graph_name(row.sample);
                                r["family"] = row.family;
                                r["index"] = row.index;
                              }
                              rows.push_back(r);
                            }
                            j["sample"] = rows;
                            if (!report.note.empty()) j["note"] = report.note;
                          }
                          emit(j, format, o);
                          return kExitOk;
                        }
                        NamedClass cls;
                        if (!o_class.empty()) {
                          cls = find_builtin_class(o_class);
                        } else if (!o_class_file.empty()) {
                          cls = class_from_spec(parse_class_spec(read_input(o_class_file)), o_class_file);
                        } else {
                          cls = parameter_class(make_parameter(o_param, o_z), o_k);
                        }
                        if (!o_relation.empty() && parse_relation(o_relation) != cls.relation)
                          throw InvalidInput("class " + cls.name + " is closed under " + to_string(cls.relation) +
                                             ", not " + o_relation);
                        config["class"] = cls.name;
                        config["relation"] = to_string(cls.relation);
                        config["mode"] = to_string(cls.mode);
                        auto report = compute_obstructions(cls, opts);
                        auto graphs = report.obstructions.graphs();
                        if (format == "text") {
                          write_graph_blocks(graphs,
                                             {"obstructions of " + cls.name + " under " + to_string(cls.relation),
                                              "n_max " + std::to_string(opts.n_max) + ", mult_max " +
                                                  std::to_string(opts.mult_max) + ", mode " + to_string(cls.mode)},
                                             o);
                          return kExitOk;
                        }
                        j["config"] = config;
                        j["universe_size"] = report.universe_size;
                        j["members"] = report.members;
                        j["antichain"] = report.antichain;
                        j["obstruction_count"] = graphs.size();
                        Json list = graphs_json(graphs);
                        for (std::size_t i = 0; i < graphs.size(); ++i) list[i]["text"] = to_text(graphs[i]);
                        j["obstructions"] = list;
                        if (!report.note.empty()) j["note"] = report.note;
                        emit(j, format, o);
                        return kExitOk;
                      }});

  // gen
  std::string g_family, g_out = "-";
  int g_k = 0;
  auto* gen = app.add_subcommand("gen", "Write a member of a parametric family");
  gen->add_option("--family", g_family, "Registered family name")->required();
  gen->add_option("--k", g_k, "Index")->required();
  gen->add_option("--out", g_out, "Output file, or - for standard output");
  commands.push_back({gen, [&](const Globals& gl, Json& config, std::ostream& o) {
                        std::string format = gl.format.empty() ? "text" : gl.format;
                        require_format(format, {"text", "graph6", "json", "tsv"});
                        const auto& fam = find_family(g_family);
                        auto g = fam.at(g_k);
                        config["family"] = fam.name;
                        config["k"] = g_k;
                        config["relation"] = to_string(fam.relation);
                        config["base_index"] = fam.base_index;
                        std::ostringstream buf;
                        if (format == "text") {
                          buf << "# family " << fam.name << ", k " << g_k << "\n" << to_text(g);
                        } else if (format == "graph6") {
                          if (!g.is_simple()) throw InvalidInput("graph6 holds simple graphs only");
                          buf << to_graph6(g) << "\n";
                        } else {
                          Json j;
                          j["config"] = config;
                          j["graph"] = graph_json(g);
                          emit(j, format, buf);
                        }
                        if (g_out == "-") {
                          o << buf.str();
                        } else {
                          std::ofstream f(g_out);
                          if (!(f << buf.str())) throw InvalidInput("cannot write " + g_out);
                        }
                        return kExitOk;
                      }});

  // universal
  auto* universal = app.add_subcommand("universal", "Universal obstructions: evaluate, approximate, gap reports");
  universal->require_subcommand(1);
  universal->fallthrough();

  std::string u_coll, u_g;
  bool u_check = false, u_literal = false;
  auto* u_eval = universal->add_subcommand("eval", "Evaluate p_h(G) for a prime collection");
  u_eval->add_option("--collection", u_coll, "Shipped collection name or collection file")->required();
  u_eval->add_option("--g", u_g, "Graph file")->required();
  u_eval->add_flag("--check", u_check, "Also check growth, primality and incomparability");
  u_eval->add_flag("--literal", u_literal, "Also report the literal per-family values");
  commands.push_back({u_eval, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        auto coll = load_collection(u_coll);
                        auto g = read_graph(u_g);
                        ContainmentOptions copts;
                        copts.parallel = !gl.serial;
                        config["collection"] = collection_json(coll);
                        auto v = evaluate_collection(coll, g, copts);
                        Json j;
                        j["config"] = config;
                        j["graph"] = graph_json(g);
                        j["value"] = v.value;
                        j["max_form"] = v.max_form;
                        j["min_form"] = v.min_form;
                        Json rows = Json::array();
                        for (std::size_t i = 0; i < coll.families.size(); ++i) {
                          Json r;
                          r["family"] = coll.families[i].name;
                          r["value"] = v.per_family[i];
                          if (u_literal)
                            r["literal"] = p_of_sequence_literal(coll.families[i], g, coll.relation, copts);
                          rows.push_back(r);
                        }
                        j["per_family"] = rows;
                        if (u_check) {
                          auto c = check_collection(coll, copts);
                          j["check"] = {{"growing", c.growing},
                                        {"prime", c.prime},
                                        {"incomparable", c.incomparable},
                                        {"problems", c.problems}};
                        }
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  std::string a_cert, a_coll, a_gap, a_g;
  int a_k = 0;
  bool a_exact = false;
  auto* u_approx = universal->add_subcommand("approx", "Approximate p(G) <= k through a collection and gap");
  auto* cert_opt = u_approx->add_option("--certificate", a_cert, "Shipped certificate name");
  auto* acoll_opt = u_approx->add_option("--collection", a_coll, "Collection name or file (with --gap)");
  auto* gap_opt = u_approx->add_option("--gap", a_gap, "identity, linear:a,b, poly:c[,a,b] or table:v0,v1,...");
  cert_opt->excludes(acoll_opt)->excludes(gap_opt);
  acoll_opt->needs(gap_opt);
  gap_opt->needs(acoll_opt);
  u_approx->add_option("--g", a_g, "Graph file")->required();
  u_approx->add_option("--k", a_k, "Bound")->required()->check(CLI::NonNegativeNumber);
  u_approx->add_flag("--exact", a_exact, "With --certificate: also compute the parameter exactly");
  commands.push_back({u_approx, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        if (a_cert.empty() && a_coll.empty())
                          throw UsageError("approx needs --certificate or --collection with --gap");
                        if (a_exact && a_cert.empty()) throw UsageError("--exact needs --certificate");
                        auto g = read_graph(a_g);
                        ContainmentOptions copts;
                        copts.parallel = !gl.serial;
                        config["k"] = a_k;
                        Json j;
                        Verdict v;
                        if (!a_cert.empty()) {
                          const auto& cert = find_certificate(a_cert);
                          config["certificate"] = cert.name;
                          config["parameter"] = to_string(cert.kind);
                          config["collection"] = cert.collection;
                          config["gap"] = cert.gap.to_string();
                          config["domain"] = cert.domain_name;
                          config["above_certified"] = cert.above_certified;
                          config["at_most_certified"] = cert.at_most_certified;
                          if (!cert.note.empty()) config["note"] = cert.note;
                          auto cv = approximate(cert, g, a_k, copts);
                          v = cv.verdict;
                          j["config"] = config;
                          j["graph"] = graph_json(g);
                          j["in_domain"] = cv.in_domain;
                          j["certified"] = cv.certified;
                        } else {
                          auto coll = load_collection(a_coll);
                          auto gap = parse_gap(a_gap);
                          config["collection"] = collection_json(coll);
                          config["gap"] = gap.to_string();
                          v = approximate(coll, gap, g, a_k, copts);
                          j["config"] = config;
                          j["graph"] = graph_json(g);
                          j["certified"] = false;
                        }
                        j["verdict"] = to_string(v.kind);
                        j["bound"] = v.bound;
                        j["p_h"] = v.p_h;
                        j["threshold"] = v.threshold;
                        if (a_exact) {
                          ParameterBudget budget;
                          budget.parallel = !gl.serial;
                          int exact = evaluate(Parameter{find_certificate(a_cert).kind, {}}, g, budget).value;
                          j["exact"] = exact;
                          j["sound"] = v.kind == VerdictKind::Above ? exact > a_k : exact <= v.bound;
                        }
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  std::string r_kind, r_coll, r_corpus = "standard", r_z;
  auto* u_gap = universal->add_subcommand("gap", "Tabulate a parameter against p_h over a corpus");
  u_gap->add_option("--kind", r_kind, "Parameter kind")->required();
  u_gap->add_option("--collection", r_coll, "Collection name or file")->required();
  u_gap->add_option("--corpus", r_corpus,
                    "standard, theta_star[:k], trees[:n], graphs[:n] (simple graphs) or a graph list file");
  u_gap->add_option("--z", r_z, "Graph list file with the minor list of z_apex");
  commands.push_back({u_gap, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        auto p = make_parameter(r_kind, r_z);
                        auto coll = load_collection(r_coll);
                        auto corpus = load_corpus(r_corpus);
                        config["parameter"] = p.name();
                        config["collection"] = collection_json(coll);
                        config["corpus"] = r_corpus;
                        auto report = gap_report(p, coll, corpus, !gl.serial);
                        Json j;
                        j["config"] = config;
                        j["rows_count"] = report.rows.size();
                        j["min_difference"] = report.min_difference;
                        j["max_difference"] = report.max_difference;
                        j["fitted_gap"] = report.fitted.to_string();
                        Json env = Json::array();
                        for (const auto& [value, ph] : report.p_h_envelope)
                          env.push_back({{"parameter", value}, {"max_p_h", ph}});
                        j["p_h_envelope"] = env;
                        Json penv = Json::array();
                        for (const auto& [ph, value] : report.parameter_envelope)
                          penv.push_back({{"p_h", ph}, {"max_parameter", value}});
                        j["parameter_envelope"] = penv;
                        Json rows = Json::array();
                        for (const auto& r : report.rows)
                          rows.push_back({{"graph", graph_name(r.graph)}, {"parameter", r.parameter}, {"p_h", r.p_h}});
                        j["rows"] = rows;
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  auto* u_list = universal->add_subcommand("list", "List shipped collections and certificates");
  commands.push_back({u_list, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        Json j;
                        j["config"] = config;
                        Json colls = Json::array();
                        for (const auto& c : shipped_collections()) {
                          Json cj = collection_json(c);
                          std::string fams;
                          for (const auto& f : c.families) fams += (fams.empty() ? "" : ",") + f.name;
                          cj["families"] = fams;
                          colls.push_back(cj);
                        }
                        j["collections"] = colls;
                        Json certs = Json::array();
                        for (const auto& c : shipped_certificates())
                          certs.push_back({{"name", c.name},
                                           {"parameter", to_string(c.kind)},
                                           {"collection", c.collection},
                                           {"gap", c.gap.to_string()},
                                           {"above_certified", c.above_certified},
                                           {"at_most_certified", c.at_most_certified},
                                           {"domain", c.domain_name},
                                           {"note", c.note}});
                        j["certificates"] = certs;
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  // poset
  auto* poset = app.add_subcommand("poset", "Finite posets: width, chain partitions, Rado truncations");
  poset->require_subcommand(1);
  poset->fallthrough();

  std::string w_file;
  auto* p_width = poset->add_subcommand("width", "Width and a maximum antichain");
  p_width->add_option("--file", w_file, "Poset text file")->required();
  auto* p_chains = poset->add_subcommand("chains", "A minimum chain partition");
  p_chains->add_option("--file", w_file, "Poset text file")->required();
  auto poset_header = [&](const Quotient& q, Json& config) {
    config["file"] = w_file;
    Json j;
    j["config"] = config;
    j["size"] = q.poset.size();
    Json merged = Json::array();
    for (int c = 0; c < static_cast<int>(q.classes.size()); ++c)
      if (q.classes[c].size() > 1) merged.push_back(q.poset.label(c));
    j["merged_classes"] = merged;
    return j;
  };
  commands.push_back({p_width, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        auto q = parse_poset(read_input(w_file));
                        Json j = poset_header(q, config);
                        auto a = maximum_antichain(q.poset, !gl.serial);
                        j["width"] = a.size();
                        Json labels = Json::array();
                        for (int x : a) labels.push_back(q.poset.label(x));
                        j["antichain"] = labels;
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});
  commands.push_back({p_chains, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        auto q = parse_poset(read_input(w_file));
                        Json j = poset_header(q, config);
                        auto chains = chain_partition(q.poset);
                        j["width"] = chains.size();
                        Json rows = Json::array();
                        for (const auto& c : chains) {
                          std::string joined;
                          for (int x : c) joined += (joined.empty() ? "" : " < ") + q.poset.label(x);
                          rows.push_back({{"length", c.size()}, {"chain", joined}});
                        }
                        j["chains"] = rows;
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  int rado_n = 5, rado_m = 0;
  auto* p_rado = poset->add_subcommand("rado", "Truncated Rado structure and row/column families");
  p_rado->add_option("--n", rado_n, "Truncation bound")->check(CLI::Range(2, 40));
  p_rado->add_option("--m", rado_m, "Family size for the row and column families")->check(CLI::PositiveNumber);
  commands.push_back({p_rado, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        config["n"] = rado_n;
                        if (rado_m > 0) config["m"] = rado_m;
                        auto r = rado_truncation(rado_n);
                        Json j;
                        j["config"] = config;
                        j["size"] = r.size();
                        auto a = maximum_antichain(r, !gl.serial);
                        j["width"] = a.size();
                        Json labels = Json::array();
                        for (int x : a) labels.push_back(r.label(x));
                        j["antichain"] = labels;
                        if (rado_m > 0) {
                          auto describe_family = [](const std::vector<std::vector<RadoElement>>& fam,
                                                    const std::string& letter, int first_index) {
                            auto report = rado_family_report(fam);
                            Json f;
                            f["antichain"] = report.antichain;
                            Json pairs = Json::array();
                            for (auto [x, y] : report.comparable)
                              pairs.push_back(letter + std::to_string(x + first_index) + " <=* " + letter +
                                              std::to_string(y + first_index));
                            f["comparable"] = pairs;
                            return f;
                          };
                          j["rows"] = describe_family(rado_row_family(rado_m, rado_n), "A", 1);
                          j["columns"] = describe_family(rado_column_family(rado_m, rado_n), "C",
                                                         rado_n - rado_m + 1);
                        }
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  std::string s_family, s_graphs, s_relation;
  int s_count = 6;
  auto* p_seq = poset->add_subcommand("sequence", "Order a graph sequence by containment and split it into chains");
  auto* sf_opt = p_seq->add_option("--family", s_family, "Registered family name");
  auto* sg_opt = p_seq->add_option("--graphs", s_graphs, "Graph list file");
  sf_opt->excludes(sg_opt);
  p_seq->add_option("--count", s_count, "Members taken from --family")->check(CLI::Range(1, 12));
  p_seq->add_option("--relation", s_relation, "Relation (default: the family's, else minor)");
  commands.push_back({p_seq, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        if (s_family.empty() == s_graphs.empty())
                          throw UsageError("sequence needs one of --family, --graphs");
                        std::vector<MultiGraph> prefix;
                        Relation rel = Relation::Minor;
                        if (!s_family.empty()) {
                          const auto& fam = find_family(s_family);
                          prefix = fam.prefix(s_count);
                          rel = fam.relation;
                          config["family"] = fam.name;
                          config["count"] = s_count;
                        } else {
                          prefix = read_graphs(s_graphs);
                          config["graphs"] = s_graphs;
                        }
                        if (!s_relation.empty()) rel = parse_relation(s_relation);
                        config["relation"] = to_string(rel);
                        ContainmentOptions copts;
                        copts.parallel = !gl.serial;
                        auto r = rationalize(prefix, rel, copts);
                        Json j;
                        j["config"] = config;
                        j["members"] = prefix.size();
                        j["width"] = r.width;
                        Json rows = Json::array();
                        for (const auto& c : r.chains) {
                          std::string joined;
                          for (int x : c.indices) joined += (joined.empty() ? "" : " ") + std::to_string(x);
                          rows.push_back(
                              {{"indices", joined}, {"growing", c.growing}, {"minimal_growing", c.minimal_growing}});
                        }
                        j["chains"] = rows;
                        j["note"] = "growing: the chain reaches the final quarter of the prefix (heuristic)";
                        emit(j, gl.format, o);
                        return kExitOk;
                      }});

  // verify
  std::string v_suite, v_fixtures;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", v_suite, "section6, invariants, rado or gaps")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--fixture-dir", v_fixtures, "Directory with persisted fixtures to compare against");
  commands.push_back({verify, [&](const Globals& gl, Json& config, std::ostream& o) {
                        require_format(gl.format, {"json", "tsv"});
                        config["suite"] = v_suite;
                        if (!v_fixtures.empty()) config["fixture_dir"] = v_fixtures;
                        VerifyOptions vo;
                        vo.parallel = !gl.serial;
                        vo.fixture_dir = v_fixtures;
                        auto results = run_suite(v_suite, vo);
                        bool all = true;
                        std::function<Json(const CheckResult&)> to_json = [&](const CheckResult& r) {
                          Json c;
                          c["id"] = r.id;
                          c["status"] = r.passed ? "PASS" : "FAIL";
                          c["title"] = r.title;
                          c["details"] = r.details;
                          if (!r.parts.empty()) {
                            Json parts = Json::array();
                            for (const auto& p : r.parts) parts.push_back(to_json(p));
                            c["parts"] = parts;
                          }
                          return c;
                        };
                        Json checks = Json::array();
                        for (const auto& r : results) {
                          all = all && r.passed;
                          checks.push_back(to_json(r));
                        }
                        if (gl.format == "tsv") {
                          for (const auto& r : results) {
                            o << (r.passed ? "PASS" : "FAIL") << "\t" << r.id << "\t" << r.title << "\n";
                            for (const auto& p : r.parts)
                              o << (p.passed ? "PASS" : "FAIL") << "\t" << r.id << "." << p.id << "\t" << p.title
                                << "\n";
                          }
                        } else {
                          Json j;
                          j["config"] = config;
                          j["status"] = all ? "PASS" : "FAIL";
                          j["checks"] = checks;
                          o << j.dump(2) << "\n";
                        }
                        return all ? kExitOk : kExitVerifyFailed;
                      }});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    std::optional<long long> budget = globals.budget_ms;
    std::string budget_source = budget ? "flag" : "none";
    if (!budget) {
      if (const char* env = std::getenv("UOBS_BUDGET_MS"); env && *env) {
        try {
          std::size_t used = 0;
          budget = std::stoll(env, &used);
          if (used != std::string(env).size() || *budget <= 0) throw std::invalid_argument(env);
        } catch (const std::exception&) {
          throw UsageError(std::string("UOBS_BUDGET_MS must be a positive integer, got '") + env + "'");
        }
        budget_source = "UOBS_BUDGET_MS";
      }
    }
    ScopedDeadline deadline(budget ? std::optional<std::chrono::milliseconds>(*budget) : std::nullopt);
    Globals effective = globals;
    if (effective.format.empty()) effective.format = "json";
    for (const auto& cmd : commands) {
      if (!cmd.app->parsed()) continue;
      Json config;
      std::string name = cmd.app->get_name();
      if (auto* parent = cmd.app->get_parent(); parent && parent != &app) name = parent->get_name() + " " + name;
      config["command"] = name;
      config["format"] = cmd.app == gen && globals.format.empty() ? "text" : effective.format;
      config["budget_ms"] = budget ? Json(*budget) : Json(nullptr);
      config["budget_source"] = budget_source;
      config["parallel"] = !globals.serial;
      config["conventions"] = conventions();
      Globals local = effective;
      if (cmd.app == gen) local.format = globals.format;
      return cmd.run(local, config, out);
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const NotClosed& e) {
    err << "class not closed: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace uobs
