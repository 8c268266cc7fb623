#pragma once

#include <map>
#include <string>
#include <vector>

#include "uobs/enumerate.hpp"
#include "uobs/families.hpp"
#include "uobs/parameters.hpp"
#include "uobs/relations.hpp"

namespace uobs {

// A finite collection of parametric families compared under one relation.
// Primality and incomparability are only checked on the first prefix_length
// members of each family.
struct PrimeCollection {
  std::string name;
  Relation relation = Relation::Minor;
  std::vector<ParametricFamily> families;
  int prefix_length = 5;

  int min_base_index() const;
};

struct CollectionCheck {
  bool growing = true;
  bool prime = true;
  bool incomparable = true;
  std::vector<std::string> problems;

  bool ok() const { return growing && prime && incomparable; }
};

// Strict growth of |V| + |E| along each prefix, each prefix a chain, and for
// every ordered pair of families a prefix member of the first contained in no
// prefix member of the second.
CollectionCheck check_collection(const PrimeCollection& coll, const ContainmentOptions& options = {});

// grid, ternary, apex_trees, theta_star, theta_star_tree.
const std::vector<PrimeCollection>& shipped_collections();
const PrimeCollection& find_collection(const std::string& name);

// Either "collection <shipped name>" or lines "name <n>", "relation <r>",
// "prefix <n>" and one "family <registered name>" per family.
PrimeCollection parse_collection(const std::string& text);
std::string to_text(const PrimeCollection& coll);

// Least k >= base with H_k not contained in g, by ascending scan. Exact for
// monotone prime families. Throws InvalidInput if the family stops growing.
int p_of_sequence(const ParametricFamily& family, const MultiGraph& g, Relation relation,
                  const ContainmentOptions& options = {});
int p_of_sequence(const ParametricFamily& family, const MultiGraph& g, const ContainmentOptions& options = {});

// min{k : MIN(H_{>=k}) does not dominate {g}} evaluated over the members up
// to the first one larger than g in |V| + |E|. Larger members cannot be
// contained in g, so the finite prefix decides the value for any sequence.
int p_of_sequence_literal(const ParametricFamily& family, const MultiGraph& g, Relation relation,
                          const ContainmentOptions& options = {});

struct CollectionValue {
  int value = 0;
  int max_form = 0;
  int min_form = 0;
  std::vector<int> per_family;
};

// The maximum of the per-family values and the least k at which no family
// member H_k (k >= its base) is contained in g. Indices below a family's base
// count as contained. The two must agree; a mismatch throws InternalError.
CollectionValue evaluate_collection(const PrimeCollection& coll, const MultiGraph& g,
                                    const ContainmentOptions& options = {});
int p_of_collection(const PrimeCollection& coll, const MultiGraph& g, const ContainmentOptions& options = {});

// A monotone map on the naturals.
struct GapFunction {
  enum class Kind { Identity, Linear, Polynomial, Tabulated };

  Kind kind = Kind::Identity;
  // Linear: a * k + b. Polynomial: a * k^c + b.
  long long a = 1;
  long long b = 0;
  int c = 1;
  // Tabulated: table[k] for 0 <= k < table.size(); undefined beyond.
  std::vector<int> table;

  static GapFunction identity();
  static GapFunction linear(long long a, long long b);
  static GapFunction polynomial(int c, long long a = 1, long long b = 0);
  static GapFunction tabulated(std::vector<int> table);

  int operator()(int k) const;
  bool defined_at(int k) const;
  std::string to_string() const;
};

// "identity", "linear:a,b", "poly:c[,a,b]" or "table:v0,v1,...".
GapFunction parse_gap(const std::string& text);

enum class VerdictKind { Above, AtMost };

std::string to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::Above;
  int k = 0;
  // k for Above, gap(gap(k)) for AtMost.
  int bound = 0;
  int p_h = 0;
  int threshold = 0;
};

// If p_h(g) > gap(k) the answer is Above(k), meaning p(g) > k; otherwise
// AtMost(gap(gap(k))).
Verdict approximate(const PrimeCollection& coll, const GapFunction& gap, const MultiGraph& g, int k,
                    const ContainmentOptions& options = {});

// A (parameter, collection, gap) triple together with the inputs and verdict
// sides on which it is known to be sound.
struct Certificate {
  std::string name;
  ParameterKind kind = ParameterKind::Treewidth;
  std::string collection;
  GapFunction gap;
  bool above_certified = true;
  bool at_most_certified = true;
  std::string domain_name;
  GraphPredicate domain;
  std::string note;

  bool in_domain(const MultiGraph& g) const { return !domain || domain(g); }
};

// tw_grid, ed_theta_star, ed_theta_star_general, pw_ternary.
const std::vector<Certificate>& shipped_certificates();
const Certificate& find_certificate(const std::string& name);

struct CertifiedVerdict {
  Verdict verdict;
  bool in_domain = true;
  bool certified = true;
};

CertifiedVerdict approximate(const Certificate& cert, const MultiGraph& g, int k, const ContainmentOptions& options = {});

struct GapRow {
  MultiGraph graph;
  int parameter = 0;
  int p_h = 0;
};

struct GapReport {
  std::string parameter;
  std::string collection;
  std::vector<GapRow> rows;
  // Largest p_h seen at each parameter value, and the reverse.
  std::map<int, int> p_h_envelope;
  std::map<int, int> parameter_envelope;
  int min_difference = 0;
  int max_difference = 0;
  // The least monotone table bounding both envelopes.
  GapFunction fitted;
};

// Rows in EnumOrder of the corpus; duplicates up to isomorphism are kept once.
GapReport gap_report(const Parameter& p, const PrimeCollection& coll, const std::vector<MultiGraph>& corpus,
                     bool parallel = true);

// Least monotone g with g(x) >= x, p_h <= g(p) and p <= g(p_h) on every row.
GapFunction fit_gap(const std::vector<GapRow>& rows);

// 250 random simple graphs on 1..7 vertices and 250 random multigraphs on
// 1..5 vertices with multiplicity at most 2, from a fixed seed.
std::vector<MultiGraph> standard_corpus();
// theta_1..theta_k and star_1..star_k.
std::vector<MultiGraph> theta_star_corpus(int k_max);
// Every tree on 1..n_max vertices.
std::vector<MultiGraph> tree_corpus(int n_max);

}  // namespace uobs
