#pragma once

#include <string>
#include <vector>

#include "uobs/graph.hpp"
#include "uobs/relations.hpp"

namespace uobs {

using OrderMatrix = std::vector<std::vector<char>>;

// A finite partial order; le(a, b) means a <= b.
class FinitePoset {
 public:
  FinitePoset() = default;
  // Throws InvalidInput unless the matrix is square, reflexive, transitive and
  // antisymmetric.
  FinitePoset(std::vector<std::string> labels, OrderMatrix le);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool le(int a, int b) const { return le_[a][b] != 0; }
  bool comparable(int a, int b) const { return le(a, b) || le(b, a); }
  const OrderMatrix& matrix() const { return le_; }

 private:
  std::vector<std::string> labels_;
  OrderMatrix le_;
};

// The partial order on equivalence classes of a quasi-order (a ~ b when
// a <= b and b <= a). Classes are listed by their smallest member, and each
// class label joins its members' labels with '='.
struct Quotient {
  FinitePoset poset;
  std::vector<std::vector<int>> classes;
};

// Throws InvalidInput unless the matrix is reflexive and transitive.
Quotient quotient(const std::vector<std::string>& labels, const OrderMatrix& le);

// Reflexive-transitive closure of the listed pairs.
OrderMatrix closure(int n, const std::vector<std::pair<int, int>>& pairs);

// Text: "elem <label>" lines, then "le <a> <b>" lines naming labels; '#'
// starts a comment. The closure of the listed pairs is taken, so cover
// relations suffice. Cycles are merged by the quotient.
Quotient parse_poset(const std::string& text);
std::string to_text(const FinitePoset& p);

bool is_antichain(const FinitePoset& p, const std::vector<int>& elements);
bool is_chain(const FinitePoset& p, const std::vector<int>& elements);

// Exhaustive branch and bound over the incomparability graph; at most 64
// elements. Parallel over the first branching element.
std::vector<int> maximum_antichain_by_search(const FinitePoset& p, bool parallel = true);
// From a maximum matching in the strict-order bipartite graph (Konig).
std::vector<int> maximum_antichain_by_matching(const FinitePoset& p);
// Search up to 25 elements, matching beyond.
std::vector<int> maximum_antichain(const FinitePoset& p, bool parallel = true);
int poset_width(const FinitePoset& p, bool parallel = true);
// A partition into poset_width(p) chains, each listed bottom to top.
std::vector<std::vector<int>> chain_partition(const FinitePoset& p);

struct RadoElement {
  int i = 0;
  int j = 1;

  bool operator==(const RadoElement&) const = default;
};

// (i = i' and j <= j') or j < i'.
bool rado_order(const RadoElement& a, const RadoElement& b);
// Elements (i, j) with 0 <= i < j <= n, ordered by (j, i).
std::vector<RadoElement> rado_elements(int n);
FinitePoset rado_truncation(int n);

// a <=* b: every element of b is above some element of a.
bool rado_star_le(const std::vector<RadoElement>& a, const std::vector<RadoElement>& b);

struct RadoFamilyReport {
  bool antichain = true;
  // Ordered index pairs (x, y) with family[x] <=* family[y].
  std::vector<std::pair<int, int>> comparable;
};

RadoFamilyReport rado_family_report(const std::vector<std::vector<RadoElement>>& family);
// A_i = {(i, j) : i < j <= n} for 1 <= i <= m; requires 1 <= m < n.
std::vector<std::vector<RadoElement>> rado_row_family(int m, int n);
// C_i = {(j, i) : 0 <= j < i} for n - m < i <= n; requires 1 <= m <= n.
std::vector<std::vector<RadoElement>> rado_column_family(int m, int n);
// Whether the row family is pairwise <=*-incomparable.
bool rado_star_antichain_witness(int m, int n);

// The prefix ordered by the relation, quotiented by mutual containment.
Quotient sequence_order(const std::vector<MultiGraph>& prefix, Relation relation,
                        const ContainmentOptions& options = {});
int sequence_width(const std::vector<MultiGraph>& prefix, Relation relation, const ContainmentOptions& options = {});

struct RationalChain {
  // Prefix indices, bottom to top; equivalent members are listed together.
  std::vector<int> indices;
  // Heuristic: the chain's last index lies in the final quarter of the prefix.
  bool growing = false;
  // No other growing chain lies strictly below it (every member of one below
  // some member of the other).
  bool minimal_growing = false;
};

struct Rationalization {
  int width = 0;
  std::vector<RationalChain> chains;
};

Rationalization rationalize(const std::vector<MultiGraph>& prefix, Relation relation,
                            const ContainmentOptions& options = {});

}  // namespace uobs
