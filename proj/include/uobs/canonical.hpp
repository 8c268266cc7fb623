#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "uobs/graph.hpp"

namespace uobs {

// Isomorphism-invariant byte string: vertex count followed by the upper
// triangle of the multiplicity matrix under the canonical labelling.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
  std::string hex() const;
};

struct CanonicalForm_hash {
  std::size_t operator()(const CanonicalForm& c) const noexcept;
};

struct Canonization {
  CanonicalForm form;
  // labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
};

Canonization canonize(const MultiGraph& g);
CanonicalForm canonical_form(const MultiGraph& g);
MultiGraph canonical_graph(const MultiGraph& g);
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

// Total order used for every deterministic listing:
// vertex count, then edge count with multiplicity, then canonical bytes.
struct EnumKey {
  int n = 0;
  int m = 0;
  CanonicalForm form;
  auto operator<=>(const EnumKey&) const = default;
  bool operator==(const EnumKey&) const = default;
};

EnumKey enum_key(const MultiGraph& g);
bool enum_less(const MultiGraph& a, const MultiGraph& b);

}  // namespace uobs
