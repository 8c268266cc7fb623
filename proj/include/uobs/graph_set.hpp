#pragma once

#include <map>
#include <vector>

#include "uobs/canonical.hpp"

namespace uobs {

// Isomorphism classes of graphs kept in EnumOrder. Stored graphs are the
// canonical representatives, so iteration order and labels are reproducible.
class GraphSet {
 public:
  GraphSet() = default;
  GraphSet(std::initializer_list<MultiGraph> graphs);
  explicit GraphSet(const std::vector<MultiGraph>& graphs);

  // Returns false when an isomorphic copy was already present.
  bool insert(const MultiGraph& g);
  bool contains(const MultiGraph& g) const;
  bool erase(const MultiGraph& g);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::vector<MultiGraph> graphs() const;
  std::vector<EnumKey> keys() const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const GraphSet& o) const;

  // Elements of *this missing from o, and of o missing from *this.
  std::pair<GraphSet, GraphSet> diff(const GraphSet& o) const;

 private:
  std::map<EnumKey, MultiGraph> items_;
};

}  // namespace uobs
