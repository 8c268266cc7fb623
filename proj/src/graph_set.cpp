#include "uobs/graph_set.hpp"

namespace uobs {

GraphSet::GraphSet(std::initializer_list<MultiGraph> graphs) {
  for (const auto& g : graphs) insert(g);
}

GraphSet::GraphSet(const std::vector<MultiGraph>& graphs) {
  for (const auto& g : graphs) insert(g);
}

bool GraphSet::insert(const MultiGraph& g) {
  auto c = canonize(g);
  EnumKey key{g.vertex_count(), g.edge_count(), c.form};
  if (items_.count(key)) return false;
  items_.emplace(std::move(key), relabel(g, c.labeling));
  return true;
}

bool GraphSet::contains(const MultiGraph& g) const { return items_.count(enum_key(g)) > 0; }

bool GraphSet::erase(const MultiGraph& g) { return items_.erase(enum_key(g)) > 0; }

std::vector<MultiGraph> GraphSet::graphs() const {
  std::vector<MultiGraph> out;
  out.reserve(items_.size());
  for (const auto& [k, g] : items_) out.push_back(g);
  return out;
}

std::vector<EnumKey> GraphSet::keys() const {
  std::vector<EnumKey> out;
  for (const auto& [k, g] : items_) out.push_back(k);
  return out;
}

bool GraphSet::operator==(const GraphSet& o) const {
  if (items_.size() != o.items_.size()) return false;
  auto a = items_.begin();
  auto b = o.items_.begin();
  for (; a != items_.end(); ++a, ++b)
    if (!(a->first == b->first)) return false;
  return true;
}

std::pair<GraphSet, GraphSet> GraphSet::diff(const GraphSet& o) const {
  GraphSet only_here;
  GraphSet only_there;
  for (const auto& [k, g] : items_)
    if (!o.items_.count(k)) only_here.items_.emplace(k, g);
  for (const auto& [k, g] : o.items_)
    if (!items_.count(k)) only_there.items_.emplace(k, g);
  return {only_here, only_there};
}

}  // namespace uobs
