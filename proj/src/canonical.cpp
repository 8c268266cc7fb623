#include "uobs/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>

#include "uobs/error.hpp"

namespace uobs {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Colours are cell start positions (nauty convention), so individualizing a
// vertex and refining both keep the ordered partition label-independent.
class Canonizer {
 public:
  explicit Canonizer(const MultiGraph& g) : g_(g), n_(g.vertex_count()) {
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w)
        if (w != v && g.multiplicity(v, w) > 0) adj_[v].push_back(w);
  }

  Canonization run() {
    Canonization out;
    if (n_ == 0) {
      out.form.bytes = {0};
      return out;
    }
    std::vector<int> col(n_, 0);
    search(col, 0, true);
    out.labeling = best_lab_;
    out.form = encode(best_cert_);
    return out;
  }

 private:
  void refine(std::vector<int>& col) {
    std::vector<std::uint64_t> key(n_);
    std::vector<int> order(n_);
    int cells = count_cells(col);
    while (cells < n_) {
      for (int v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        for (int w : adj_[v]) h += mix(static_cast<std::uint64_t>(col[w]) * 65537ULL + g_.multiplicity(v, w));
        key[v] = h;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (col[a] != col[b]) return col[a] < col[b];
        return key[a] < key[b];
      });
      std::vector<int> next(n_);
      int start = 0;
      int new_cells = 0;
      for (int i = 0; i < n_; ++i) {
        int v = order[i];
        if (i == 0 || col[v] != col[order[i - 1]] || key[v] != key[order[i - 1]]) {
          start = i;
          ++new_cells;
        }
        next[v] = start;
      }
      col.swap(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
  }

  int count_cells(const std::vector<int>& col) const {
    std::vector<char> seen(n_, 0);
    int c = 0;
    for (int v = 0; v < n_; ++v)
      if (!seen[col[v]]) {
        seen[col[v]] = 1;
        ++c;
      }
    return c;
  }

  bool twins(int u, int v) const {
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (g_.multiplicity(u, w) != g_.multiplicity(v, w)) return false;
    }
    return true;
  }

  std::vector<std::uint16_t> certificate(const std::vector<int>& col) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[col[v]] = v;
    std::vector<std::uint16_t> cert;
    cert.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) cert.push_back(static_cast<std::uint16_t>(g_.multiplicity(inv[i], inv[j])));
    return cert;
  }

  CanonicalForm encode(const std::vector<std::uint16_t>& cert) const {
    if (n_ > 255) throw InvalidInput("canonical form supports at most 255 vertices");
    CanonicalForm f;
    f.bytes.reserve(cert.size() + 1);
    f.bytes.push_back(static_cast<std::uint8_t>(n_));
    for (auto m : cert) {
      if (m < 255) {
        f.bytes.push_back(static_cast<std::uint8_t>(m));
      } else {
        f.bytes.push_back(255);
        f.bytes.push_back(static_cast<std::uint8_t>(m >> 8));
        f.bytes.push_back(static_cast<std::uint8_t>(m & 0xff));
      }
    }
    return f;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<int> orbit_roots() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : autos_)
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v);
        int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    for (int v = 0; v < n_; ++v) find(parent, v);
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void leaf(const std::vector<int>& col) {
    auto cert = certificate(col);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = cert;
      first_lab_ = col;
      first_path_ = path_;
      best_cert_ = cert;
      best_lab_ = col;
      return;
    }
    if (cert == first_cert_) {
      std::vector<int> inv(n_);
      for (int v = 0; v < n_; ++v) inv[col[v]] = v;
      std::vector<int> gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = inv[first_lab_[v]];
      autos_.push_back(std::move(gamma));
      int level = 0;
      while (level < static_cast<int>(path_.size()) && path_[level] == first_path_[level]) ++level;
      backjump_ = level;
      return;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = col;
    }
  }

  void search(std::vector<int> col, int level, bool first_path) {
    refine(col);
    std::vector<int> size(n_, 0);
    for (int v = 0; v < n_; ++v) ++size[col[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(col);
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (col[v] == target) cell.push_back(v);
    std::vector<int> reps;
    for (int v : cell) {
      bool dup = false;
      for (int r : reps)
        if (twins(r, v)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(v);
    }
    std::vector<int> explored;
    for (int v : reps) {
      if (first_path && !explored.empty() && !autos_.empty()) {
        auto roots = orbit_roots();
        bool same = false;
        for (int u : explored)
          if (roots[u] == roots[v]) {
            same = true;
            break;
          }
        if (same) continue;
      }
      std::vector<int> child = col;
      for (int w : cell)
        if (w != v) child[w] = target + 1;
      child[v] = target;
      path_.push_back(v);
      search(std::move(child), level + 1, first_path && explored.empty());
      path_.pop_back();
      explored.push_back(v);
      if (backjump_ >= 0) {
        if (backjump_ < level) return;
        backjump_ = -1;
      }
    }
  }

  const MultiGraph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<std::uint16_t> first_cert_;
  std::vector<int> first_lab_;
  bool have_first_ = false;
  std::vector<std::uint16_t> best_cert_;
  std::vector<int> best_lab_;
  std::vector<std::vector<int>> autos_;
  int backjump_ = -1;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr std::string_view digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

std::size_t CanonicalForm_hash::operator()(const CanonicalForm& c) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : c.bytes) h = (h ^ b) * 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

Canonization canonize(const MultiGraph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const MultiGraph& g) { return canonize(g).form; }

MultiGraph canonical_graph(const MultiGraph& g) { return relabel(g, canonize(g).labeling); }

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

EnumKey enum_key(const MultiGraph& g) { return {g.vertex_count(), g.edge_count(), canonical_form(g)}; }

bool enum_less(const MultiGraph& a, const MultiGraph& b) { return enum_key(a) < enum_key(b); }

}  // namespace uobs
