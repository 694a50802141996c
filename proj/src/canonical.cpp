#include "fintop/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace fintop {

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits every cell by (down-degree, up-degree) counted against every
// cell mask, iterated to a fixpoint. Sub-cells are ordered by ascending
// key, so the result depends only on the unlabelled structure.
void refine(const FinitePoset& x, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PointSet> masks(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) masks[c].add(v);
    for (std::size_t t = 0; t < cells.size() && !changed; ++t) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        auto key = [&](int v) {
          return std::pair<int, int>((x.down_set(v) & masks[t]).count(),
                                     (x.up_set(v) & masks[t]).count());
        };
        auto k0 = key(cells[c][0]);
        bool uniform = std::all_of(cells[c].begin(), cells[c].end(),
                                   [&](int v) { return key(v) == k0; });
        if (uniform) continue;
        std::stable_sort(cells[c].begin(), cells[c].end(),
                         [&](int a, int b) { return key(a) < key(b); });
        Cells pieces;
        for (int v : cells[c]) {
          if (pieces.empty() || key(pieces.back().back()) != key(v)) pieces.push_back({});
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + c);
        cells.insert(cells.begin() + c, pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Search {
 public:
  Search(const FinitePoset& x, bool collect) : x_(x), n_(x.size()), orbits_(x.size()), collect_(collect) {}

  CanonicalInfo run() {
    Cells start{std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) start[0][i] = i;
    refine(x_, start);
    descend(start);

    CanonicalInfo info;
    info.form.bytes = best_bytes_;
    info.canonical_order = best_labeling_;
    info.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) info.orbit[v] = orbits_.find(v);
    if (collect_) {
      std::vector<int> id(n_);
      for (int i = 0; i < n_; ++i) id[i] = i;
      auts_.push_back(id);
      std::sort(auts_.begin(), auts_.end());
      auts_.erase(std::unique(auts_.begin(), auts_.end()), auts_.end());
      info.automorphisms = std::move(auts_);
    }
    return info;
  }

 private:
  void descend(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const std::vector<int>& c) { return c.size() > 1; });
    if (target == cells.end()) {
      visit_leaf(cells);
      return;
    }
    std::size_t t = static_cast<std::size_t>(target - cells.begin());
    for (int v : cells[t]) {
      Cells next(cells.begin(), cells.begin() + t);
      next.push_back({v});
      std::vector<int> rest;
      for (int w : cells[t])
        if (w != v) rest.push_back(w);
      next.push_back(std::move(rest));
      next.insert(next.end(), cells.begin() + t + 1, cells.end());
      refine(x_, next);
      descend(next);
    }
  }

  void visit_leaf(const Cells& cells) {
    std::vector<int> labeling;
    labeling.reserve(n_);
    for (const auto& c : cells) labeling.push_back(c[0]);
    std::vector<std::uint8_t> bytes = encode(labeling);
    if (best_bytes_.empty() || bytes < best_bytes_) {
      best_bytes_ = std::move(bytes);
      best_labeling_ = std::move(labeling);
      return;
    }
    if (bytes == best_bytes_) {
      // Two labelings with equal encodings differ by an automorphism.
      std::vector<int> sigma(n_);
      for (int p = 0; p < n_; ++p) sigma[best_labeling_[p]] = labeling[p];
      for (int v = 0; v < n_; ++v) orbits_.unite(v, sigma[v]);
      if (collect_) auts_.push_back(std::move(sigma));
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& labeling) const {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(1 + (static_cast<std::size_t>(n_) * n_ + 7) / 8);
    bytes.push_back(static_cast<std::uint8_t>(n_));
    std::uint8_t acc = 0;
    int used = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        acc = static_cast<std::uint8_t>((acc << 1) | (x_.less(labeling[i], labeling[j]) ? 1 : 0));
        if (++used == 8) {
          bytes.push_back(acc);
          acc = 0;
          used = 0;
        }
      }
    }
    if (used > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
    return bytes;
  }

  const FinitePoset& x_;
  int n_;
  DisjointSets orbits_;
  bool collect_;
  std::vector<std::uint8_t> best_bytes_;
  std::vector<int> best_labeling_;
  std::vector<std::vector<int>> auts_;
};

}  // namespace

CanonicalForm canonical_form(const FinitePoset& x) { return canonicalize(x, false).form; }

CanonicalInfo canonicalize(const FinitePoset& x, bool collect_automorphisms) {
  return Search(x, collect_automorphisms).run();
}

FinitePoset poset_from_canonical_form(const CanonicalForm& form) {
  if (form.bytes.empty()) throw std::invalid_argument("empty canonical form");
  int n = form.bytes[0];
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::size_t bit = static_cast<std::size_t>(i) * n + j;
      std::size_t byte = 1 + bit / 8;
      if (byte >= form.bytes.size()) throw std::invalid_argument("truncated canonical form");
      if ((form.bytes[byte] >> (7 - bit % 8)) & 1) relations.emplace_back(i, j);
    }
  }
  return FinitePoset::from_covers(n, relations);
}

}  // namespace fintop
