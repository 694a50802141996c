#include "fintop/poset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace fintop {

std::vector<int> PointSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for (int p : *this) out.push_back(p);
  return out;
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Follows cover edges from `start` back to itself and renders the cycle.
std::string describe_cycle(int n, const std::vector<PointSet>& covers_up, int start) {
  std::vector<int> parent(n, -1);
  std::vector<int> stack{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : covers_up[v]) {
      if (w == start) {
        std::string path = std::to_string(start);
        for (int u = v; u != -1; u = parent[u]) path = std::to_string(u) + " < " + path;
        return std::to_string(start) + " < " + path;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return std::to_string(start) + " < ... < " + std::to_string(start);
}

}  // namespace

FinitePoset FinitePoset::from_covers(int n, std::span<const std::pair<int, int>> covers) {
  require(n >= 1 && n <= kMaxPoints,
          "point count must be in [1, " + std::to_string(kMaxPoints) + "], got " + std::to_string(n));
  std::vector<PointSet> up(n);
  for (auto [i, j] : covers) {
    require(i >= 0 && i < n && j >= 0 && j < n,
            "cover pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    require(i != j, "cover pair (" + std::to_string(i) + ", " + std::to_string(i) + ") is reflexive");
    up[i].add(j);
  }

  FinitePoset p;
  p.n_ = n;
  p.above_ = up;
  // Warshall closure over single-word rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.above_[i].contains(k)) p.above_[i] |= p.above_[k];

  for (int i = 0; i < n; ++i)
    if (p.above_[i].contains(i))
      throw std::invalid_argument("covers close into a cycle: " + describe_cycle(n, up, i));

  p.below_.assign(n, PointSet());
  for (int i = 0; i < n; ++i)
    for (int j : p.above_[i]) p.below_[j].add(i);

  p.check_invariants();
  return p;
}

FinitePoset FinitePoset::from_covers(int n, std::initializer_list<std::pair<int, int>> covers) {
  return from_covers(n, std::span<const std::pair<int, int>>(covers.begin(), covers.size()));
}

FinitePoset FinitePoset::extend_with_maximum(const FinitePoset& base, PointSet down) {
  assert(base.n_ + 1 <= kMaxPoints);
  FinitePoset p;
  p.n_ = base.n_ + 1;
  int x = base.n_;
  p.below_ = base.below_;
  p.above_ = base.above_;
  p.below_.push_back(down);
  p.above_.push_back(PointSet());
  for (int d : down) {
    assert(base.below_[d].is_subset_of(down));  // down-closed
    p.above_[d].add(x);
  }
  return p;
}

PointSet FinitePoset::maximal_points() const {
  PointSet s;
  for (int x = 0; x < n_; ++x)
    if (above_[x].empty()) s.add(x);
  return s;
}

PointSet FinitePoset::minimal_points() const {
  PointSet s;
  for (int x = 0; x < n_; ++x)
    if (below_[x].empty()) s.add(x);
  return s;
}

PointSet FinitePoset::mid_points() const {
  return all_points() - maximal_points() - minimal_points();
}

int FinitePoset::height() const {
  // popcount(below) strictly increases along <, so it is a topological key.
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below_[a].count() < below_[b].count(); });
  std::vector<int> level(n_, 0);
  int h = 0;
  for (int x : order) {
    for (int y : below_[x]) level[x] = std::max(level[x], level[y] + 1);
    h = std::max(h, level[x]);
  }
  return h;
}

std::uint64_t FinitePoset::chain_count(int k) const {
  if (k < 0 || k >= n_) return 0;
  // ways[x] = number of chains of the current cardinality ending at x.
  std::vector<std::uint64_t> ways(n_, 1);
  for (int len = 1; len <= k; ++len) {
    std::vector<std::uint64_t> next(n_, 0);
    for (int x = 0; x < n_; ++x)
      for (int y : below_[x]) next[x] += ways[y];
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (int x = 0; x < n_; ++x) total += ways[x];
  return total;
}

long long FinitePoset::euler_characteristic() const {
  long long chi = 0;
  int h = height();
  for (int k = 0; k <= h; ++k) {
    long long c = static_cast<long long>(chain_count(k));
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

bool FinitePoset::is_connected() const {
  PointSet seen = PointSet::single(0);
  PointSet frontier = seen;
  while (!frontier.empty()) {
    PointSet next;
    for (int x : frontier) next |= link(x);
    frontier = next - seen;
    seen |= next;
  }
  return seen == all_points();
}

FinitePoset FinitePoset::opposite() const {
  FinitePoset p;
  p.n_ = n_;
  p.below_ = above_;
  p.above_ = below_;
  return p;
}

FinitePoset FinitePoset::nh_suspension() const {
  if (n_ + 2 > kMaxPoints)
    throw std::invalid_argument("suspension exceeds the " + std::to_string(kMaxPoints) + "-point cap");
  FinitePoset p;
  p.n_ = n_ + 2;
  p.below_ = below_;
  p.above_ = above_;
  PointSet old = all_points();
  p.below_.push_back(old);
  p.below_.push_back(old);
  p.above_.push_back(PointSet());
  p.above_.push_back(PointSet());
  PointSet tops = PointSet::single(n_) | PointSet::single(n_ + 1);
  for (int x = 0; x < n_; ++x) p.above_[x] |= tops;
  return p;
}

FinitePoset::Subspace FinitePoset::subspace(PointSet s) const {
  if (!s.is_subset_of(all_points()))
    throw std::invalid_argument("subspace points out of range");
  if (s.empty()) throw std::invalid_argument("subspace must be non-empty");
  std::vector<int> points = s.to_vector();
  int m = static_cast<int>(points.size());
  FinitePoset p;
  p.n_ = m;
  p.below_.resize(m);
  p.above_.resize(m);
  std::vector<int> new_index(n_, -1);
  for (int i = 0; i < m; ++i) new_index[points[i]] = i;
  for (int i = 0; i < m; ++i) {
    for (int old : below_[points[i]] & s) p.below_[i].add(new_index[old]);
    for (int old : above_[points[i]] & s) p.above_[i].add(new_index[old]);
  }
  return Subspace{std::move(p), std::move(points)};
}

int FinitePoset::relation_size() const {
  int total = 0;
  for (int x = 0; x < n_; ++x) total += below_[x].count();
  return total;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int j = 0; j < n_; ++j) {
    for (int i : below_[j]) {
      // i is covered by j iff nothing sits strictly between them.
      if ((above_[i] & below_[j]).empty()) covers.emplace_back(i, j);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

void FinitePoset::check_invariants() const {
  for (int x = 0; x < n_; ++x) {
    if (below_[x].contains(x)) throw std::logic_error("irreflexivity violated at " + std::to_string(x));
    if (!((below_[x] & above_[x]).empty()))
      throw std::logic_error("antisymmetry violated at " + std::to_string(x));
    for (int b : below_[x])
      if (!below_[b].is_subset_of(below_[x]))
        throw std::logic_error("transitivity violated below " + std::to_string(x));
    for (int a : below_[x])
      if (!above_[a].contains(x))
        throw std::logic_error("mirror consistency violated at " + std::to_string(x));
    for (int a : above_[x])
      if (!below_[a].contains(x))
        throw std::logic_error("mirror consistency violated at " + std::to_string(x));
  }
}

FinitePoset permute(const FinitePoset& x, std::span<const int> perm) {
  int n = x.size();
  std::vector<std::pair<int, int>> relations;
  for (int j = 0; j < n; ++j)
    for (int i : x.down_set(j)) relations.emplace_back(perm[i], perm[j]);
  return FinitePoset::from_covers(n, relations);
}

}  // namespace fintop
