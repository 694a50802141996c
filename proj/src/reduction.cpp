#include "fintop/reduction.hpp"

#include <numeric>

#include "fintop/canonical.hpp"

namespace fintop {

namespace {

// m is the minimum of s iff every other member sits strictly above m.
bool has_minimum(const FinitePoset& x, PointSet s) {
  for (int m : s)
    if ((s - PointSet::single(m)).is_subset_of(x.up_set(m))) return true;
  return false;
}

bool has_maximum(const FinitePoset& x, PointSet s) {
  for (int m : s)
    if ((s - PointSet::single(m)).is_subset_of(x.down_set(m))) return true;
  return false;
}

}  // namespace

bool is_up_beat_point(const FinitePoset& x, int p) {
  PointSet f = x.up_set(p);
  return !f.empty() && has_minimum(x, f);
}

bool is_down_beat_point(const FinitePoset& x, int p) {
  PointSet u = x.down_set(p);
  return !u.empty() && has_maximum(x, u);
}

bool is_beat_point(const FinitePoset& x, int p) {
  return is_up_beat_point(x, p) || is_down_beat_point(x, p);
}

int find_beat_point(const FinitePoset& x) {
  for (int p = 0; p < x.size(); ++p)
    if (is_beat_point(x, p)) return p;
  return -1;
}

namespace {

CoreResult reduce(const FinitePoset& x, std::span<const int> choice_ranks) {
  CoreResult result;
  result.survivors.resize(x.size());
  std::iota(result.survivors.begin(), result.survivors.end(), 0);
  FinitePoset current = x;
  std::size_t step = 0;
  while (current.size() > 1) {
    std::vector<std::pair<int, BeatKind>> beats;
    for (int p = 0; p < current.size(); ++p) {
      if (is_up_beat_point(current, p)) beats.emplace_back(p, BeatKind::Up);
      else if (is_down_beat_point(current, p)) beats.emplace_back(p, BeatKind::Down);
    }
    if (beats.empty()) break;
    std::size_t pick = 0;
    if (step < choice_ranks.size())
      pick = static_cast<std::size_t>(choice_ranks[step]) % beats.size();
    auto [p, kind] = beats[pick];
    result.removed.emplace_back(result.survivors[p], kind);
    result.survivors.erase(result.survivors.begin() + p);
    current = current.subspace(current.all_points() - PointSet::single(p)).poset;
    ++step;
  }
  result.core = std::move(current);
  return result;
}

}  // namespace

CoreResult core(const FinitePoset& x) { return reduce(x, {}); }

CoreResult core_with_choice(const FinitePoset& x, std::span<const int> choice_ranks) {
  return reduce(x, choice_ranks);
}

bool is_contractible(const FinitePoset& x) { return core(x).core.size() == 1; }

bool homotopy_equivalent(const FinitePoset& x, const FinitePoset& y) {
  return canonical_form(core(x).core) == canonical_form(core(y).core);
}

}  // namespace fintop
