#pragma once

#include "fintop/poset.hpp"

namespace fintop {

/// x is an up beat point iff its strict up-set is non-empty and has a
/// minimum; dually for down beat points. Beat points can be removed
/// without changing the homotopy type.
bool is_up_beat_point(const FinitePoset& x, int p);
bool is_down_beat_point(const FinitePoset& x, int p);
bool is_beat_point(const FinitePoset& x, int p);

/// Any beat point of the poset, or -1. Scans in index order.
int find_beat_point(const FinitePoset& x);

enum class BeatKind { Up, Down };

struct CoreResult {
  FinitePoset core;
  /// Removed points in removal order, as indices of the original space.
  std::vector<std::pair<int, BeatKind>> removed;
  /// Original index of each core point.
  std::vector<int> survivors;
};

/// Deformation-retracts to the beat-point-free core by repeatedly
/// removing the lowest-index beat point. The result is unique up to
/// homeomorphism regardless of removal order.
CoreResult core(const FinitePoset& x);

/// Variant that removes, at each step, the beat point of the given rank
/// among the currently available ones (rank taken modulo their number).
/// Exists so tests can randomize the removal order.
CoreResult core_with_choice(const FinitePoset& x, std::span<const int> choice_ranks);

/// Core is a single point.
bool is_contractible(const FinitePoset& x);

/// Homotopy equivalence of finite spaces: cores are homeomorphic.
bool homotopy_equivalent(const FinitePoset& x, const FinitePoset& y);

}  // namespace fintop
