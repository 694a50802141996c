#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fintop/poset.hpp"

namespace fintop {

/// Isomorphism-invariant key for a poset: the point count followed by the
/// row-major bits of the strict-order matrix under the canonical
/// labelling. Equal bytes <=> isomorphic posets.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

struct CanonicalInfo {
  CanonicalForm form;
  /// canonical_order[position] = original point index.
  std::vector<int> canonical_order;
  /// Representative (lowest point index) of each point's automorphism orbit.
  std::vector<int> orbit;
  /// Full automorphism list (as point maps), only when requested.
  std::vector<std::vector<int>> automorphisms;
};

CanonicalForm canonical_form(const FinitePoset& x);

/// Canonical labelling by equitable partition refinement over
/// (down-degree, up-degree) cell counts with individualization
/// backtracking; ties are broken by the lexicographically minimal
/// strict-order matrix encoding.
CanonicalInfo canonicalize(const FinitePoset& x, bool collect_automorphisms = false);

/// Rebuilds the canonically-labelled poset a form encodes.
FinitePoset poset_from_canonical_form(const CanonicalForm& form);

}  // namespace fintop
