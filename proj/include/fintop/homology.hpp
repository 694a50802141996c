#pragma once

#include <string>
#include <vector>

#include "fintop/complex.hpp"
#include "fintop/poset.hpp"

namespace fintop {

/// Finitely generated abelian group, kept in invariant-factor form:
/// torsion entries are >= 2 and each divides the next.
struct AbelianGroup {
  int rank = 0;
  std::vector<long long> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string to_string() const;
};

/// Direct sum, renormalized to invariant-factor form. Equality of the
/// normalized pairs (rank, torsion) is group isomorphism.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Homology groups per degree. `degree_minus_one` is non-trivial only
/// for the reduced homology of the empty complex.
struct HomologyProfile {
  std::vector<AbelianGroup> groups;
  AbelianGroup degree_minus_one;

  const AbelianGroup& at(int degree) const;
  int top_degree() const { return static_cast<int>(groups.size()) - 1; }
  bool all_trivial() const;
  /// Alternating sum of ranks.
  long long euler_characteristic() const;
  std::string to_string() const;
};

/// Integral simplicial homology from Smith normal forms of the boundary
/// matrices; `reduced` augments the complex over degree -1.
HomologyProfile homology(const OrderComplex& k, bool reduced);

/// Reduced homology of the subspace induced on s (s may be empty, giving
/// the empty complex whose reduced homology is Z in degree -1).
HomologyProfile reduced_subspace_homology(const FinitePoset& x, PointSet s);

/// H_*(X, A) from the quotient chain complex: columns of simplices lying
/// inside A are deleted.
HomologyProfile relative_homology_profile(const FinitePoset& x, PointSet a);
AbelianGroup relative_homology(const FinitePoset& x, PointSet a, int degree);

bool is_antichain(const FinitePoset& x, PointSet d);

/// Relative-homology splitting over an antichain D: checks, for every
/// degree n <= h(X)+1, that H_n(X, X-D) is isomorphic to the direct sum
/// over x in D of the reduced homology of the punctured link of x in
/// degree n-1. Throws std::invalid_argument when D is not an antichain.
bool check_antichain_splitting(const FinitePoset& x, PointSet d);

}  // namespace fintop
