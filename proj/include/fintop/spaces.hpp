#pragma once

#include "fintop/poset.hpp"

namespace fintop {

/// n pairwise incomparable points.
FinitePoset antichain(int n);

/// Chain 0 < 1 < ... < n-1.
FinitePoset chain(int n);

/// k-fold non-Hausdorff suspension of the two-point antichain: the
/// minimal finite model of the k-sphere, on 2k+2 points.
FinitePoset sphere_model(int k);

/// The nine-point homotopically trivial non-contractible space: three
/// maxima a1..a3, three mid points b1..b3, three minima c1..c3, with
/// b1 < a1,a2; b2 < a1,a3; b3 < a2,a3; c1 < b1,b2; c2 < b1,b2,b3;
/// c3 < b2,b3. Indices: a=0..2, b=3..5, c=6..8.
FinitePoset w9();

/// Opposite of w9(); not homeomorphic to it.
FinitePoset w9_opposite();

}  // namespace fintop
