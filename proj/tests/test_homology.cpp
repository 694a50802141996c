#include <doctest.h>

#include <stdexcept>

#include "fintop/homology.hpp"
#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"
#include "support/oracles.hpp"

using namespace fintop;

TEST_CASE("sphere models have one reduced homology class") {
  for (int n = 1; n <= 3; ++n) {
    HomologyProfile h = homology(order_complex(sphere_model(n)), true);
    for (int k = 0; k <= h.top_degree(); ++k) {
      if (k == n) {
        CHECK(h.at(k).rank == 1);
        CHECK(h.at(k).torsion.empty());
      } else {
        CHECK(h.at(k).trivial());
      }
    }
  }
}

TEST_CASE("the nine-point space is acyclic") {
  HomologyProfile h = homology(order_complex(w9()), true);
  CHECK(h.all_trivial());
  HomologyProfile hop = homology(order_complex(w9_opposite()), true);
  CHECK(hop.all_trivial());
}

TEST_CASE("a vertex and the empty complex") {
  HomologyProfile point = homology(order_complex(FinitePoset::from_covers(1, {})), true);
  CHECK(point.all_trivial());
  HomologyProfile unreduced = homology(order_complex(FinitePoset::from_covers(1, {})), false);
  CHECK(unreduced.at(0).rank == 1);

  OrderComplex empty;
  HomologyProfile reduced_empty = homology(empty, true);
  CHECK(reduced_empty.at(-1).rank == 1);  // reduced homology of the void complex
  CHECK(homology(empty, false).all_trivial());
}

TEST_CASE("unreduced rank in degree zero counts components") {
  FinitePoset two = antichain(2);
  CHECK(homology(order_complex(two), false).at(0).rank == 2);
  CHECK(homology(order_complex(two), true).at(0).rank == 1);
}

TEST_CASE("Euler-Poincare: alternating betti sum equals the chain-count characteristic") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    HomologyProfile h = homology(order_complex(p), false);
    CHECK(h.euler_characteristic() == p.euler_characteristic());
  }
}

TEST_CASE("homology is invariant under opposite") {
  for (const FinitePoset& p : testing::classes_up_to(5)) {
    HomologyProfile a = homology(order_complex(p), true);
    HomologyProfile b = homology(order_complex(p.opposite()), true);
    REQUIRE(a.top_degree() == b.top_degree());
    for (int k = 0; k <= a.top_degree(); ++k) CHECK(a.at(k) == b.at(k));
  }
}

TEST_CASE("relative homology of the circle model rel a punctured circle") {
  // D = one maximal point; the complement is contractible, so
  // H_n(X, X-D) is the reduced homology of the circle.
  FinitePoset s1 = sphere_model(1);
  PointSet d = PointSet::single(3);
  PointSet a = s1.all_points() - d;
  REQUIRE(is_contractible(s1.subspace(a).poset));
  CHECK(relative_homology(s1, a, 0).trivial());
  CHECK(relative_homology(s1, a, 1).rank == 1);
  CHECK(relative_homology(s1, a, 1).torsion.empty());
  CHECK(relative_homology(s1, a, 2).trivial());
}

TEST_CASE("relative homology rel the whole space vanishes") {
  FinitePoset p = w9();
  HomologyProfile h = relative_homology_profile(p, p.all_points());
  CHECK(h.all_trivial());
}

TEST_CASE("relative homology rel everything-but-a-mid-point matches the punctured link") {
  FinitePoset p = w9();
  PointSet d = PointSet::single(5);  // b3
  HomologyProfile left = relative_homology_profile(p, p.all_points() - d);
  HomologyProfile link = reduced_subspace_homology(p, p.link(5));
  // The link of b3 is a four-point fence: one reduced circle class.
  CHECK(link.at(0).trivial());
  CHECK(link.at(1).rank == 1);
  for (int n = 0; n <= p.height() + 1; ++n) CHECK(left.at(n) == link.at(n - 1));
  CHECK(left.at(2).rank == 1);
}

TEST_CASE("relative homology rel a contractible subspace is reduced homology") {
  for (const FinitePoset& p : testing::classes_up_to(5)) {
    HomologyProfile reduced = homology(order_complex(p), true);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
      PointSet a(mask);
      if (!is_contractible(p.subspace(a).poset)) continue;
      HomologyProfile rel = relative_homology_profile(p, a);
      for (int n = 0; n <= p.height() + 1; ++n) CHECK(rel.at(n) == reduced.at(n));
    }
  }
}

TEST_CASE("antichain splitting holds exhaustively on small spaces") {
  for (const FinitePoset& p : testing::classes_up_to(4)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
      PointSet d(mask);
      if (!is_antichain(p, d)) continue;
      CHECK(check_antichain_splitting(p, d));
    }
  }
}

TEST_CASE("antichain splitting requires an antichain") {
  FinitePoset c = chain(3);
  CHECK_THROWS_AS(check_antichain_splitting(c, PointSet::single(0) | PointSet::single(2)),
                  std::invalid_argument);
  CHECK(check_antichain_splitting(c, PointSet()));  // empty antichain, both sides zero
}

TEST_CASE("splitting on the nine-point configuration with a chained mid level") {
  // Three maxima 0..2, mids 3..5 with 3 < 4, minima 6..8; the two deep
  // minima see every upper point. D = {6, 8} splits H2 into the two
  // punctured-link circles, of which exactly one is non-trivial.
  FinitePoset x = FinitePoset::from_covers(
      9, {{3, 4}, {4, 0}, {4, 1}, {3, 2}, {5, 1}, {5, 2}, {6, 3}, {6, 5}, {7, 3}, {7, 5}, {8, 4}});
  PointSet d = PointSet::single(6) | PointSet::single(8);
  REQUIRE(is_antichain(x, d));
  CHECK(check_antichain_splitting(x, d));

  AbelianGroup link_deep = reduced_subspace_homology(x, x.link(6)).at(1);
  AbelianGroup link_shallow = reduced_subspace_homology(x, x.link(8)).at(1);
  CHECK(link_deep.rank == 1);
  CHECK(link_shallow.trivial());

  // F_{c2} is a cone, so relative homology rel it recovers H2(X).
  PointSet cone = PointSet::single(7) | x.up_set(7);
  AbelianGroup h2 = homology(order_complex(x), true).at(2);
  CHECK(h2.rank == 1);
  CHECK(relative_homology(x, cone, 2) == h2);
  CHECK(h2 == direct_sum(link_deep, link_shallow));
}

TEST_CASE("direct sum normalizes torsion to invariant factors") {
  AbelianGroup z2{0, {2}}, z3{0, {3}}, z4{0, {4}}, z6{0, {6}};
  CHECK(direct_sum(z2, z3) == z6);
  AbelianGroup s = direct_sum(z4, z6);
  CHECK(s.torsion == std::vector<long long>{2, 12});
  AbelianGroup free2{2, {}};
  CHECK(direct_sum(free2, z2).rank == 2);
  CHECK(AbelianGroup{0, {2}}.to_string() == "Z/2");
  CHECK(AbelianGroup{1, {}}.to_string() == "Z");
  CHECK(AbelianGroup{}.to_string() == "0");
}

TEST_CASE("subspaces of the nine-point space have no second homology (sample)") {
  FinitePoset p = w9();
  for (std::uint64_t mask = 1; mask < 512; mask += 7) {
    HomologyProfile h = reduced_subspace_homology(p, PointSet(mask));
    CHECK(h.at(2).trivial());
  }
}
