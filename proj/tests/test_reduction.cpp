#include <doctest.h>

#include <random>

#include "fintop/canonical.hpp"
#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"
#include "support/oracles.hpp"

using namespace fintop;

TEST_CASE("beat points of a chain") {
  FinitePoset c = chain(3);
  CHECK(is_up_beat_point(c, 1));    // strict up-set {2} has a minimum
  CHECK(is_down_beat_point(c, 1));  // strict down-set {0} has a maximum
  CHECK(is_up_beat_point(c, 0));
  CHECK_FALSE(is_up_beat_point(c, 2));
  CHECK(is_down_beat_point(c, 2));
}

TEST_CASE("the nine-point space and the sphere models have no beat points") {
  for (int p = 0; p < 9; ++p) {
    CHECK_FALSE(is_up_beat_point(w9(), p));
    CHECK_FALSE(is_down_beat_point(w9(), p));
  }
  for (int k = 0; k <= 3; ++k) {
    FinitePoset s = sphere_model(k);
    CHECK(find_beat_point(s) == -1);
  }
}

TEST_CASE("core of a chain is a point, core of the nine-point space is itself") {
  CoreResult chain_core = core(chain(3));
  CHECK(chain_core.core.size() == 1);
  CHECK(chain_core.removed.size() == 2);

  CoreResult w = core(w9());
  CHECK(w.core.size() == 9);
  CHECK(w.removed.empty());
  CHECK(w.core == w9());

  for (int k = 0; k <= 3; ++k) CHECK(core(sphere_model(k)).core == sphere_model(k));
}

TEST_CASE("core is idempotent and never grows") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    CoreResult first = core(p);
    CHECK(first.core.size() <= p.size());
    CHECK((first.core.size() == p.size()) == (find_beat_point(p) == -1));
    CoreResult second = core(first.core);
    CHECK(second.core == first.core);
    CHECK(second.removed.empty());
  }
}

TEST_CASE("removal trace is a replayable deformation record") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    CoreResult r = core(p);
    CHECK(r.removed.size() + r.survivors.size() == static_cast<std::size_t>(p.size()));
    PointSet survivors;
    for (int v : r.survivors) survivors.add(v);
    CHECK(p.subspace(survivors).poset == r.core);
    // Each removed point is a beat point of the space left at its turn.
    PointSet remaining = p.all_points();
    for (auto [original, kind] : r.removed) {
      auto sub = p.subspace(remaining);
      int local = -1;
      for (std::size_t i = 0; i < sub.points.size(); ++i)
        if (sub.points[i] == original) local = static_cast<int>(i);
      REQUIRE(local != -1);
      if (kind == BeatKind::Up) CHECK(is_up_beat_point(sub.poset, local));
      else CHECK(is_down_beat_point(sub.poset, local));
      remaining.remove(original);
    }
  }
}

TEST_CASE("core does not depend on the removal order") {
  std::mt19937_64 rng(2024);
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    CanonicalForm reference = canonical_form(core(p).core);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> ranks(p.size());
      for (int& r : ranks) r = static_cast<int>(rng() % 97);
      CHECK(canonical_form(core_with_choice(p, ranks).core) == reference);
    }
  }
}

TEST_CASE("random removal order on a seven-point sample") {
  std::mt19937_64 rng(5);
  EnumerationFilter any;
  std::vector<FinitePoset> sample;
  enumerate_posets(7, any, [&](const FinitePoset& p) {
    if (rng() % 16 == 0) sample.push_back(p);
  });
  REQUIRE(sample.size() > 50);
  for (const FinitePoset& p : sample) {
    CanonicalForm reference = canonical_form(core(p).core);
    std::vector<int> ranks(p.size());
    for (int& r : ranks) r = static_cast<int>(rng() % 97);
    CHECK(canonical_form(core_with_choice(p, ranks).core) == reference);
  }
}

TEST_CASE("cores are large: size at least twice the height plus two") {
  for (const FinitePoset& p : testing::classes_up_to(7)) {
    if (p.size() < 2 || find_beat_point(p) != -1) continue;
    int h = p.height();
    CHECK(p.size() >= 2 * h + 2);
    if (p.size() == 2 * h + 2) CHECK(canonical_form(p) == canonical_form(sphere_model(h)));
  }
}

TEST_CASE("cardinality gaps along comparabilities in cores") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    if (find_beat_point(p) != -1) continue;
    for (int b = 0; b < p.size(); ++b)
      for (int a : p.up_set(b)) {
        CHECK(p.down_set(a).count() >= p.down_set(b).count() + 2);
        CHECK(p.up_set(b).count() >= p.up_set(a).count() + 2);
      }
  }
}

TEST_CASE("non-extremal points of a core see two extremes on each side") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    if (find_beat_point(p) != -1) continue;
    PointSet mxl = p.maximal_points();
    PointSet mnl = p.minimal_points();
    for (int v = 0; v < p.size(); ++v) {
      if (!mxl.contains(v)) CHECK((p.up_set(v) & mxl).count() >= 2);
      if (!mnl.contains(v)) CHECK((p.down_set(v) & mnl).count() >= 2);
    }
  }
}

TEST_CASE("a core with two maxima is a suspension") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    if (find_beat_point(p) != -1 || p.maximal_points().count() != 2) continue;
    PointSet base = p.all_points() - p.maximal_points();
    CanonicalForm expected = base.empty()
                                 ? canonical_form(antichain(2))
                                 : canonical_form(p.subspace(base).poset.nh_suspension());
    CHECK(canonical_form(p) == expected);
  }
}

TEST_CASE("contractibility") {
  CHECK(is_contractible(FinitePoset::from_covers(1, {})));
  CHECK(is_contractible(chain(5)));
  CHECK_FALSE(is_contractible(w9()));
  CHECK_FALSE(is_contractible(sphere_model(1)));

  // Anything with a maximum is contractible.
  for (const FinitePoset& p : testing::classes_up_to(5)) {
    std::vector<std::pair<int, int>> covers = p.cover_pairs();
    for (int v = 0; v < p.size(); ++v) covers.emplace_back(v, p.size());
    CHECK(is_contractible(FinitePoset::from_covers(p.size() + 1, covers)));
  }
}

TEST_CASE("homotopy equivalence via cores") {
  CHECK(homotopy_equivalent(chain(5), FinitePoset::from_covers(1, {})));
  CHECK_FALSE(homotopy_equivalent(w9(), w9_opposite()));
  for (const FinitePoset& p : testing::classes_up_to(5)) {
    CHECK(homotopy_equivalent(p, core(p).core));
    CHECK(homotopy_equivalent(p.nh_suspension(), core(p).core.nh_suspension()));
  }
}
