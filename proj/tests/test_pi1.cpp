#include <doctest.h>

#include <stdexcept>

#include "fintop/pi1.hpp"
#include "fintop/reduction.hpp"
#include "fintop/spaces.hpp"
#include "support/oracles.hpp"

using namespace fintop;

TEST_CASE("edge-path presentation of the four-cycle is free of rank one") {
  GroupPresentation p = edge_path_presentation(order_complex(sphere_model(1)), 0);
  CHECK(p.generators == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("a filled triangle presents the trivial group") {
  // The order complex of a 3-chain is a full triangle with its faces.
  GroupPresentation p = edge_path_presentation(order_complex(chain(3)), 0);
  CHECK(p.generators == 1);
  REQUIRE(p.relators.size() == 1);
  TrivialityResult r = tietze_trivialize(p, 100);
  CHECK(r.verdict == Verdict::Trivial);
  REQUIRE(r.tietze);
  CHECK(replay_tietze(*r.tietze));
}

TEST_CASE("presentation of the nine-point space has fourteen of each") {
  GroupPresentation p = edge_path_presentation(order_complex(w9()), 0);
  CHECK(p.generators == 22 - 8);  // edges minus spanning tree
  CHECK(p.relators.size() == 14);
  TrivialityResult r = tietze_trivialize(p, kDefaultTietzeBudget);
  CHECK(r.verdict == Verdict::Trivial);
  REQUIRE(r.tietze);
  CHECK(replay_tietze(*r.tietze));
}

TEST_CASE("disconnected complexes have no edge-path presentation") {
  CHECK_THROWS_AS(edge_path_presentation(order_complex(antichain(2)), 0), std::invalid_argument);
  CHECK_THROWS_AS(edge_path_presentation(order_complex(chain(2)), 5), std::invalid_argument);
}

TEST_CASE("abelianized presentation matches first homology") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    if (!p.is_connected()) continue;
    OrderComplex k = order_complex(p);
    AbelianGroup from_pi1 = abelianization(edge_path_presentation(k, 0));
    AbelianGroup h1 = homology(k, true).at(1);
    CHECK(from_pi1 == h1);
  }
}

TEST_CASE("greedy collapse certifies the nine-point space") {
  OrderComplex k = order_complex(w9());
  auto cert = try_collapse(k);
  REQUIRE(cert);
  CHECK(cert->steps.size() == 22);  // (45 - 1) / 2 elementary collapses
  CHECK(replay_collapse(k, *cert));
}

TEST_CASE("tampered collapse certificates are rejected") {
  OrderComplex k = order_complex(w9());
  auto cert = try_collapse(k);
  REQUIRE(cert);
  CollapseCertificate broken = *cert;
  std::swap(broken.steps.front(), broken.steps.back());
  CHECK_FALSE(replay_collapse(k, broken));
  CollapseCertificate truncated = *cert;
  truncated.steps.pop_back();
  CHECK_FALSE(replay_collapse(k, truncated));
}

TEST_CASE("single simplices collapse, cycles do not") {
  CHECK(try_collapse(order_complex(chain(4))));
  CHECK(try_collapse(order_complex(FinitePoset::from_covers(1, {}))));
  CHECK_FALSE(try_collapse(order_complex(sphere_model(1))));  // no free faces on a cycle
  CHECK_FALSE(try_collapse(order_complex(sphere_model(2))));
}

TEST_CASE("two triangles sharing an edge collapse") {
  OrderComplex k;
  k.vertex_count = 4;
  k.simplices = {
      {{0}, {1}, {2}, {3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
      {{0, 1, 2}, {0, 1, 3}},
  };
  auto cert = try_collapse(k);
  REQUIRE(cert);
  CHECK(replay_collapse(k, *cert));
  TrivialityResult r = decide_trivial_pi1(k, 100);
  CHECK(r.verdict == Verdict::Trivial);
  CHECK(r.route == TrivialityRoute::Collapse);
}

TEST_CASE("pi1 pipeline verdicts") {
  TrivialityResult w = decide_trivial_pi1(order_complex(w9()), kDefaultTietzeBudget);
  CHECK(w.verdict == Verdict::Trivial);
  CHECK(w.route == TrivialityRoute::Collapse);
  REQUIRE(w.collapse);
  CHECK(replay_collapse(order_complex(w9()), *w.collapse));

  TrivialityResult circle = decide_trivial_pi1(order_complex(sphere_model(1)), kDefaultTietzeBudget);
  CHECK(circle.verdict == Verdict::Nontrivial);
  CHECK(circle.witness_degree == 1);
  CHECK(circle.witness.rank == 1);
}

TEST_CASE("tietze engine handles hand-made presentations") {
  // <a, b | a b^-1, b> is trivial.
  GroupPresentation easy;
  easy.generators = 2;
  easy.relators = {{1, -2}, {2}};
  easy.alive = {true, true};
  TrivialityResult r = tietze_trivialize(easy, 100);
  CHECK(r.verdict == Verdict::Trivial);
  REQUIRE(r.tietze);
  CHECK(replay_tietze(*r.tietze));

  // Budget zero must give an honest Unknown.
  TrivialityResult starved = tietze_trivialize(easy, 0);
  CHECK(starved.verdict == Verdict::Unknown);

  // A relator that frees itself: a a a^-1 reduces to a.
  GroupPresentation loop;
  loop.generators = 1;
  loop.relators = {{1, 1, -1}};
  loop.alive = {true};
  CHECK(tietze_trivialize(loop, 100).verdict == Verdict::Trivial);

  // Duplicate relators cancel through the overlap move.
  GroupPresentation dup;
  dup.generators = 2;
  dup.relators = {{1, 2, -1, -2}, {1, 2, -1, -2}, {1}, {2}};
  dup.alive = {true, true};
  TrivialityResult d = tietze_trivialize(dup, 1000);
  CHECK(d.verdict == Verdict::Trivial);
  REQUIRE(d.tietze);
  CHECK(replay_tietze(*d.tietze));
}

TEST_CASE("free and cyclic reduction") {
  CHECK(GroupPresentation::free_reduce({1, -1}) == std::vector<int>{});
  CHECK(GroupPresentation::free_reduce({1, 2, -2, -1, 3}) == std::vector<int>{3});
  CHECK(GroupPresentation::cyclic_reduce({1, 2, -1}) == std::vector<int>{2});
  CHECK(GroupPresentation::invert({1, -2}) == std::vector<int>{2, -1});
}

TEST_CASE("homotopical triviality verdicts") {
  TrivialityResult w = is_homotopically_trivial(w9());
  CHECK(w.verdict == Verdict::Trivial);
  CHECK(w.route == TrivialityRoute::Collapse);

  TrivialityResult s3 = is_homotopically_trivial(sphere_model(3));
  CHECK(s3.verdict == Verdict::Nontrivial);
  CHECK(s3.witness_degree == 3);
  CHECK(s3.witness.rank == 1);

  TrivialityResult c = is_homotopically_trivial(chain(4));
  CHECK(c.verdict == Verdict::Trivial);
  CHECK(c.route == TrivialityRoute::Contractible);

  CHECK(is_homotopically_trivial(antichain(2)).verdict == Verdict::Nontrivial);
}

TEST_CASE("disconnected spaces are never homotopically trivial") {
  for (const FinitePoset& p : testing::classes_up_to(5)) {
    if (p.is_connected()) continue;
    TrivialityResult r = is_homotopically_trivial(p);
    CHECK(r.verdict == Verdict::Nontrivial);
    CHECK(r.witness_degree == 0);
  }
}

TEST_CASE("contractible spaces are homotopically trivial, with certificates replayable") {
  for (const FinitePoset& p : testing::classes_up_to(6)) {
    TrivialityResult r = is_homotopically_trivial(p);
    if (is_contractible(p)) {
      CHECK(r.verdict == Verdict::Trivial);
      CHECK(r.route == TrivialityRoute::Contractible);
    }
    if (r.verdict == Verdict::Trivial && r.route == TrivialityRoute::Collapse) {
      REQUIRE(r.collapse);
      CHECK(replay_collapse(order_complex(core(p).core), *r.collapse));
    }
    if (r.verdict == Verdict::Trivial && r.route == TrivialityRoute::Tietze) {
      REQUIRE(r.tietze);
      CHECK(replay_tietze(*r.tietze));
    }
  }
}
