#include <doctest.h>

#include <stdexcept>

#include "fintop/poset_io.hpp"
#include "fintop/spaces.hpp"
#include "support/oracles.hpp"

using namespace fintop;

namespace {

const char* kW9Text =
    "poset w9\n"
    "points 9\n"
    "covers\n"
    "3 0\n3 1\n4 0\n4 2\n5 1\n5 2\n6 3\n6 4\n7 3\n7 4\n7 5\n8 4\n8 5\n";

}  // namespace

TEST_CASE("parsing the nine-point space") {
  PosetDocument doc = parse_poset_text(kW9Text);
  CHECK(doc.name == "w9");
  CHECK(doc.poset == w9());
}

TEST_CASE("comments and blank lines are ignored") {
  PosetDocument doc = parse_poset_text(
      "# a comment\n\nposet s0   # trailing\n\npoints 2\ncovers\n# nothing below\n\n");
  CHECK(doc.name == "s0");
  CHECK(doc.poset == antichain(2));
}

TEST_CASE("serialize then parse is the identity, and serialization is canonical") {
  PosetDocument doc = parse_poset_text(kW9Text);
  std::string text = serialize_poset(doc);
  CHECK(text == kW9Text);
  CHECK(serialize_poset(parse_poset_text(text)) == text);

  // Redundant (non-cover) pairs disappear after one round trip.
  PosetDocument chainy = parse_poset_text("poset c\npoints 3\ncovers\n0 1\n1 2\n0 2\n");
  CHECK(serialize_poset(chainy) == "poset c\npoints 3\ncovers\n0 1\n1 2\n");
}

TEST_CASE("round trip over every small class") {
  for (const FinitePoset& p : testing::classes_up_to(5)) {
    PosetDocument doc;
    doc.name = "t";
    doc.poset = p;
    PosetDocument back = parse_poset_text(serialize_poset(doc));
    CHECK(back.poset == p);
  }
}

TEST_CASE("parse errors carry a line diagnostic") {
  CHECK_THROWS_WITH_AS(parse_poset_text("points 3\n"), doctest::Contains("line 1"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_poset_text("poset x\npoints 2\ncovers\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset_text("poset x\npoints 2\ncovers\n0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset_text("poset x\npoints 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset_text("poset x\npoints 2\ncovers\n0 1\n1 0\n"),
                  std::invalid_argument);  // cycle surfaces from the builder
  CHECK_THROWS_AS(parse_poset_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset_text("poset two words\npoints 1\ncovers\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset_text("poset x\npoints 2 3\ncovers\n"), std::invalid_argument);
}

TEST_CASE("opposite twice is byte-exact") {
  PosetDocument doc = parse_poset_text(kW9Text);
  PosetDocument once = doc;
  once.poset = once.poset.opposite();
  PosetDocument twice = once;
  twice.poset = twice.poset.opposite();
  CHECK(serialize_poset(twice) == serialize_poset(doc));
  CHECK(serialize_poset(once) != serialize_poset(doc));
}

TEST_CASE("suspension serializes to the sphere models") {
  PosetDocument s0 = parse_poset_text("poset s\npoints 2\ncovers\n");
  PosetDocument s2 = s0;
  s2.poset = s2.poset.nh_suspension().nh_suspension();
  PosetDocument reparsed = parse_poset_text(serialize_poset(s2));
  CHECK(reparsed.poset == sphere_model(2));
}

TEST_CASE("DOT export") {
  PosetDocument doc = parse_poset_text(kW9Text);
  std::string dot = export_dot(doc);
  CHECK(dot.find("digraph \"w9\"") != std::string::npos);
  std::size_t edges = 0, ranks = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) ++edges;
  for (std::size_t at = dot.find("rank=same"); at != std::string::npos;
       at = dot.find("rank=same", at + 1))
    ++ranks;
  CHECK(edges == 13);
  CHECK(ranks == 3);

  PosetDocument single;
  single.name = "pt";
  single.poset = FinitePoset::from_covers(1, {});
  std::string pt = export_dot(single);
  CHECK(pt.find("->") == std::string::npos);
  CHECK(pt.find("p0") != std::string::npos);

  PosetDocument c3;
  c3.name = "c3";
  c3.poset = chain(3);
  std::string chain_dot = export_dot(c3);
  std::size_t chain_edges = 0;
  for (std::size_t at = chain_dot.find("->"); at != std::string::npos;
       at = chain_dot.find("->", at + 1))
    ++chain_edges;
  CHECK(chain_edges == 2);  // 0 < 2 suppressed by the reduction
}
