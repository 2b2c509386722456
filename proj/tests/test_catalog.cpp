// SPDX-License-Identifier: MIT
// Every fixture agrees with the invariants recorded in its file.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dpl/catalog.hpp"
#include "dpl/chirotope.hpp"

using namespace dpl;

TEST_CASE("fixture self-consistency") {
  const auto cat = Catalog::load();
  CHECK(cat.all().size() >= 21);
  ClassNamer namer;
  for (const auto* f : cat.simple_classes()) namer.add(f->name, f->arrangement);
  for (const auto& f : cat.all()) {
    CAPTURE(f.name);
    const auto& a = f.arrangement;
    if (auto g = f.get_int("genus")) CHECK(a.genus() == *g);
    if (auto fv = f.expected_face_vector()) CHECK(a.face_vector() == *fv);
    if (auto aut = f.get_int("aut")) CHECK(automorphism_order(a.flags()) == static_cast<std::size_t>(*aut));
    if (auto orb = f.get_int("orbits")) CHECK(orbit_count(a.flags()) == static_cast<std::uint64_t>(*orb));
    if (auto nodes = f.get_int("nodes")) CHECK(a.num_nodes() == *nodes);
    for (const auto& line : f.lines("chi")) {
      const auto colon = line.find(':');
      REQUIRE(colon != std::string::npos);
      auto t = detail::parse_ints(line.substr(0, colon));
      REQUIRE(t.size() == 3);
      const auto expected = namer.parse_entry(line.substr(colon + 1));
      CHECK(restriction(a, t).same_cycles(expected));
    }
    if (auto m = f.get("martagon")) {
      for (int i : detail::parse_ints(*m)) CHECK(is_martagon(a, i));
    }
  }
}

TEST_CASE("the thirteen simple classes") {
  const auto cat = Catalog::load();
  const auto cls = cat.simple_classes();
  REQUIRE(cls.size() == 13);
  for (const auto* f : cls) {
    CHECK(f->arrangement.genus() == 1);
    CHECK(is_simple(f->arrangement));
  }
  CHECK(cat.get("C04").arrangement.face_vector() == FaceVector{{3, 4}, {4, 9}});
  CHECK(automorphism_order(cat.get("C64").arrangement.flags()) == 24);
  CHECK(orbit_count(cat.get("C64").arrangement.flags()) == 2);
}

TEST_CASE("unknown fixtures are reported") {
  const auto cat = Catalog::load();
  try {
    cat.get("C99");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFixture);
  }
}
