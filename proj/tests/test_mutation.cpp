// SPDX-License-Identifier: MIT
// Merging, splitting, flipping and enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpl/catalog.hpp"
#include "dpl/mutation.hpp"

using namespace dpl;

TEST_CASE("merging the split arrangement's triangle gives the non-simple one") {
  const auto cat = Catalog::load();
  const auto& left = cat.get("Upsilon3").arrangement;
  const auto& right = cat.get("Upsilon3_split").arrangement;
  bool found = false;
  for (const auto& t : triangles(right)) found = found || merge(right, t.face).same_cycles(left);
  CHECK(found);
}

TEST_CASE("each triple point splits two ways and one undoes the merge") {
  const auto thin = cyclic_thin(3);
  for (const auto& t : triangles(thin)) {
    const auto m = merge(thin, t.face);
    CHECK(m.num_nodes() == thin.num_nodes() - 2);
    bool back = false;
    for (int v : triple_points(m)) {
      const auto s = split_all(m, v);
      CHECK(s.size() == 2);
      for (const auto& r : s) back = back || r.same_cycles(thin);
    }
    CHECK(back);
  }
}

TEST_CASE("flips are involutions on the triangle") {
  const auto a = cyclic_thin(4);
  for (const auto& t : triangles(a)) {
    const auto b = flip(a, t.face);
    bool back = false;
    for (const auto& u : triangles(b)) back = back || flip(b, u.face).same_cycles(a);
    CHECK(back);
  }
}

TEST_CASE("illegal loci are rejected") {
  const auto a = cyclic_thin(3);
  CHECK_THROWS_AS(merge(a, -1), Error);
  CHECK_THROWS_AS(split(a, 0), Error);
}

TEST_CASE("projective census on two and three curves") {
  EnumOptions opt;
  opt.n = 2;
  CHECK(enumerate(opt).classes.size() == 1);
  opt.n = 3;
  const auto r = enumerate(opt);
  CHECK(r.classes.size() == 13);
  CHECK(r.flip_connected);
  CHECK(connectivity_check(r.classes));
}

TEST_CASE("state limit stops the search") {
  EnumOptions opt;
  opt.n = 3;
  opt.state_limit = 4;
  CHECK_FALSE(enumerate(opt).complete);
}

TEST_CASE("Moebius counts on two curves") {
  EnumOptions opt;
  opt.n = 2;
  opt.setting = Setting::moebius;
  const auto r = enumerate(opt);
  REQUIRE(r.row);
  CHECK(r.row->a == 1);
  CHECK(r.row->b == 1);
  CHECK(r.row->c == 1);
  CHECK(r.row->d == 1);
}
