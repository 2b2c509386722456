// SPDX-License-Identifier: MIT
// Flags, faces, canonical keys and automorphisms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>

#include "dpl/arrangement.hpp"
#include "dpl/catalog.hpp"
#include "dpl/flag_complex.hpp"

using namespace dpl;

TEST_CASE("1-flag operator on two curves matches the published table") {
  using Row = std::array<int, 3>;
  // (slot, o, s) -> (slot', o', s'), the sixteen flags of one carrier.
  const std::map<Row, Row> table{
      {{1, -1, -1}, {1, -1, -1}}, {{1, 1, -1}, {1, -1, 1}}, {{2, -1, -1}, {3, -1, 1}}, {{2, 1, -1}, {3, -1, -1}},
      {{3, -1, -1}, {2, 1, -1}},  {{3, 1, -1}, {2, 1, 1}},  {{4, -1, -1}, {4, 1, 1}},  {{4, 1, -1}, {4, 1, -1}},
      {{1, -1, 1}, {1, 1, -1}},   {{1, 1, 1}, {1, 1, 1}},   {{2, -1, 1}, {3, 1, 1}},   {{2, 1, 1}, {3, 1, -1}},
      {{3, -1, 1}, {2, -1, -1}},  {{3, 1, 1}, {2, -1, 1}},  {{4, -1, 1}, {4, -1, 1}},  {{4, 1, 1}, {4, -1, -1}},
  };
  const auto two = from_disk_only({{1, {-2, -2, 2, 2}}, {2, {-1, -1, 1, 1}}});
  const auto& fc = two.flags();
  const auto& cs = two.structure();
  auto slot_of = [&](int x) {
    const int c = fc.curve[static_cast<std::size_t>(x)];
    const int b = cs.block_at(fc.node[static_cast<std::size_t>(x)], c);
    return cs.blocks[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)][0].slot;
  };
  std::set<Row> seen;
  for (std::size_t x = 0; x < fc.size(); ++x) {
    const int xi = static_cast<int>(x);
    const int y = fc.s1[x];
    const Row from{slot_of(xi), FlagComplex::orient(xi), FlagComplex::side(xi)};
    const Row to{slot_of(y), FlagComplex::orient(y), FlagComplex::side(y)};
    CHECK(fc.curve[static_cast<std::size_t>(y)] != fc.curve[x]);
    CHECK(table.at(from) == to);
    if (fc.curve[x] == 0) seen.insert(from);
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("flag operators are fixed-point-free involutions with commuting s0 s2") {
  const auto cat = Catalog::load();
  for (const auto& f : cat.all()) {
    const auto& fc = f.arrangement.flags();
    for (std::size_t x = 0; x < fc.size(); ++x) {
      for (const auto* s : {&fc.s0, &fc.s1, &fc.s2}) {
        const int y = (*s)[x];
        CHECK(y != static_cast<int>(x));
        CHECK((*s)[static_cast<std::size_t>(y)] == static_cast<int>(x));
      }
      CHECK(fc.s0[static_cast<std::size_t>(fc.s2[x])] == fc.s2[static_cast<std::size_t>(fc.s0[x])]);
    }
  }
}

TEST_CASE("face vectors count every edge twice") {
  const auto cat = Catalog::load();
  for (const auto& f : cat.all()) {
    const auto& fc = f.arrangement.flags();
    int sum = 0, faces = 0;
    for (const auto& [size, count] : fc.face_vector()) {
      sum += size * count;
      faces += count;
    }
    CHECK(sum == 2 * fc.num_edges());
    CHECK(faces == fc.num_faces());
  }
}

TEST_CASE("canonical keys are invariant under relabelling and separate classes") {
  const auto cat = Catalog::load();
  std::set<std::string> keys;
  const auto G = signed_permutation_group({1, 2, 3});
  for (const auto* f : cat.simple_classes()) {
    const auto& a = f->arrangement;
    keys.insert(a.key());
    for (std::size_t g = 0; g < G.size(); g += 5) CHECK(act(G[g], a).key() == a.key());
  }
  CHECK(keys.size() == 13);
}

TEST_CASE("indexed oriented orbits have size 48 over the stabilizer") {
  const auto cat = Catalog::load();
  const auto G = signed_permutation_group({1, 2, 3});
  for (const auto* f : cat.simple_classes()) {
    const auto& a = f->arrangement;
    std::set<std::string> orbit;
    for (const auto& g : G) orbit.insert(act(g, a).key(KeyMode::indexed_oriented));
    CHECK(orbit.size() == orbit_count(a.flags()));
    CHECK(48 % orbit.size() == 0);
  }
}

TEST_CASE("automorphisms commute with the flag operators") {
  const auto cat = Catalog::load();
  const auto& fc = cat.get("C64").arrangement.flags();
  const auto autos = automorphisms(fc);
  CHECK(autos.size() == 24);
  for (const auto& m : autos)
    for (std::size_t x = 0; x < fc.size(); ++x) {
      CHECK(m[static_cast<std::size_t>(fc.s0[x])] == fc.s0[static_cast<std::size_t>(m[x])]);
      CHECK(m[static_cast<std::size_t>(fc.s1[x])] == fc.s1[static_cast<std::size_t>(m[x])]);
      CHECK(m[static_cast<std::size_t>(fc.s2[x])] == fc.s2[static_cast<std::size_t>(m[x])]);
    }
}

TEST_CASE("admissible cells need genus one") {
  CHECK_THROWS_AS(admissible_cells(all_c64(4).flags()), Error);
  CHECK_FALSE(admissible_cells(cyclic_thin(3).flags()).empty());
}

TEST_CASE("dot output") {
  const auto cat = Catalog::load();
  const auto& fc = cat.get("Two").arrangement.flags();
  CHECK(flag_graph_dot(fc).rfind("graph flags {", 0) == 0);
  CHECK(dual_graph_dot(fc).rfind("graph dual {", 0) == 0);
}
