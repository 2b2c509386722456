// SPDX-License-Identifier: MIT
// Chirotopes, shuffles, extension checks and reconstruction.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpl/catalog.hpp"
#include "dpl/chirotope.hpp"

using namespace dpl;

namespace {

ClassNamer namer_from(const Catalog& cat) {
  ClassNamer n;
  for (const auto* f : cat.simple_classes()) n.add(f->name, f->arrangement);
  return n;
}

Chirotope fixture(const std::string& name, const ClassNamer& n) {
  return parse_chirotope(read_file(data_dir() / "fixtures" / name), n);
}

}  // namespace

TEST_CASE("shuffles of cycles") {
  using W = std::vector<int>;
  CHECK(common_shuffles(std::vector<W>{{1, 2}, {1, 3}}).size() == 2);
  CHECK(common_shuffles(std::vector<W>{{1, 2, 3}, {1, 3, 2}, {2, 3}}).empty());
  CHECK(common_shuffles(std::vector<W>{{1, 2, 3}, {3, 4}, {1, 4, 2}}).size() == 1);
  CHECK(shuffle_count(2) == 1);
  CHECK(shuffle_count(3) == 140);
}

TEST_CASE("class names round trip") {
  const auto cat = Catalog::load();
  const auto namer = namer_from(cat);
  const auto G = signed_permutation_group({1, 2, 3});
  for (const auto* f : cat.simple_classes()) {
    for (std::size_t g = 0; g < G.size(); g += 7) {
      const auto e = act(G[g], f->arrangement);
      const auto name = namer.name(e);
      CHECK(name.rfind(f->name + "(", 0) == 0);
      CHECK(namer.parse_entry(name).same_cycles(e));
    }
  }
  const auto& u = cat.get("Upsilon3").arrangement;
  const auto inl = namer.name(u);
  CHECK(inl.rfind("inline", 0) == 0);
  CHECK(namer.parse_entry(inl).same_cycles(u));
}

TEST_CASE("chirotope file round trip") {
  const auto cat = Catalog::load();
  const auto namer = namer_from(cat);
  for (const char* name : {"M1", "M2", "Upsilon3"}) {
    const auto chi = chirotope_of(cat.get(name).arrangement);
    CHECK(same_chirotope(parse_chirotope(serialize(chi, namer), namer), chi));
  }
  CHECK_THROWS_AS(parse_chirotope("indices: 1 2 3 4\nchi 1 2 3: C04(1 2 3)\n", namer), Error);
  CHECK_THROWS_AS(parse_chirotope("indices: 1 2 3\nchi 1 2 3: C99(1 2 3)\n", namer), Error);
  CHECK_THROWS_AS(parse_chirotope("indices: 1 2 3\nchi 1 2 3: C04(1 2 4)\n", namer), Error);
}

TEST_CASE("reconstruction uses the genus to separate martagons") {
  const auto cat = Catalog::load();
  for (const char* name : {"M1", "M2"}) {
    const auto& a = cat.get(name).arrangement;
    const auto& star = cat.get(std::string(name) + "star").arrangement;
    const auto chi = chirotope_of(a);
    CHECK(same_chirotope(chi, chirotope_of(star)));
    CHECK(reconstruct(chi).same_cycles(a));
    ReconstructOptions any;
    any.genus = 0;
    CHECK(reconstruct_all(chi, any).arrangements.size() == 2);
    ReconstructOptions three;
    three.genus = 3;
    CHECK(reconstruct(chi, three).same_cycles(star));
  }
}

TEST_CASE("reconstruction of larger arrangements") {
  for (int n : {4, 5}) {
    const auto a = cyclic_thin(n);
    CHECK(reconstruct(chirotope_of(a)).same_cycles(a));
  }
  ReconstructOptions any;
  any.genus = 0;
  const auto u = all_c64(5);
  CHECK(reconstruct(chirotope_of(u), any).same_cycles(u));
}

TEST_CASE("extension checks") {
  const auto cat = Catalog::load();
  const auto namer = namer_from(cat);
  const auto c04 = fixture("allC04_n5.chi", namer);
  CHECK(is_k_chirotope(c04, 3));
  CHECK(is_k_chirotope(c04, 4));
  const auto d = check_k_chirotope(c04, 5);
  CHECK_FALSE(d.ok);
  CHECK(d.carrier == 1);
  const auto c32 = fixture("allC32_n4.chi", namer);
  const auto e = check_k_chirotope(c32, 4);
  CHECK_FALSE(e.ok);
  CHECK(std::find(e.carriers.begin(), e.carriers.end(), 3) != e.carriers.end());
  CHECK_FALSE(is_k_chirotope(fixture("mixC22C32_n4.chi", namer), 4));
}

TEST_CASE("ternary and block relations") {
  const auto cat = Catalog::load();
  const auto namer = namer_from(cat);
  CHECK(relations_from(chirotope_of(cyclic_thin(5))).diagnosis.ok);
  const auto rel = relations_from(chirotope_of(cat.get("M2").arrangement));
  CHECK(rel.diagnosis.ok);
  CHECK(rel.relations.size() == 8);
  const auto bad = relations_from(fixture("allC04_n5.chi", namer));
  CHECK_FALSE(bad.diagnosis.ok);
  CHECK(bad.diagnosis.carrier == 1);
}

TEST_CASE("martagon entries under the exchanged C32 labelling") {
  const auto cat = Catalog::load();
  const auto& m2 = cat.get("M2").arrangement;
  ClassNamer exchanged;
  exchanged.add("C32", act(SignedPermutation({{1, 1}, {2, 3}, {3, 2}}), cat.get("C32").arrangement));
  CHECK(restriction(m2, {1, 2, 4}).same_cycles(exchanged.instantiate("C32", {1, 4, 2})));
  CHECK(restriction(m2, {1, 3, 4}).same_cycles(exchanged.instantiate("C32", {1, 4, 3})));
  ClassNamer plain;
  plain.add("C32", cat.get("C32").arrangement);
  CHECK_FALSE(restriction(m2, {1, 2, 4}).same_cycles(plain.instantiate("C32", {1, 4, 2})));
}
