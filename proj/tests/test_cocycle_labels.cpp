// SPDX-License-Identifier: MIT
// Cocycle labels: overline-reversal, normalization and orbits.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpl/catalog.hpp"
#include "dpl/cocycle_labels.hpp"

using namespace dpl;

namespace {

CocycleLabel random_label(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 8), idx(1, 3), coin(0, 1);
  CocycleLabel l;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) l.word.push_back(coin(rng) ? kTouch : (coin(rng) ? 1 : -1) * idx(rng));
  if (coin(rng)) l.lone.push_back((coin(rng) ? 1 : -1) * idx(rng));
  return l;
}

}  // namespace

TEST_CASE("parsing and printing") {
  const auto l = parse_cocycle("1.-2.-3.");
  CHECK(l.word == std::vector<int>{1, kTouch, -2, kTouch, -3, kTouch});
  CHECK(parse_cocycle(to_string(l)) == l);
  const auto m = parse_cocycle("12..,3");
  CHECK(m.lone == std::vector<int>{3});
  CHECK(to_string(m) == "12..,3");
  CHECK_THROWS_AS(parse_cocycle("1x2"), Error);
  CHECK_THROWS_AS(parse_cocycle("12,,3"), Error);
  CHECK_THROWS_AS(parse_cocycle("12.,3.."), Error);
}

TEST_CASE("overline-reversal") {
  const auto l = parse_cocycle("1.-2.-3.");
  CHECK(overline_reverse(l) == parse_cocycle(".3.2.-1"));
  CHECK(normalize(l) == normalize(overline_reverse(l)));
}

TEST_CASE("overline-reversal is an involution and normalization is idempotent") {
  std::mt19937 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const auto l = random_label(rng);
    CHECK(overline_reverse(overline_reverse(l)) == l);
    CHECK(normalize(normalize(l)) == normalize(l));
    CHECK(normalize(overline_reverse(l)) == normalize(l));
  }
}

TEST_CASE("the action commutes with normalization") {
  std::mt19937 rng(9);
  const auto G = signed_permutation_group({1, 2, 3});
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto l = random_label(rng);
    const auto& s = G[pick(rng)];
    const auto& u = G[pick(rng)];
    CHECK(act(s, normalize(l)) == act(s, l));
    CHECK(act(s * u, l) == act(s, act(u, l)));
  }
}

TEST_CASE("bitangent counts") {
  const auto two = parse_cocycle_fixture(read_file(data_dir() / "fixtures" / "bitangents2.txt"));
  CHECK(orbit_union(two.labels, signed_permutation_group({1, 2})).size() == 4);
  const auto three = parse_cocycle_fixture(read_file(data_dir() / "fixtures" / "bitangents3.txt"));
  const auto G = signed_permutation_group({1, 2, 3});
  const auto all = orbit_union(three.labels, G);
  CHECK(all.size() == 104);
  for (const auto& q : three.quarantined) CHECK(all.count(normalize(q)) == 1);
  for (const char* s : {"1.-2.-3.", "1.-3.2.", "1.2.3.", "1.3.-2."}) CHECK(all.count(normalize(parse_cocycle(s))) == 1);
}
