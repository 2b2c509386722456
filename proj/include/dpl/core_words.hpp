// SPDX-License-Identifier: MIT
// Signed alphabet, circular words, the node product, the roll operator and
// the signed-permutation group acting on indices.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "dpl/error.hpp"

namespace dpl {

// A signed index is stored as a nonzero int: the base is its absolute value,
// a negative value denotes the overlined (negated) index.
using SignedIndex = int;

inline int base_of(SignedIndex x) { return x < 0 ? -x : x; }
inline int sign_of(int x) { return x < 0 ? -1 : 1; }

// Total order on letters used for canonical rotations: sign first (negative
// before positive), then base.
inline bool letter_less(SignedIndex a, SignedIndex b) {
  if (sign_of(a) != sign_of(b)) return sign_of(a) < sign_of(b);
  return base_of(a) < base_of(b);
}

// ---------------------------------------------------------------------------
// Circular words
// ---------------------------------------------------------------------------

template <class T, class Less = std::less<T>>
std::size_t least_rotation(const std::vector<T>& w, Less less = Less{}) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t t = 0; t < n; ++t) {
      const T& a = w[(r + t) % n];
      const T& b = w[(best + t) % n];
      if (less(a, b)) {
        best = r;
        break;
      }
      if (less(b, a)) break;
    }
  }
  return best;
}

template <class T, class Less = std::less<T>>
std::vector<T> canonical_rotation(const std::vector<T>& w, Less less = Less{}) {
  if (w.empty()) return w;
  const std::size_t r = least_rotation(w, less);
  std::vector<T> out(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

inline std::vector<SignedIndex> canonical_letters(const std::vector<SignedIndex>& w) {
  return canonical_rotation(w, letter_less);
}

template <class T>
bool rotation_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) ok = a[(r + t) % n] == b[t];
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Crossing symbols and slots
// ---------------------------------------------------------------------------

// The crossing ij_k: carrier i, crossed curve j, slot k in 1..4.
struct Symbol {
  int carrier = 0;
  int co = 0;
  int slot = 0;
  auto operator<=>(const Symbol&) const = default;
};

// Slot permutation relating ij_k to ji_{pi(k)}.
inline int slot_partner(int k) {
  static constexpr std::array<int, 5> pi{0, 1, 3, 2, 4};
  return pi.at(static_cast<std::size_t>(k));
}

inline Symbol partner(const Symbol& s) { return {s.co, s.carrier, slot_partner(s.slot)}; }

// Node symbol stored relative to the smaller base.
inline Symbol node_symbol(const Symbol& s) { return s.carrier < s.co ? s : partner(s); }

// Slot to (carrier sign, crossed sign).
inline std::pair<int, int> slot_signs(int k) {
  switch (k) {
    case 1: return {-1, -1};
    case 2: return {-1, 1};
    case 3: return {1, -1};
    case 4: return {1, 1};
  }
  throw Error(ErrorCode::Domain, "slot out of range: " + std::to_string(k));
}

inline int slot_from_signs(int carrier_sign, int co_sign) {
  if (carrier_sign < 0) return co_sign < 0 ? 1 : 2;
  return co_sign < 0 ? 3 : 4;
}

// Letter recorded for a slot in a disk-type cycle (slots 1,2 read j-bar).
inline SignedIndex disk_letter(const Symbol& s) { return s.slot <= 2 ? -s.co : s.co; }
inline SignedIndex crosscap_letter(const Symbol& s) { return -disk_letter(s); }

// Slot of the same crossing after reversing the carrier and/or the crossed curve.
inline int slot_under_reorientation(int k, bool carrier_flip, bool co_flip) {
  static constexpr std::array<int, 5> rev_carrier{0, 2, 1, 4, 3};
  static constexpr std::array<int, 5> rev_co{0, 3, 4, 1, 2};
  if (carrier_flip) k = rev_carrier.at(static_cast<std::size_t>(k));
  if (co_flip) k = rev_co.at(static_cast<std::size_t>(k));
  return k;
}

// ---------------------------------------------------------------------------
// The 2-curve base table for the 1-flag operator
// ---------------------------------------------------------------------------

struct SlotFlag {
  int slot = 0;
  int o = 0;
  int s = 0;
  auto operator<=>(const SlotFlag&) const = default;
};

// (slot, o, s) on carrier i maps to (slot', o', s') on the crossed curve.
inline SlotFlag sigma1_base(const SlotFlag& f) {
  // Rows indexed by slot, then (o, s) in the order (-,-), (+,-), (-,+), (+,+).
  static constexpr int table[4][4][3] = {
      {{1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}},
      {{3, -1, 1}, {3, -1, -1}, {3, 1, 1}, {3, 1, -1}},
      {{2, 1, -1}, {2, 1, 1}, {2, -1, -1}, {2, -1, 1}},
      {{4, 1, 1}, {4, 1, -1}, {4, -1, 1}, {4, -1, -1}},
  };
  if (f.slot < 1 || f.slot > 4) throw Error(ErrorCode::Domain, "slot out of range");
  const int col = (f.o > 0 ? 1 : 0) + (f.s > 0 ? 2 : 0);
  const int* r = table[f.slot - 1][col];
  return {r[0], r[1], r[2]};
}

// ---------------------------------------------------------------------------
// Signed pairs and the node product
// ---------------------------------------------------------------------------

// A prime-factor entry {e i, e' j}: signed carrier and signed crossed index.
struct SignedPair {
  SignedIndex first = 0;
  SignedIndex second = 0;
  auto operator<=>(const SignedPair&) const = default;
};

inline SignedPair pair_of(const Symbol& s) {
  const auto [cs, os] = slot_signs(s.slot);
  return {cs * s.carrier, os * s.co};
}

inline Symbol symbol_of(const SignedPair& p) {
  return {base_of(p.first), base_of(p.second), slot_from_signs(sign_of(p.first), sign_of(p.second))};
}

// Names the vertex shared by two entries of one prime factor relative to
// the crossed curve of the first entry.
inline SignedPair otimes(const SignedPair& a, const SignedPair& b) {
  if (base_of(a.first) != base_of(b.first))
    throw Error(ErrorCode::Domain, "otimes: entries carried by different curves");
  if (base_of(a.second) == base_of(a.first) || base_of(b.second) == base_of(b.first))
    throw Error(ErrorCode::Domain, "otimes: entry crosses its own carrier");
  if (base_of(a.second) == base_of(b.second)) return {a.second, a.first};
  return {sign_of(b.first) * a.second, -sign_of(a.first) * b.second};
}

// The block seen from the crossed curve of entry `position` (1-based).
inline std::vector<SignedPair> roll(const std::vector<SignedPair>& block, std::size_t position) {
  if (position < 1 || position > block.size())
    throw Error(ErrorCode::Domain, "roll: position out of range");
  const std::size_t p = position - 1;
  const std::size_t k = block.size();
  std::vector<SignedPair> alpha(k);
  for (std::size_t q = 0; q < k; ++q) {
    if (q > p) {
      alpha[q] = otimes(block[p], block[q]);
    } else if (q < p) {
      const SignedPair r = otimes(block[q], block[p]);
      alpha[q] = {r.second, r.first};
    } else {
      alpha[q] = {block[p].second, block[p].first};
    }
  }
  std::vector<SignedPair> seq;
  seq.reserve(k);
  for (std::size_t q = p + 1; q < k; ++q) seq.push_back(alpha[q]);
  seq.push_back(alpha[p]);
  for (std::size_t q = 0; q < p; ++q) seq.push_back(alpha[q]);
  if (sign_of(block[p].first) * sign_of(block[p].second) > 0) std::reverse(seq.begin(), seq.end());
  return seq;
}

// ---------------------------------------------------------------------------
// Signed permutations
// ---------------------------------------------------------------------------

// A bijection from an index set I onto a signed copy of an index set I',
// extended to negatives by sigma(-i) = -sigma(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::map<int, SignedIndex> images) : map_(std::move(images)) {
    std::vector<int> seen;
    for (const auto& [k, v] : map_) {
      if (k <= 0 || v == 0) throw Error(ErrorCode::Domain, "signed permutation: bad entry");
      seen.push_back(base_of(v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw Error(ErrorCode::Domain, "signed permutation: not injective");
  }

  static SignedPermutation identity(const std::vector<int>& indices) {
    std::map<int, SignedIndex> m;
    for (int i : indices) m[i] = i;
    return SignedPermutation(std::move(m));
  }

  SignedIndex operator()(SignedIndex x) const {
    auto it = map_.find(base_of(x));
    if (it == map_.end()) throw Error(ErrorCode::UnknownIndex, std::to_string(base_of(x)));
    return sign_of(x) * it->second;
  }

  bool reverses(int i) const { return (*this)(i) < 0; }

  const std::map<int, SignedIndex>& images() const { return map_; }

  std::vector<int> domain() const {
    std::vector<int> d;
    for (const auto& kv : map_) d.push_back(kv.first);
    return d;
  }

  std::vector<int> codomain() const {
    std::vector<int> d;
    for (const auto& kv : map_) d.push_back(base_of(kv.second));
    std::sort(d.begin(), d.end());
    return d;
  }

  // (this * other)(x) = this(other(x))
  SignedPermutation operator*(const SignedPermutation& other) const {
    std::map<int, SignedIndex> m;
    for (const auto& [k, v] : other.map_) m[k] = (*this)(v);
    return SignedPermutation(std::move(m));
  }

  SignedPermutation inverse() const {
    std::map<int, SignedIndex> m;
    for (const auto& [k, v] : map_) m[base_of(v)] = sign_of(v) * k;
    return SignedPermutation(std::move(m));
  }

  bool operator==(const SignedPermutation&) const = default;

  // Space separated images of the domain in increasing order, `-` for negatives.
  std::string str() const {
    std::string s;
    for (const auto& [k, v] : map_) {
      if (!s.empty()) s += ' ';
      s += std::to_string(v);
    }
    return s;
  }

 private:
  std::map<int, SignedIndex> map_;
};

// All n! 2^n signed permutations of an index set, in a fixed order.
inline std::vector<SignedPermutation> signed_permutation_group(const std::vector<int>& indices) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<SignedPermutation> out;
  std::vector<int> perm = sorted;
  const std::size_t n = sorted.size();
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::map<int, SignedIndex> m;
      for (std::size_t t = 0; t < n; ++t) m[sorted[t]] = ((mask >> t) & 1u) ? -perm[t] : perm[t];
      out.emplace_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Relabels every letter of a word; the word is reversed when its carrier is reversed.
inline std::vector<SignedIndex> act(const SignedPermutation& sigma, const std::vector<SignedIndex>& w,
                                    int carrier) {
  std::vector<SignedIndex> out;
  out.reserve(w.size());
  for (SignedIndex x : w) out.push_back(sigma(x));
  if (carrier != 0 && sigma.reverses(carrier)) std::reverse(out.begin(), out.end());
  return out;
}

inline std::string letters_to_string(const std::vector<SignedIndex>& w) {
  std::string s;
  for (SignedIndex x : w) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

inline std::string symbol_to_string(const Symbol& s) {
  return std::to_string(s.carrier) + "." + std::to_string(s.co) + "_" + std::to_string(s.slot);
}

}  // namespace dpl
