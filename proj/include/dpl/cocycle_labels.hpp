// SPDX-License-Identifier: MIT
// Cocycle labels: words over signed indices and a touch symbol, taken up to
// rotation and overline-reversal, with the signed-permutation action.
#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dpl/core_words.hpp"
#include "dpl/error.hpp"

namespace dpl {

// Letter 0 is the touch symbol `.`.
inline constexpr int kTouch = 0;

struct CocycleLabel {
  std::vector<SignedIndex> lone;  // isolated indices, sorted
  std::vector<int> word;          // circular word over signed indices and kTouch

  friend bool operator==(const CocycleLabel&, const CocycleLabel&) = default;
};

namespace detail {

// Signed indices precede the touch symbol; indices compare numerically.
inline std::pair<int, int> cocycle_rank(int c) { return c == kTouch ? std::pair{1, 0} : std::pair{0, c}; }

inline bool cocycle_word_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](int x, int y) { return cocycle_rank(x) < cocycle_rank(y); });
}

inline bool cocycle_less(const CocycleLabel& a, const CocycleLabel& b) {
  if (a.lone != b.lone) return a.lone < b.lone;
  return cocycle_word_less(a.word, b.word);
}

inline CocycleLabel cocycle_rotate_min(CocycleLabel l) {
  std::sort(l.lone.begin(), l.lone.end());
  std::vector<int> best = l.word;
  for (std::size_t r = 1; r < l.word.size(); ++r) {
    std::vector<int> w(l.word.begin() + static_cast<std::ptrdiff_t>(r), l.word.end());
    w.insert(w.end(), l.word.begin(), l.word.begin() + static_cast<std::ptrdiff_t>(r));
    if (cocycle_word_less(w, best)) best = std::move(w);
  }
  l.word = std::move(best);
  return l;
}

inline std::vector<int> parse_cocycle_part(const std::string& p) {
  std::vector<int> toks;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const char ch = p[i];
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '.') {
      toks.push_back(kTouch);
    } else if (ch == '-' && i + 1 < p.size() && std::isdigit(static_cast<unsigned char>(p[i + 1])) && p[i + 1] != '0') {
      toks.push_back(-(p[i + 1] - '0'));
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) && ch != '0') {
      toks.push_back(ch - '0');
    } else {
      throw Error(ErrorCode::MalformedWord, "unexpected character in cocycle label: " + p);
    }
  }
  return toks;
}

}  // namespace detail

// Reverses the word and negates every index.
inline CocycleLabel overline_reverse(const CocycleLabel& l) {
  CocycleLabel r;
  for (int x : l.lone) r.lone.push_back(-x);
  std::sort(r.lone.begin(), r.lone.end());
  for (auto it = l.word.rbegin(); it != l.word.rend(); ++it) r.word.push_back(-*it);
  return r;
}

inline CocycleLabel normalize(const CocycleLabel& l) {
  CocycleLabel a = detail::cocycle_rotate_min(l);
  CocycleLabel b = detail::cocycle_rotate_min(overline_reverse(l));
  return detail::cocycle_less(b, a) ? b : a;
}

// `12..,3`: comma-separated parts, single-digit indices, `-` for a bar and
// `.` for the touch symbol. A part with one index is a lone index.
inline CocycleLabel parse_cocycle(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  CocycleLabel l;
  bool have_word = false;
  for (const auto& p : parts) {
    auto toks = detail::parse_cocycle_part(p);
    if (toks.empty()) throw Error(ErrorCode::MalformedWord, "empty part in cocycle label: " + text);
    if (parts.size() > 1 && toks.size() == 1 && toks[0] != kTouch) {
      l.lone.push_back(toks[0]);
      continue;
    }
    if (have_word) throw Error(ErrorCode::MalformedWord, "more than one word in cocycle label: " + text);
    l.word = std::move(toks);
    have_word = true;
  }
  std::sort(l.lone.begin(), l.lone.end());
  return l;
}

inline std::string to_string(const CocycleLabel& l) {
  std::string s;
  for (int x : l.word) s += x == kTouch ? std::string(".") : std::to_string(x);
  for (int x : l.lone) s += "," + std::to_string(x);
  return s;
}

inline CocycleLabel act(const SignedPermutation& sigma, const CocycleLabel& l) {
  CocycleLabel r;
  for (int x : l.lone) r.lone.push_back(sigma(x));
  std::sort(r.lone.begin(), r.lone.end());
  for (int x : l.word) r.word.push_back(x == kTouch ? kTouch : sigma(x));
  return normalize(r);
}

struct CocycleLess {
  bool operator()(const CocycleLabel& a, const CocycleLabel& b) const { return detail::cocycle_less(a, b); }
};

using CocycleSet = std::set<CocycleLabel, CocycleLess>;

inline CocycleSet orbit(const CocycleLabel& l, const std::vector<SignedPermutation>& group) {
  CocycleSet out;
  for (const auto& g : group) out.insert(act(g, l));
  return out;
}

inline CocycleSet orbit_union(const std::vector<CocycleLabel>& reps, const std::vector<SignedPermutation>& group) {
  CocycleSet out;
  for (const auto& r : reps) {
    auto o = orbit(r, group);
    out.insert(o.begin(), o.end());
  }
  return out;
}

// One label per line; `#` starts a comment and a leading `?` quarantines a
// label whose transcription is in doubt.
struct CocycleFixture {
  std::vector<CocycleLabel> labels;
  std::vector<CocycleLabel> quarantined;
};

inline CocycleFixture parse_cocycle_fixture(const std::string& text) {
  CocycleFixture f;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line[0] == '?') f.quarantined.push_back(parse_cocycle(line.substr(1)));
    else f.labels.push_back(parse_cocycle(line));
  }
  return f;
}

}  // namespace dpl
