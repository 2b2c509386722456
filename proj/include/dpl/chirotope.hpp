// SPDX-License-Identifier: MIT
// Chirotopes: the map from index triples to three-curve subarrangements,
// extension checks and reconstruction of an arrangement from its chirotope.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dpl/arrangement.hpp"
#include "dpl/cycles.hpp"
#include "dpl/error.hpp"

namespace dpl {

using Triple = std::array<int, 3>;

struct Chirotope {
  std::vector<int> indices;
  std::map<Triple, Arrangement> entries;

  const Arrangement& entry(int i, int j, int k) const {
    Triple t{i, j, k};
    std::sort(t.begin(), t.end());
    auto it = entries.find(t);
    if (it == entries.end())
      throw Error(ErrorCode::UnknownIndex,
                  "no entry for " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]));
    return it->second;
  }
};

inline std::vector<std::vector<int>> subsets(const std::vector<int>& set, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > set.size()) return out;
  std::vector<int> sel(set.size(), 0);
  std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(k), 1);
  do {
    std::vector<int> s;
    for (std::size_t t = 0; t < set.size(); ++t)
      if (sel[t]) s.push_back(set[t]);
    out.push_back(std::move(s));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

inline Chirotope chirotope_of(const Arrangement& a) {
  if (a.n() < 3) throw Error(ErrorCode::TooFewIndices, "a chirotope needs at least three indices");
  Chirotope chi;
  chi.indices = a.indices();
  for (const auto& s : subsets(a.indices(), 3)) chi.entries.emplace(Triple{s[0], s[1], s[2]}, restriction(a, s));
  return chi;
}

inline Chirotope restrict_chirotope(const Chirotope& chi, std::vector<int> K) {
  std::sort(K.begin(), K.end());
  Chirotope out;
  out.indices = K;
  for (const auto& s : subsets(K, 3)) out.entries.emplace(Triple{s[0], s[1], s[2]}, chi.entry(s[0], s[1], s[2]));
  return out;
}

// Entries agree as indexed and oriented arrangements.
inline bool same_chirotope(const Chirotope& a, const Chirotope& b) {
  if (a.indices != b.indices) return false;
  for (const auto& [t, e] : a.entries) {
    auto it = b.entries.find(t);
    if (it == b.entries.end() || !e.same_cycles(it->second)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Class names
// ---------------------------------------------------------------------------

// Names three-curve entries as C_xx(a b c): the named representative on
// {1,2,3} with 1, 2, 3 sent to a, b, c.
class ClassNamer {
 public:
  ClassNamer() = default;

  void add(const std::string& name, const Arrangement& rep) {
    if (rep.indices() != std::vector<int>{1, 2, 3})
      throw Error(ErrorCode::Domain, "class representatives live on {1,2,3}");
    by_key_[rep.key()] = name;
    reps_.emplace(name, rep);
  }

  std::optional<std::string> class_of(const Arrangement& entry) const {
    auto it = by_key_.find(entry.key());
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
  }

  const Arrangement& representative(const std::string& name) const {
    auto it = reps_.find(name);
    if (it == reps_.end()) throw Error(ErrorCode::UnknownFixture, name);
    return it->second;
  }

  Arrangement instantiate(const std::string& name, const std::vector<SignedIndex>& images) const {
    if (images.size() != 3) throw Error(ErrorCode::Parse, "a class name takes three signed indices");
    SignedPermutation sigma({{1, images[0]}, {2, images[1]}, {3, images[2]}});
    return act(sigma, representative(name));
  }

  // Name of an entry, or an `inline` description when its class is unnamed.
  std::string name(const Arrangement& entry) const {
    if (entry.n() != 3) throw Error(ErrorCode::Domain, "entries have three curves");
    auto cls = class_of(entry);
    if (!cls) return inline_form(entry);
    const auto& rep = representative(*cls);
    std::optional<std::vector<SignedIndex>> best;
    auto rank = [](const std::vector<SignedIndex>& v) {
      std::vector<std::pair<int, int>> r;
      for (auto x : v) r.emplace_back(base_of(x), x < 0 ? 1 : 0);
      return r;
    };
    const auto& J = entry.indices();
    std::vector<int> perm = J;
    do {
      for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<SignedIndex> img{perm[0], perm[1], perm[2]};
        for (int t = 0; t < 3; ++t)
          if ((mask >> t) & 1u) img[static_cast<std::size_t>(t)] = -img[static_cast<std::size_t>(t)];
        if (best && !(rank(img) < rank(*best))) continue;
        SignedPermutation sigma({{1, img[0]}, {2, img[1]}, {3, img[2]}});
        if (act(sigma, rep).same_cycles(entry)) best = img;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!best) return inline_form(entry);
    return *cls + "(" + letters_to_string(*best) + ")";
  }

  static std::string inline_form(const Arrangement& e) {
    std::string s = "inline";
    bool first = true;
    for (int i : e.indices()) {
      s += first ? " " : " | ";
      first = false;
      s += "D " + std::to_string(i) + ": " + letters_to_string(e.disk(i));
    }
    for (int i : e.indices()) s += " | M " + std::to_string(i) + ": " + letters_to_string(e.crosscap(i));
    return s;
  }

  // Parses `C22(1 -2 -3)` or an `inline D 1: ... | M 1: ...` description.
  Arrangement parse_entry(const std::string& text) const {
    const std::string s = detail::trim(text);
    if (s.rfind("inline", 0) == 0) {
      ArrangementText t;
      std::string rest = s.substr(6);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const auto bar = rest.find('|', start);
        const std::string part = rest.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        if (!detail::trim(part).empty() && !parse_cycle_line(part, t))
          throw Error(ErrorCode::Parse, "bad inline cycle: " + part);
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      for (const auto& kv : t.disk) t.indices.push_back(kv.first);
      return arrangement_from_text(t);
    }
    const auto open = s.find('(');
    const auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw Error(ErrorCode::Parse, "bad class name: " + s);
    const std::string cls = detail::trim(s.substr(0, open));
    return instantiate(cls, detail::parse_ints(s.substr(open + 1, close - open - 1)));
  }

 private:
  std::map<std::string, std::string> by_key_;
  std::map<std::string, Arrangement> reps_;
};

inline Chirotope parse_chirotope(const std::string& text, const ClassNamer& namer) {
  Chirotope chi;
  bool have_indices = false;
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    std::string line = detail::trim(raw);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = detail::trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.rfind("indices:", 0) == 0) {
      chi.indices = detail::parse_ints(line.substr(8));
      std::sort(chi.indices.begin(), chi.indices.end());
      have_indices = true;
      continue;
    }
    if (line.rfind("chi", 0) != 0) throw Error(ErrorCode::Parse, "unrecognized line: " + line);
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "missing ':' in " + line);
    auto t = detail::parse_ints(line.substr(3, colon - 3));
    if (t.size() != 3) throw Error(ErrorCode::Parse, "expected three indices in " + line);
    std::sort(t.begin(), t.end());
    Arrangement e = namer.parse_entry(line.substr(colon + 1));
    if (e.indices() != t) throw Error(ErrorCode::Parse, "entry does not live on its triple: " + line);
    if (!chi.entries.emplace(Triple{t[0], t[1], t[2]}, std::move(e)).second)
      throw Error(ErrorCode::Parse, "duplicate entry: " + line);
  }
  if (!have_indices) throw Error(ErrorCode::Parse, "missing 'indices:' line");
  if (chi.indices.size() < 3) throw Error(ErrorCode::TooFewIndices, "a chirotope needs at least three indices");
  for (const auto& s : subsets(chi.indices, 3))
    if (!chi.entries.count(Triple{s[0], s[1], s[2]}))
      throw Error(ErrorCode::Parse, "missing entry for " + std::to_string(s[0]) + " " + std::to_string(s[1]) + " " +
                                        std::to_string(s[2]));
  if (chi.entries.size() != subsets(chi.indices, 3).size()) throw Error(ErrorCode::Parse, "entry outside the index set");
  return chi;
}

inline std::string serialize(const Chirotope& chi, const ClassNamer& namer) {
  std::ostringstream os;
  os << "indices:";
  for (int i : chi.indices) os << ' ' << i;
  os << "\n";
  for (const auto& [t, e] : chi.entries)
    os << "chi " << t[0] << ' ' << t[1] << ' ' << t[2] << ": " << namer.name(e) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Shuffles of cycles
// ---------------------------------------------------------------------------

// All cyclic words over the union of the constraint alphabets whose
// restriction to each constraint alphabet is that constraint (up to rotation).
// Each result starts with the first letter of the first constraint.
template <class T>
std::vector<std::vector<T>> common_shuffles(const std::vector<std::vector<T>>& constraints, std::size_t limit = 0) {
  std::vector<std::vector<T>> out;
  if (constraints.empty()) return out;
  std::vector<T> universe;
  for (const auto& c : constraints) universe.insert(universe.end(), c.begin(), c.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  auto id = [&](const T& x) {
    return static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), x) - universe.begin());
  };
  const std::size_t U = universe.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occ(U);
  std::vector<std::vector<std::size_t>> cid(constraints.size());
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    for (std::size_t p = 0; p < constraints[c].size(); ++p) {
      const std::size_t u = id(constraints[c][p]);
      occ[u].emplace_back(c, p);
      cid[c].push_back(u);
    }
  }
  std::vector<std::size_t> start(constraints.size(), 0), count(constraints.size(), 0);
  std::vector<char> used(U, 0);
  std::vector<std::size_t> seq;
  auto placeable = [&](std::size_t u) {
    for (const auto& [c, p] : occ[u])
      if (count[c] && (start[c] + count[c]) % cid[c].size() != p) return false;
    return true;
  };
  auto place = [&](std::size_t u, int dir) {
    for (const auto& [c, p] : occ[u]) {
      if (dir > 0) {
        if (count[c] == 0) start[c] = p;
        ++count[c];
      } else {
        --count[c];
      }
    }
    used[u] = dir > 0;
  };
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    if (seq.size() == U) {
      std::vector<T> w;
      for (auto u : seq) w.push_back(universe[u]);
      out.push_back(std::move(w));
      if (limit && out.size() >= limit) stop = true;
      return;
    }
    for (std::size_t u = 0; u < U && !stop; ++u) {
      if (used[u] || !placeable(u)) continue;
      place(u, 1);
      seq.push_back(u);
      rec();
      seq.pop_back();
      place(u, -1);
    }
  };
  const std::size_t first = cid[0][0];
  place(first, 1);
  seq.push_back(first);
  rec();
  return out;
}

// Number of cyclic shuffles of the elementary cycles of one carrier on n curves.
inline std::uint64_t shuffle_count(int n) {
  std::vector<std::vector<Symbol>> elem;
  for (int j = 2; j <= n; ++j) elem.push_back({{1, j, 1}, {1, j, 2}, {1, j, 3}, {1, j, 4}});
  return common_shuffles(elem).size();
}

// ---------------------------------------------------------------------------
// Extensions and reconstruction
// ---------------------------------------------------------------------------

struct ReconstructOptions {
  int genus = 1;            // 0 accepts any genus
  std::size_t limit = 4096; // cap on candidate cycles per carrier
};

struct Diagnosis {
  bool ok = true;
  ErrorCode code = ErrorCode::NoArrangement;
  std::vector<int> witness;  // index subset on which the failure shows
  int carrier = 0;           // 0 when not specific to one curve
  char flavor = 0;           // 'D' or 'M' when specific to one cycle type
  std::string message;
  std::vector<int> carriers; // every curve whose cycles fail on the witness
};

class Extender {
 public:
  Extender(const Chirotope& chi, ReconstructOptions opt) : chi_(chi), opt_(opt) {}

  // Arrangements on Q whose triples are the entries of the chirotope.
  const std::vector<Arrangement>& extensions(std::vector<int> Q) {
    std::sort(Q.begin(), Q.end());
    auto it = memo_.find(Q);
    if (it != memo_.end()) return it->second;
    std::vector<Arrangement> res = compute(Q);
    return memo_.emplace(Q, std::move(res)).first->second;
  }

  const Diagnosis& diagnosis() const { return diag_; }

 private:
  std::vector<Symbol> cycle_of(const Arrangement& a, int carrier, bool crosscap) const {
    const auto& cs = a.structure();
    const std::size_t c = static_cast<std::size_t>(cs.position(carrier));
    return crosscap ? cs.T[c] : cs.S[c];
  }

  static std::vector<Symbol> restrict_cycle(const std::vector<Symbol>& w, const std::vector<int>& cos) {
    std::vector<Symbol> out;
    for (const auto& s : w)
      if (std::binary_search(cos.begin(), cos.end(), s.co)) out.push_back(s);
    return out;
  }

  void fail(ErrorCode code, const std::vector<int>& Q, int carrier, char flavor, const std::string& msg) {
    if (!diag_.ok) return;
    diag_.ok = false;
    diag_.code = code;
    diag_.witness = Q;
    diag_.carrier = carrier;
    diag_.flavor = flavor;
    diag_.message = msg;
  }

  std::vector<Arrangement> compute(const std::vector<int>& Q) {
    if (Q.size() < 3) throw Error(ErrorCode::SubsetTooSmall, "extensions need three indices");
    if (Q.size() == 3) {
      const Arrangement& e = chi_.entry(Q[0], Q[1], Q[2]);
      if (opt_.genus && e.genus() != opt_.genus) {
        fail(ErrorCode::NoArrangement, Q, 0, 0, "entry has the wrong genus");
        return {};
      }
      return {e};
    }
    // Smaller extensions first: their cycles constrain the shuffles.
    std::map<std::vector<int>, const std::vector<Arrangement>*> subs;
    if (Q.size() >= 5) {
      for (const auto& s : subsets(Q, Q.size() - 1)) {
        const auto& ext = extensions(s);
        if (ext.empty()) return {};
        subs.emplace(s, &ext);
      }
    }
    std::vector<std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>>> per_carrier;
    bool broken = false;
    for (int c : Q) {
      std::array<std::vector<std::vector<Symbol>>, 2> cands;
      for (int x = 0; x < 2; ++x) {
        const bool cross = x == 1;
        const char flavor = cross ? 'M' : 'D';
        std::vector<std::vector<Symbol>> constraints;
        for (std::size_t a = 0; a < Q.size(); ++a)
          for (std::size_t b = a + 1; b < Q.size(); ++b) {
            if (Q[a] == c || Q[b] == c) continue;
            constraints.push_back(cycle_of(chi_.entry(c, Q[a], Q[b]), c, cross));
          }
        // Cycles forced by every extension of a smaller subset.
        std::vector<std::pair<std::vector<int>, std::vector<std::vector<Symbol>>>> options;
        for (const auto& [s, ext] : subs) {
          if (!std::binary_search(s.begin(), s.end(), c)) continue;
          std::vector<std::vector<Symbol>> cyc;
          for (const auto& e : *ext) {
            auto w = cycle_of(e, c, cross);
            bool dup = false;
            for (const auto& v : cyc) dup = dup || rotation_equal(v, w);
            if (!dup) cyc.push_back(std::move(w));
          }
          if (cyc.size() == 1) constraints.push_back(cyc.front());
          std::vector<int> cos;
          for (int q : s)
            if (q != c) cos.push_back(q);
          options.emplace_back(cos, std::move(cyc));
        }
        auto found = common_shuffles(constraints, opt_.limit);
        std::vector<std::vector<Symbol>> kept;
        for (auto& w : found) {
          bool ok = true;
          for (const auto& [cos, cyc] : options) {
            const auto r = restrict_cycle(w, cos);
            bool any = false;
            for (const auto& v : cyc) any = any || rotation_equal(r, v);
            ok = ok && any;
          }
          if (ok) kept.push_back(std::move(w));
        }
        if (kept.empty()) {
          fail(ErrorCode::NotTransitive, Q, c, flavor,
               "the side cycles of curve " + std::to_string(c) + " admit no common shuffle");
          if (diag_.witness == Q && (diag_.carriers.empty() || diag_.carriers.back() != c))
            diag_.carriers.push_back(c);
          broken = true;
          break;
        }
        cands[static_cast<std::size_t>(x)] = std::move(kept);
      }
      if (broken) continue;
      std::vector<std::pair<std::vector<Symbol>, std::vector<Symbol>>> pairs;
      for (const auto& s : cands[0])
        for (const auto& t : cands[1])
          if (detail::detect_blocks(s, t)) pairs.emplace_back(s, t);
      if (pairs.empty()) {
        fail(ErrorCode::BlockInconsistent, Q, c, 0,
             "no block decomposition pairs the side cycles of curve " + std::to_string(c));
        if (diag_.witness == Q) diag_.carriers.push_back(c);
        broken = true;
        continue;
      }
      per_carrier.push_back(std::move(pairs));
    }
    if (broken) return {};
    std::vector<Arrangement> res;
    std::vector<std::size_t> pick(Q.size(), 0);
    std::string last_error;
    while (true) {
      Cycles d, m;
      for (std::size_t k = 0; k < Q.size(); ++k) {
        const auto& [s, t] = per_carrier[k][pick[k]];
        for (const auto& x : s) d[Q[k]].push_back(disk_letter(x));
        for (const auto& x : t) m[Q[k]].push_back(crosscap_letter(x));
      }
      try {
        Arrangement a = Arrangement::validate(Q, std::move(d), std::move(m));
        if (!opt_.genus || a.genus() == opt_.genus) res.push_back(std::move(a));
        else last_error = "only arrangements of genus " + std::to_string(a.genus());
      } catch (const Error& e) {
        last_error = e.what();
      }
      std::size_t k = 0;
      while (k < Q.size() && ++pick[k] == per_carrier[k].size()) pick[k++] = 0;
      if (k == Q.size()) break;
    }
    if (res.empty()) fail(ErrorCode::NoArrangement, Q, 0, 0, last_error.empty() ? "no arrangement" : last_error);
    return res;
  }

  const Chirotope& chi_;
  ReconstructOptions opt_;
  std::map<std::vector<int>, std::vector<Arrangement>> memo_;
  Diagnosis diag_;
};

struct ReconstructResult {
  std::vector<Arrangement> arrangements;
  Diagnosis diagnosis;
};

inline ReconstructResult reconstruct_all(const Chirotope& chi, ReconstructOptions opt = {}) {
  Extender ex(chi, opt);
  ReconstructResult r;
  r.arrangements = ex.extensions(chi.indices);
  r.diagnosis = ex.diagnosis();
  if (!r.arrangements.empty()) r.diagnosis = Diagnosis{};
  return r;
}

// The arrangement with the given chirotope; throws when none or several exist.
inline Arrangement reconstruct(const Chirotope& chi, ReconstructOptions opt = {}) {
  auto r = reconstruct_all(chi, opt);
  if (r.arrangements.empty()) throw Error(r.diagnosis.code, r.diagnosis.message);
  if (r.arrangements.size() > 1)
    throw Error(ErrorCode::NoArrangement, std::to_string(r.arrangements.size()) + " arrangements share the chirotope");
  return r.arrangements.front();
}

// Every k-subset of the chirotope extends to an arrangement of the required genus.
inline Diagnosis check_k_chirotope(const Chirotope& chi, std::size_t k, ReconstructOptions opt = {}) {
  if (k < 3 || k > chi.indices.size()) throw Error(ErrorCode::Domain, "k must lie between 3 and the number of indices");
  Extender ex(chi, opt);
  for (const auto& s : subsets(chi.indices, k)) {
    if (ex.extensions(s).empty()) {
      Diagnosis d = ex.diagnosis();
      if (d.ok) {
        d.ok = false;
        d.witness = s;
        d.message = "no extension";
      }
      return d;
    }
  }
  return {};
}

inline bool is_k_chirotope(const Chirotope& chi, std::size_t k, ReconstructOptions opt = {}) {
  return check_k_chirotope(chi, k, opt).ok;
}

// ---------------------------------------------------------------------------
// Ternary and block relations
// ---------------------------------------------------------------------------

struct CarrierRelations {
  int carrier = 0;
  char flavor = 'D';
  std::vector<Symbol> symbols;
  // orient[a][b][c] = 1 when (a, b, c) appear in this cyclic order, -1 for
  // the opposite order, 0 when unknown.
  std::vector<std::vector<std::vector<signed char>>> orient;
  std::set<std::pair<Symbol, Symbol>> same_block;
};

struct RelationsReport {
  std::vector<CarrierRelations> relations;
  Diagnosis diagnosis;
};

namespace detail {

inline int cyclic_orientation(const std::vector<std::size_t>& pos, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t pa = pos[a], pb = pos[b], pc = pos[c];
  const bool forward = (pa < pb && pb < pc) || (pb < pc && pc < pa) || (pc < pa && pa < pb);
  return forward ? 1 : -1;
}

}  // namespace detail

// Relations R (cyclic order from the four-subset extensions) and B (shared
// blocks from the triples), each checked for totality and transitivity.
inline RelationsReport relations_from(const Chirotope& chi, ReconstructOptions opt = {}) {
  RelationsReport rep;
  Extender ex(chi, opt);
  auto fail = [&](ErrorCode code, std::vector<int> witness, int carrier, char flavor, const std::string& msg) {
    std::sort(witness.begin(), witness.end());
    witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
    rep.diagnosis = Diagnosis{false, code, witness, carrier, flavor, msg, {}};
  };
  if (chi.indices.size() < 4) return rep;
  for (int c : chi.indices) {
    for (int x = 0; x < 2; ++x) {
      const bool cross = x == 1;
      CarrierRelations R;
      R.carrier = c;
      R.flavor = cross ? 'M' : 'D';
      for (int j : chi.indices)
        if (j != c)
          for (int k = 1; k <= 4; ++k) R.symbols.push_back({c, j, k});
      const std::size_t U = R.symbols.size();
      auto id = [&](const Symbol& s) {
        return static_cast<std::size_t>(std::lower_bound(R.symbols.begin(), R.symbols.end(), s) - R.symbols.begin());
      };
      R.orient.assign(U, std::vector<std::vector<signed char>>(U, std::vector<signed char>(U, 0)));
      std::vector<int> others;
      for (int j : chi.indices)
        if (j != c) others.push_back(j);
      for (const auto& cos : subsets(others, 3)) {
        std::vector<int> Q = cos;
        Q.push_back(c);
        const auto& ext = ex.extensions(Q);
        if (ext.empty()) {
          rep.diagnosis = ex.diagnosis();
          return rep;
        }
        for (const auto& e : ext) {
          const auto& cs = e.structure();
          const auto& w = cross ? cs.T[static_cast<std::size_t>(cs.position(c))] : cs.S[static_cast<std::size_t>(cs.position(c))];
          std::vector<std::size_t> pos(U, 0);
          std::vector<std::size_t> ids;
          for (std::size_t p = 0; p < w.size(); ++p) {
            pos[id(w[p])] = p;
            ids.push_back(id(w[p]));
          }
          for (std::size_t a : ids)
            for (std::size_t b : ids)
              for (std::size_t d : ids) {
                if (a == b || b == d || a == d) continue;
                const signed char o = static_cast<signed char>(detail::cyclic_orientation(pos, a, b, d));
                signed char& cur = R.orient[a][b][d];
                if (cur == 0) cur = o;
                else if (cur != o) {
                  fail(ErrorCode::NotTotal, {c, R.symbols[a].co, R.symbols[b].co, R.symbols[d].co}, c, R.flavor,
                       "both cyclic orders of a triple of crossings");
                  return rep;
                }
              }
        }
      }
      // Totality and transitivity: for every a, b <_a d is a strict total order.
      for (std::size_t a = 0; a < U; ++a)
        for (std::size_t b = 0; b < U; ++b)
          for (std::size_t d = 0; d < U; ++d) {
            if (a == b || b == d || a == d) continue;
            if (R.orient[a][b][d] == 0) {
              fail(ErrorCode::NotTotal, {c, R.symbols[a].co, R.symbols[b].co, R.symbols[d].co}, c, R.flavor,
                   "a triple of crossings has no cyclic order");
              return rep;
            }
          }
      for (std::size_t a = 0; a < U; ++a)
        for (std::size_t b = 0; b < U; ++b) {
          if (a == b) continue;
          for (std::size_t d = 0; d < U; ++d) {
            if (d == a || d == b || R.orient[a][b][d] != 1) continue;
            for (std::size_t e = 0; e < U; ++e) {
              if (e == a || e == b || e == d || R.orient[a][d][e] != 1) continue;
              if (R.orient[a][b][e] != 1) {
                fail(ErrorCode::NotTransitive,
                     {c, R.symbols[a].co, R.symbols[b].co, R.symbols[d].co, R.symbols[e].co}, c, R.flavor,
                     "the cyclic order on the crossings of curve " + std::to_string(c) + " is not transitive");
                return rep;
              }
            }
          }
        }
      // Block relation from the triples.
      for (const auto& pr : subsets(others, 2)) {
        const auto& e = chi.entry(c, pr[0], pr[1]);
        const auto& cs = e.structure();
        for (const auto& b : cs.blocks[static_cast<std::size_t>(cs.position(c))])
          for (const auto& s : b)
            for (const auto& t : b)
              if (!(s == t)) R.same_block.insert({s, t});
      }
      for (const auto& [s, t] : R.same_block)
        for (const auto& [t2, u] : R.same_block) {
          if (!(t2 == t) || u.co == s.co) continue;
          if (!R.same_block.count({s, u})) {
            fail(ErrorCode::BlockInconsistent, {c, s.co, t.co, u.co}, c, R.flavor, "shared blocks are not transitive");
            return rep;
          }
        }
      rep.relations.push_back(std::move(R));
    }
  }
  return rep;
}

}  // namespace dpl
