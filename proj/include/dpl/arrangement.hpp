// SPDX-License-Identifier: MIT
// Arrangements of double pseudolines given by their side cycles.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dpl/core_words.hpp"
#include "dpl/cycles.hpp"
#include "dpl/error.hpp"
#include "dpl/flag_complex.hpp"

namespace dpl {

class Arrangement {
 public:
  Arrangement() = default;

  // Checks the cycles and computes blocks, nodes and the cell structure.
  static Arrangement validate(std::vector<int> indices, Cycles disk, Cycles crosscap) {
    Arrangement a;
    a.structure_ = std::make_shared<const CycleStructure>(build_structure(indices, disk, crosscap));
    a.flags_ = std::make_shared<const FlagComplex>(build_flags(*a.structure_));
    a.disk_ = std::move(disk);
    a.crosscap_ = std::move(crosscap);
    return a;
  }

  static Arrangement validate(Cycles disk, Cycles crosscap) {
    std::vector<int> indices;
    for (const auto& kv : disk) indices.push_back(kv.first);
    return validate(std::move(indices), std::move(disk), std::move(crosscap));
  }

  const std::vector<int>& indices() const { return structure_->labels; }
  std::size_t n() const { return structure_->n(); }
  const Cycles& disk_cycles() const { return disk_; }
  const Cycles& crosscap_cycles() const { return crosscap_; }
  const std::vector<SignedIndex>& disk(int i) const { return lookup(disk_, i); }
  const std::vector<SignedIndex>& crosscap(int i) const { return lookup(crosscap_, i); }
  const CycleStructure& structure() const { return *structure_; }
  const FlagComplex& flags() const { return *flags_; }

  int genus() const { return flags_->genus(); }
  FaceVector face_vector() const { return flags_->face_vector(); }
  int num_nodes() const { return flags_->num_nodes; }

  std::string key(KeyMode mode = KeyMode::plain, int marked_face = -1) const {
    return canonical_key(*flags_, mode, marked_face);
  }

  // Equal iff the side-cycle families agree up to rotation.
  bool same_cycles(const Arrangement& o) const {
    if (indices() != o.indices()) return false;
    for (int i : indices()) {
      if (!rotation_equal(disk(i), o.disk(i))) return false;
      if (!rotation_equal(crosscap(i), o.crosscap(i))) return false;
    }
    return true;
  }

  std::string name;

 private:
  static const std::vector<SignedIndex>& lookup(const Cycles& c, int i) {
    auto it = c.find(i);
    if (it == c.end()) throw Error(ErrorCode::UnknownIndex, std::to_string(i));
    return it->second;
  }

  Cycles disk_, crosscap_;
  std::shared_ptr<const CycleStructure> structure_;
  std::shared_ptr<const FlagComplex> flags_;
};

// Crosscap cycles of a simple arrangement are its disk cycles with every
// letter negated.
inline Cycles simple_crosscap(const Cycles& disk) {
  Cycles m;
  for (const auto& [i, w] : disk) {
    auto& out = m[i];
    for (SignedIndex x : w) out.push_back(-x);
  }
  return m;
}

inline Arrangement from_disk_only(const Cycles& disk) {
  Arrangement a = Arrangement::validate(disk, simple_crosscap(disk));
  if (!a.structure().simple()) throw Error(ErrorCode::NotSimple, "disk cycles do not describe a simple arrangement");
  return a;
}

// Arrangement whose slotted disk cycles (equal to the crosscap ones) are given.
inline Arrangement from_slotted(const std::map<int, std::vector<Symbol>>& slotted) {
  Cycles d;
  for (const auto& [i, row] : slotted)
    for (const auto& s : row) d[i].push_back(disk_letter(s));
  return from_disk_only(d);
}

inline Arrangement restriction(const Arrangement& a, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  if (J.size() < 2) throw Error(ErrorCode::SubsetTooSmall, "restriction needs at least two indices");
  for (int j : J)
    if (!std::binary_search(a.indices().begin(), a.indices().end(), j))
      throw Error(ErrorCode::UnknownIndex, std::to_string(j));
  auto keep = [&](const std::vector<SignedIndex>& w) {
    std::vector<SignedIndex> out;
    for (SignedIndex x : w)
      if (std::binary_search(J.begin(), J.end(), base_of(x))) out.push_back(x);
    return out;
  };
  Cycles d, m;
  for (int j : J) {
    d[j] = keep(a.disk(j));
    m[j] = keep(a.crosscap(j));
  }
  return Arrangement::validate(J, std::move(d), std::move(m));
}

// Reindexes and reorients: curve i becomes curve |sigma(i)|, reversed when
// sigma(i) is negative.
inline Arrangement act(const SignedPermutation& sigma, const Arrangement& a) {
  Cycles d, m;
  for (int i : a.indices()) {
    const int t = base_of(sigma(i));
    d[t] = act(sigma, a.disk(i), i);
    m[t] = act(sigma, a.crosscap(i), i);
  }
  Arrangement out = Arrangement::validate(sigma.codomain(), std::move(d), std::move(m));
  out.name = a.name;
  return out;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

inline bool is_simple(const Arrangement& a) { return a.structure().simple(); }
inline bool is_genus_one(const Arrangement& a) { return a.genus() == 1; }

// Simple, and no vertex lies on the crosscap side of any curve.
inline bool is_thin(const Arrangement& a) {
  if (!is_simple(a) || a.genus() != 1) return false;
  for (const auto& row : node_sides(a.flags()))
    for (int s : row)
      if (s > 0) return false;
  return true;
}

// Every other curve meets curve i in four circularly consecutive crossings.
inline bool is_martagon(const Arrangement& a, int i) {
  const auto& cs = a.structure();
  const auto& s = cs.S[static_cast<std::size_t>(cs.position(i))];
  const std::size_t L = s.size();
  for (int j : a.indices()) {
    if (j == i) continue;
    std::size_t runs = 0;
    for (std::size_t p = 0; p < L; ++p)
      if (s[p].co == j && s[(p + L - 1) % L].co != j) ++runs;
    if (runs != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

inline std::vector<int> cyclic_order_from(int i, int n) {
  std::vector<int> order;
  for (int t = 1; t < n; ++t) order.push_back((i + t - 1) % n + 1);
  return order;
}

inline Arrangement cyclic_thin(int n) {
  if (n < 2) throw Error(ErrorCode::TooFewIndices, "cyclic_thin needs n >= 2");
  std::map<int, std::vector<Symbol>> rows;
  for (int i = 1; i <= n; ++i) {
    auto& r = rows[i];
    const auto order = cyclic_order_from(i, n);
    for (int j : order) r.insert(r.end(), {Symbol{i, j, 3}, Symbol{i, j, 4}});
    for (int j : order) r.insert(r.end(), {Symbol{i, j, 1}, Symbol{i, j, 2}});
  }
  Arrangement a = from_slotted(rows);
  a.name = "cyclic_thin(" + std::to_string(n) + ")";
  return a;
}

inline Arrangement all_c64(int n) {
  if (n < 3) throw Error(ErrorCode::TooFewIndices, "all_c64 needs n >= 3");
  std::map<int, std::vector<Symbol>> rows;
  for (int i = 1; i <= n; ++i) {
    auto& r = rows[i];
    const auto order = cyclic_order_from(i, n);
    for (int j : order) r.insert(r.end(), {Symbol{i, j, 4}, Symbol{i, j, 1}});
    for (int j : order) r.insert(r.end(), {Symbol{i, j, 2}, Symbol{i, j, 3}});
  }
  Arrangement a = from_slotted(rows);
  a.name = "all_c64(" + std::to_string(n) + ")";
  return a;
}

// ---------------------------------------------------------------------------
// Derived views
// ---------------------------------------------------------------------------

// Sequence of node ids met along curve i.
inline std::vector<int> node_cycle(const Arrangement& a, int i) {
  const auto& cs = a.structure();
  return cs.block_node[static_cast<std::size_t>(cs.position(i))];
}

// Crossing symbols naming a node, each relative to the smaller base.
inline std::vector<Symbol> node_symbols(const Arrangement& a, int node) {
  const auto& cs = a.structure();
  std::set<Symbol> out;
  for (const auto& [c, b] : cs.nodes[static_cast<std::size_t>(node)])
    for (const auto& x : cs.blocks[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)])
      out.insert(node_symbol(x));
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<int> parse_ints(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "not an integer: " + tok);
    }
    if (used != tok.size()) throw Error(ErrorCode::Parse, "not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

// Parsed but unvalidated contents of an arrangement file.
struct ArrangementText {
  std::vector<int> indices;
  Cycles disk, crosscap;
  std::map<std::string, std::string> meta;  // `#@ key: value` lines
};

// Accepts one `D <i>: ...` or `M <i>: ...` line into `t`; returns false for
// any other line.
inline bool parse_cycle_line(const std::string& line, ArrangementText& t) {
  const std::string s = detail::trim(line);
  if (s.size() < 2 || (s[0] != 'D' && s[0] != 'M') || (s[1] != ' ' && s[1] != '\t')) return false;
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::Parse, "missing ':' in " + s);
  const auto head = detail::parse_ints(s.substr(1, colon - 1));
  if (head.size() != 1) throw Error(ErrorCode::Parse, "expected one index in " + s);
  auto& target = s[0] == 'D' ? t.disk : t.crosscap;
  if (target.count(head[0])) throw Error(ErrorCode::Parse, "duplicate cycle in " + s);
  target[head[0]] = detail::parse_ints(s.substr(colon + 1));
  return true;
}

inline ArrangementText parse_arrangement_text(const std::string& text) {
  ArrangementText t;
  bool have_indices = false;
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    std::string line = detail::trim(raw);
    if (line.rfind("#@", 0) == 0) {
      const std::string body = detail::trim(line.substr(2));
      const auto colon = body.find(':');
      if (colon != std::string::npos) {
        const std::string k = detail::trim(body.substr(0, colon));
        const std::string v = detail::trim(body.substr(colon + 1));
        auto& slot = t.meta[k];
        slot = slot.empty() ? v : slot + "\n" + v;
      }
      continue;
    }
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = detail::trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.rfind("indices:", 0) == 0) {
      t.indices = detail::parse_ints(line.substr(8));
      have_indices = true;
      continue;
    }
    if (!parse_cycle_line(line, t)) throw Error(ErrorCode::Parse, "unrecognized line: " + line);
  }
  if (!have_indices) throw Error(ErrorCode::Parse, "missing 'indices:' line");
  return t;
}

inline Arrangement arrangement_from_text(const ArrangementText& t) {
  if (t.crosscap.empty()) {
    Arrangement a = Arrangement::validate(t.indices, t.disk, simple_crosscap(t.disk));
    if (!is_simple(a)) throw Error(ErrorCode::NotSimple, "disk cycles alone describe a non-simple arrangement");
    return a;
  }
  return Arrangement::validate(t.indices, t.disk, t.crosscap);
}

inline Arrangement parse_arrangement(const std::string& text) {
  return arrangement_from_text(parse_arrangement_text(text));
}

inline std::string serialize(const Arrangement& a, bool with_crosscap = true) {
  std::ostringstream os;
  if (!a.name.empty()) os << "# " << a.name << "\n";
  os << "indices:";
  for (int i : a.indices()) os << ' ' << i;
  os << "\n";
  for (int i : a.indices()) os << "D " << i << ": " << letters_to_string(a.disk(i)) << "\n";
  if (with_crosscap)
    for (int i : a.indices()) os << "M " << i << ": " << letters_to_string(a.crosscap(i)) << "\n";
  return os.str();
}

}  // namespace dpl
