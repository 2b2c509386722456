// SPDX-License-Identifier: MIT
// Mutations (merging, splitting, flips), flip-graph enumeration with
// canonical deduplication, and censuses of projective and Moebius classes.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "dpl/arrangement.hpp"
#include "dpl/error.hpp"
#include "dpl/flag_complex.hpp"

namespace dpl {

// A triangular 2-cell whose corners are simple crossings of three curves.
struct Triangle {
  int face = -1;
  std::array<int, 3> curves{};  // labels
  std::array<int, 3> sides{};   // side of the cell relative to each curve
  std::array<int, 3> corners{}; // node ids
};

struct MutationMove {
  enum class Kind { merge, split, flip };
  Kind kind = Kind::flip;
  int locus = -1;         // face id for merge and flip, node id for split
  int moving_curve = 0;   // curve label swept across the opposite corner
  int variant = 0;        // which of the two triangles a split releases
};

inline std::vector<Triangle> triangles(const Arrangement& a) {
  const auto& fc = a.flags();
  std::vector<std::vector<int>> by_face(static_cast<std::size_t>(fc.num_faces()));
  for (std::size_t x = 0; x < fc.size(); ++x) by_face[static_cast<std::size_t>(fc.face[x])].push_back(static_cast<int>(x));
  std::vector<Triangle> out;
  for (int f = 0; f < fc.num_faces(); ++f) {
    if (fc.face_size[static_cast<std::size_t>(f)] != 3) continue;
    std::map<int, int> side;
    std::set<int> corners;
    bool ok = true;
    for (int x : by_face[static_cast<std::size_t>(f)]) {
      const int c = fc.curve[static_cast<std::size_t>(x)];
      const int s = FlagComplex::side(x);
      auto [it, fresh] = side.emplace(c, s);
      if (!fresh && it->second != s) ok = false;
      corners.insert(fc.node[static_cast<std::size_t>(x)]);
    }
    if (!ok || side.size() != 3 || corners.size() != 3) continue;
    for (int v : corners) ok = ok && fc.degree[static_cast<std::size_t>(v)] == 2;
    if (!ok) continue;
    Triangle t;
    t.face = f;
    int k = 0;
    for (const auto& [c, s] : side) {
      t.curves[static_cast<std::size_t>(k)] = fc.labels[static_cast<std::size_t>(c)];
      t.sides[static_cast<std::size_t>(k)] = s;
      ++k;
    }
    k = 0;
    for (int v : corners) t.corners[static_cast<std::size_t>(k++)] = v;
    out.push_back(t);
  }
  return out;
}

namespace detail {

// Positions, in the slotted cycles of curve `label`, of the crossings lying
// on the given corner nodes.
inline std::vector<std::size_t> corner_positions(const Arrangement& a, int label, const std::array<int, 3>& corners,
                                                 bool crosscap) {
  const auto& cs = a.structure();
  const std::size_t c = static_cast<std::size_t>(cs.position(label));
  std::set<Symbol> syms;
  for (int v : corners) {
    const int b = cs.block_at(v, static_cast<int>(c));
    if (b < 0) continue;
    for (const auto& x : cs.blocks[c][static_cast<std::size_t>(b)]) syms.insert(x);
  }
  const auto& cyc = crosscap ? cs.T[c] : cs.S[c];
  std::vector<std::size_t> pos;
  for (std::size_t p = 0; p < cyc.size(); ++p)
    if (syms.count(cyc[p])) pos.push_back(p);
  return pos;
}

inline const Triangle& find_triangle(const std::vector<Triangle>& ts, int face) {
  for (const auto& t : ts)
    if (t.face == face) return t;
  throw Error(ErrorCode::IllegalLocus, "face " + std::to_string(face) + " is not a triangle with simple corners");
}

}  // namespace detail

// Collapses a triangle onto a triple point.
inline Arrangement merge(const Arrangement& a, int face) {
  const auto ts = triangles(a);
  const Triangle& t = detail::find_triangle(ts, face);
  Cycles d = a.disk_cycles(), m = a.crosscap_cycles();
  for (std::size_t k = 0; k < 3; ++k) {
    const bool cross = t.sides[k] > 0;
    const auto pos = detail::corner_positions(a, t.curves[k], t.corners, cross);
    if (pos.size() != 2) throw Error(ErrorCode::IllegalLocus, "triangle corners not found");
    auto& w = cross ? m[t.curves[k]] : d[t.curves[k]];
    std::swap(w[pos[0]], w[pos[1]]);
  }
  return Arrangement::validate(a.indices(), std::move(d), std::move(m));
}

// Inverse of merging at a triple point: every valid way to release a
// triangle, ordered by which cycle keeps its order on each curve.
inline std::vector<Arrangement> split_all(const Arrangement& a, int node) {
  const auto& cs = a.structure();
  if (node < 0 || node >= static_cast<int>(cs.nodes.size())) throw Error(ErrorCode::IllegalLocus, "no such node");
  const auto& members = cs.nodes[static_cast<std::size_t>(node)];
  if (members.size() != 3) throw Error(ErrorCode::IllegalLocus, "splitting needs a triple point");
  std::vector<Arrangement> out;
  for (unsigned mask = 0; mask < 8; ++mask) {
    Cycles d = a.disk_cycles(), m = a.crosscap_cycles();
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [c, b] = members[k];
      const auto& block = cs.blocks[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
      if (block.size() != 2) throw Error(ErrorCode::IllegalLocus, "triple point with a longer block");
      const bool keep_disk = (mask >> k) & 1u;
      const auto& cyc = keep_disk ? cs.T[static_cast<std::size_t>(c)] : cs.S[static_cast<std::size_t>(c)];
      std::vector<std::size_t> pos;
      for (std::size_t p = 0; p < cyc.size(); ++p)
        if (cyc[p] == block[0] || cyc[p] == block[1]) pos.push_back(p);
      const int label = cs.labels[static_cast<std::size_t>(c)];
      auto& w = keep_disk ? m[label] : d[label];
      std::swap(w[pos[0]], w[pos[1]]);
    }
    try {
      Arrangement r = Arrangement::validate(a.indices(), std::move(d), std::move(m));
      if (r.genus() == a.genus() && r.num_nodes() == a.num_nodes() + 2) out.push_back(std::move(r));
    } catch (const Error&) {
    }
  }
  return out;
}

inline Arrangement split(const Arrangement& a, int node, int variant = 0) {
  auto all = split_all(a, node);
  if (variant < 0 || variant >= static_cast<int>(all.size()))
    throw Error(ErrorCode::IllegalLocus, "no split variant " + std::to_string(variant));
  return all[static_cast<std::size_t>(variant)];
}

// Merge followed by the split releasing the opposite triangle.
inline Arrangement flip(const Arrangement& a, int face) {
  const auto ts = triangles(a);
  const Triangle& t = detail::find_triangle(ts, face);
  Cycles d = a.disk_cycles(), m = a.crosscap_cycles();
  for (std::size_t k = 0; k < 3; ++k) {
    for (bool cross : {false, true}) {
      const auto pos = detail::corner_positions(a, t.curves[k], t.corners, cross);
      if (pos.size() != 2) throw Error(ErrorCode::IllegalLocus, "triangle corners not found");
      auto& w = cross ? m[t.curves[k]] : d[t.curves[k]];
      std::swap(w[pos[0]], w[pos[1]]);
    }
  }
  return Arrangement::validate(a.indices(), std::move(d), std::move(m));
}

inline Arrangement apply(const Arrangement& a, const MutationMove& mv) {
  switch (mv.kind) {
    case MutationMove::Kind::merge: return merge(a, mv.locus);
    case MutationMove::Kind::split: return split(a, mv.locus, mv.variant);
    case MutationMove::Kind::flip: return flip(a, mv.locus);
  }
  throw Error(ErrorCode::IllegalLocus, "unknown move");
}

// Triple points of an arrangement (candidates for splitting).
inline std::vector<int> triple_points(const Arrangement& a) {
  std::vector<int> out;
  const auto& cs = a.structure();
  for (std::size_t v = 0; v < cs.nodes.size(); ++v) {
    if (cs.nodes[v].size() != 3) continue;
    bool ok = true;
    for (const auto& [c, b] : cs.nodes[v])
      ok = ok && cs.blocks[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)].size() == 2;
    if (ok) out.push_back(static_cast<int>(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

// Whenever a vertex lies on the crosscap side of curve `label`, some
// triangle on that side has an edge on the curve.
inline bool pumping_check(const Arrangement& a, int label) {
  const auto& fc = a.flags();
  const int c = a.structure().position(label);
  const auto ns = node_sides(fc);
  bool any = false;
  for (int s : ns[static_cast<std::size_t>(c)]) any = any || s > 0;
  if (!any) return true;
  for (std::size_t x = 0; x < fc.size(); ++x) {
    if (fc.curve[x] != c || FlagComplex::side(static_cast<int>(x)) < 0) continue;
    if (fc.face_size[static_cast<std::size_t>(fc.face[x])] == 3) return true;
  }
  return false;
}

// Flip neighbours of an arrangement.
inline std::vector<Arrangement> flip_neighbours(const Arrangement& a) {
  std::vector<Arrangement> out;
  for (const auto& t : triangles(a)) out.push_back(flip(a, t.face));
  return out;
}

// The flip graph restricted to the given classes is connected.
inline bool connectivity_check(const std::vector<Arrangement>& classes) {
  if (classes.empty()) return true;
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < classes.size(); ++k) index.emplace(classes[k].key(), k);
  std::vector<std::size_t> parent(classes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const auto& nb : flip_neighbours(classes[k])) {
      auto it = index.find(nb.key());
      if (it != index.end()) parent[find(it->second)] = find(k);
    }
  }
  const std::size_t r = find(0);
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (find(k) != r) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

enum class Setting { projective, moebius };

struct CensusRow {
  int n = 0;
  std::uint64_t a = 0;  // marked classes up to isotopy, indexed
  std::uint64_t b = 0;  // marked classes up to isotopy
  std::uint64_t c = 0;  // marked classes up to isomorphism
  std::uint64_t d = 0;  // projective classes admitting a marked cell
};

struct EnumOptions {
  int n = 3;
  Setting setting = Setting::projective;
  bool simple_only = true;
  std::size_t state_limit = 0;  // 0: unlimited
  unsigned threads = 1;
  std::uint64_t shuffle_seed = 0;  // nonzero: randomize exploration order
};

struct EnumResult {
  std::vector<std::string> keys;          // sorted plain keys
  std::vector<Arrangement> classes;       // representatives, same order
  bool complete = true;
  bool flip_connected = true;             // every simple class reached by flips alone
  std::optional<CensusRow> row;
};

namespace detail {

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  for (auto& th : pool) th.join();
}

// Breadth-first closure of `seeds` under `moves`, deduplicated by plain key.
inline bool closure(std::unordered_map<std::string, Arrangement>& seen, std::vector<Arrangement> frontier,
                    const std::function<std::vector<Arrangement>(const Arrangement&)>& moves,
                    const EnumOptions& opt) {
  std::mt19937_64 rng(opt.shuffle_seed);
  while (!frontier.empty()) {
    if (opt.shuffle_seed) std::shuffle(frontier.begin(), frontier.end(), rng);
    std::vector<std::vector<std::pair<std::string, Arrangement>>> found(frontier.size());
    parallel_for(frontier.size(), opt.threads, [&](std::size_t k) {
      for (auto& nb : moves(frontier[k])) {
        if (nb.genus() != 1) continue;
        std::string key = nb.key();
        found[k].emplace_back(std::move(key), std::move(nb));
      }
    });
    std::vector<Arrangement> next;
    for (auto& list : found) {
      for (auto& [key, arr] : list) {
        if (seen.count(key)) continue;
        if (opt.state_limit && seen.size() >= opt.state_limit) return false;
        seen.emplace(key, arr);
        next.push_back(std::move(arr));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace detail

// Moebius counts contributed by one projective class.
inline CensusRow moebius_counts(const Arrangement& a) {
  CensusRow row;
  row.n = static_cast<int>(a.n());
  const auto& fc = a.flags();
  const auto adm = admissible_cells(fc);
  if (adm.empty()) return row;
  row.d = 1;
  const auto autos = automorphisms(fc);
  const auto par = face_parity(fc);
  std::map<std::pair<int, int>, int> rep;
  for (std::size_t x = 0; x < fc.size(); ++x) rep.emplace(std::make_pair(fc.face[x], par[x]), static_cast<int>(x));
  // Curve permutation induced by each automorphism.
  std::vector<bool> fixes_curves(autos.size(), true);
  for (std::size_t k = 0; k < autos.size(); ++k)
    for (std::size_t x = 0; x < fc.size(); ++x)
      if (fc.curve[static_cast<std::size_t>(autos[k][x])] != fc.curve[x]) {
        fixes_curves[k] = false;
        break;
      }
  std::set<int> seen_faces;
  for (int f : adm) {
    if (seen_faces.count(f)) continue;
    ++row.c;
    const int x = rep.at({f, 0});
    for (const auto& m : autos) seen_faces.insert(fc.face[static_cast<std::size_t>(m[static_cast<std::size_t>(x)])]);
  }
  std::set<std::pair<int, int>> seen_fo;
  const std::uint64_t nfact = factorial(row.n);
  for (int f : adm) {
    for (int o : {0, 1}) {
      if (seen_fo.count({f, o})) continue;
      ++row.b;
      const int x = rep.at({f, o});
      std::uint64_t stab = 0, fix = 0;
      for (std::size_t k = 0; k < autos.size(); ++k) {
        const std::size_t y = static_cast<std::size_t>(autos[k][static_cast<std::size_t>(x)]);
        const std::pair<int, int> img{fc.face[y], par[y]};
        seen_fo.insert(img);
        if (img == std::make_pair(f, o)) {
          ++stab;
          if (fixes_curves[k]) ++fix;
        }
      }
      row.a += nfact * fix / stab;
    }
  }
  return row;
}

inline EnumResult enumerate(const EnumOptions& opt) {
  if (opt.n < 2) throw Error(ErrorCode::TooFewIndices, "enumeration needs n >= 2");
  EnumResult res;
  std::unordered_map<std::string, Arrangement> seen;
  Arrangement seed = cyclic_thin(opt.n);
  seen.emplace(seed.key(), seed);
  std::mt19937_64 rng(opt.shuffle_seed ^ 0x9e3779b97f4a7c15ULL);
  auto flips = [&](const Arrangement& a) {
    auto nb = flip_neighbours(a);
    if (opt.shuffle_seed) {
      std::mt19937_64 local(std::hash<std::string>{}(a.key()) ^ opt.shuffle_seed);
      std::shuffle(nb.begin(), nb.end(), local);
    }
    return nb;
  };
  res.complete = detail::closure(seen, {seed}, flips, opt);
  if (res.complete && !opt.simple_only) {
    // Widen to non-simple arrangements: merging reaches every triple point.
    std::vector<Arrangement> all;
    for (auto& kv : seen) all.push_back(kv.second);
    auto moves = [](const Arrangement& a) {
      std::vector<Arrangement> out;
      for (const auto& t : triangles(a)) out.push_back(merge(a, t.face));
      for (int v : triple_points(a))
        for (auto& s : split_all(a, v)) out.push_back(std::move(s));
      for (auto& f : flip_neighbours(a)) out.push_back(std::move(f));
      return out;
    };
    res.complete = detail::closure(seen, all, moves, opt);
  }
  if (res.complete && opt.simple_only) {
    // Confirm that merge/split moves through non-simple states reach no new
    // simple class.
    std::unordered_map<std::string, Arrangement> wide = seen;
    std::vector<Arrangement> all;
    for (auto& kv : seen) all.push_back(kv.second);
    if (opt.n <= 3) {
      auto moves = [](const Arrangement& a) {
        std::vector<Arrangement> out;
        for (const auto& t : triangles(a)) out.push_back(merge(a, t.face));
        for (int v : triple_points(a))
          for (auto& s : split_all(a, v)) out.push_back(std::move(s));
        return out;
      };
      EnumOptions o2 = opt;
      o2.state_limit = 0;
      detail::closure(wide, all, moves, o2);
      for (const auto& [k, a] : wide)
        if (is_simple(a) && !seen.count(k)) res.flip_connected = false;
    }
  }
  for (const auto& kv : seen) res.keys.push_back(kv.first);
  std::sort(res.keys.begin(), res.keys.end());
  for (const auto& k : res.keys) res.classes.push_back(seen.at(k));
  if (opt.setting == Setting::moebius && res.complete) {
    std::vector<CensusRow> rows(res.classes.size());
    detail::parallel_for(res.classes.size(), opt.threads,
                         [&](std::size_t k) { rows[k] = moebius_counts(res.classes[k]); });
    CensusRow total;
    total.n = opt.n;
    for (const auto& r : rows) {
      total.a += r.a;
      total.b += r.b;
      total.c += r.c;
      total.d += r.d;
    }
    res.row = total;
  }
  return res;
}

}  // namespace dpl
