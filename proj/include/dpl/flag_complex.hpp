// SPDX-License-Identifier: MIT
// Flags with the three involutions, faces, genus, canonical keys and
// automorphisms of the cell decomposition induced by an arrangement.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dpl/core_words.hpp"
#include "dpl/cycles.hpp"
#include "dpl/error.hpp"

namespace dpl {

using FaceVector = std::map<int, int>;

// Flag id = incidence * 4 + (o < 0) * 2 + (s < 0), where an incidence is a
// (curve, block) pair.
struct FlagComplex {
  std::vector<int> labels;
  std::vector<int> s0, s1, s2;
  std::vector<int> node;      // node id per flag
  std::vector<int> curve;     // curve position per flag
  std::vector<int> degree;    // number of curves through each node
  std::vector<int> face;      // face id per flag
  std::vector<int> face_size; // number of edges of each face
  int num_nodes = 0;

  std::size_t size() const { return s0.size(); }
  static int orient(int f) { return (f & 2) ? -1 : 1; }
  static int side(int f) { return (f & 1) ? -1 : 1; }
  int num_faces() const { return static_cast<int>(face_size.size()); }
  int num_edges() const { return static_cast<int>(size() / 4); }
  int euler() const { return num_nodes - num_edges() + num_faces(); }
  int genus() const { return 2 - euler(); }

  FaceVector face_vector() const {
    FaceVector fv;
    for (int s : face_size) ++fv[s];
    return fv;
  }
};

inline FlagComplex build_flags(const CycleStructure& cs) {
  FlagComplex fc;
  fc.labels = cs.labels;
  const std::size_t n = cs.n();
  std::vector<int> offset(n + 1, 0);
  for (std::size_t c = 0; c < n; ++c) offset[c + 1] = offset[c] + static_cast<int>(cs.blocks[c].size());
  const std::size_t N = static_cast<std::size_t>(offset[n]) * 4;
  fc.s0.assign(N, -1);
  fc.s1.assign(N, -1);
  fc.s2.assign(N, -1);
  fc.node.assign(N, -1);
  fc.curve.assign(N, -1);
  fc.num_nodes = static_cast<int>(cs.nodes.size());
  fc.degree.resize(cs.nodes.size());
  for (std::size_t v = 0; v < cs.nodes.size(); ++v) fc.degree[v] = static_cast<int>(cs.nodes[v].size());
  auto id = [&](int c, int b, int o, int s) {
    return (offset[static_cast<std::size_t>(c)] + b) * 4 + (o < 0 ? 2 : 0) + (s < 0 ? 1 : 0);
  };
  for (std::size_t c = 0; c < n; ++c) {
    const int nb = static_cast<int>(cs.blocks[c].size());
    for (int b = 0; b < nb; ++b) {
      const int v = cs.block_node[c][static_cast<std::size_t>(b)];
      const auto& block = cs.blocks[c][static_cast<std::size_t>(b)];
      for (int o : {1, -1}) {
        for (int s : {1, -1}) {
          const int x = id(static_cast<int>(c), b, o, s);
          fc.node[static_cast<std::size_t>(x)] = v;
          fc.curve[static_cast<std::size_t>(x)] = static_cast<int>(c);
          fc.s2[static_cast<std::size_t>(x)] = id(static_cast<int>(c), b, o, -s);
          const int nbk = ((b + (o > 0 ? 1 : -1)) % nb + nb) % nb;
          fc.s0[static_cast<std::size_t>(x)] = id(static_cast<int>(c), nbk, -o, s);
          // Candidates on each other curve through the node.
          struct Cand {
            int curve;
            SlotFlag f;
          };
          std::vector<Cand> cand;
          for (const auto& sym : block) {
            const SlotFlag g = sigma1_base({sym.slot, o, s});
            cand.push_back({cs.position(sym.co), g});
          }
          auto slot_on = [&](int cj, int co_label) {
            const int bj = cs.block_at(v, cj);
            for (const auto& y : cs.blocks[static_cast<std::size_t>(cj)][static_cast<std::size_t>(bj)])
              if (y.co == co_label) return y.slot;
            throw Error(ErrorCode::Domain, "node symbol missing");
          };
          auto precedes = [&](const Cand& J, const Cand& K) {
            const int m = slot_on(J.curve, cs.labels[static_cast<std::size_t>(K.curve)]);
            const SlotFlag g = sigma1_base({m, J.f.o, -J.f.s});
            return g.o == K.f.o && g.s == K.f.s;
          };
          int chosen = -1;
          for (std::size_t a = 0; a < cand.size(); ++a) {
            bool all = true;
            for (std::size_t bb = 0; bb < cand.size() && all; ++bb)
              if (a != bb) all = precedes(cand[a], cand[bb]);
            if (all) {
              if (chosen >= 0) throw Error(ErrorCode::Domain, "ambiguous 1-flag image");
              chosen = static_cast<int>(a);
            }
          }
          if (chosen < 0) throw Error(ErrorCode::Domain, "no 1-flag image");
          const Cand& J = cand[static_cast<std::size_t>(chosen)];
          fc.s1[static_cast<std::size_t>(x)] = id(J.curve, cs.block_at(v, J.curve), J.f.o, J.f.s);
        }
      }
    }
  }
  // Faces are the orbits of <s0, s1>.
  fc.face.assign(N, -1);
  std::vector<int> stack;
  for (std::size_t x = 0; x < N; ++x) {
    if (fc.face[x] >= 0) continue;
    const int f = static_cast<int>(fc.face_size.size());
    int count = 0;
    fc.face[x] = f;
    stack.assign(1, static_cast<int>(x));
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      ++count;
      for (int z : {fc.s0[static_cast<std::size_t>(y)], fc.s1[static_cast<std::size_t>(y)]}) {
        if (fc.face[static_cast<std::size_t>(z)] < 0) {
          fc.face[static_cast<std::size_t>(z)] = f;
          stack.push_back(z);
        }
      }
    }
    fc.face_size.push_back(count / 2);
  }
  return fc;
}

// ---------------------------------------------------------------------------
// Canonical keys and automorphisms
// ---------------------------------------------------------------------------

struct KeyOptions {
  bool indexed = false;
  bool oriented = false;
  int marked_face = -1;
};

enum class KeyMode { plain, indexed_oriented, marked };

inline KeyOptions key_options(KeyMode m, int marked_face = -1) {
  switch (m) {
    case KeyMode::plain: return {};
    case KeyMode::indexed_oriented: return {true, true, -1};
    case KeyMode::marked: return {false, false, marked_face};
  }
  return {};
}

namespace detail {

inline std::vector<std::int64_t> flag_colors(const FlagComplex& fc, const KeyOptions& opt) {
  std::vector<std::int64_t> col(fc.size());
  for (std::size_t x = 0; x < fc.size(); ++x) {
    std::int64_t c = FlagComplex::side(static_cast<int>(x)) < 0 ? 1 : 0;
    if (opt.oriented && FlagComplex::orient(static_cast<int>(x)) < 0) c |= 2;
    if (opt.marked_face >= 0 && fc.face[x] == opt.marked_face) c |= 4;
    if (opt.indexed) c |= static_cast<std::int64_t>(fc.labels[static_cast<std::size_t>(fc.curve[x])]) << 3;
    col[x] = c;
  }
  return col;
}

// Isomorphism-invariant signature used to restrict candidate start flags.
inline std::vector<std::tuple<std::int64_t, int, int, int>> flag_signatures(const FlagComplex& fc,
                                                                            const std::vector<std::int64_t>& col) {
  std::vector<std::tuple<std::int64_t, int, int, int>> sig(fc.size());
  for (std::size_t x = 0; x < fc.size(); ++x) {
    const int f1 = fc.face_size[static_cast<std::size_t>(fc.face[x])];
    const int f2 = fc.face_size[static_cast<std::size_t>(fc.face[static_cast<std::size_t>(fc.s2[x])])];
    sig[x] = {col[x], f1, f2, fc.degree[static_cast<std::size_t>(fc.node[x])]};
  }
  return sig;
}

inline std::vector<int> start_flags(const FlagComplex& fc, const std::vector<std::int64_t>& col) {
  const auto sig = flag_signatures(fc, col);
  // Use the least frequent signature class, ties broken by the signature itself.
  std::map<std::tuple<std::int64_t, int, int, int>, int> freq;
  for (const auto& s : sig) ++freq[s];
  auto best = freq.begin();
  for (auto it = freq.begin(); it != freq.end(); ++it)
    if (it->second < best->second) best = it;
  std::vector<int> out;
  for (std::size_t x = 0; x < fc.size(); ++x)
    if (sig[x] == best->first) out.push_back(static_cast<int>(x));
  return out;
}

}  // namespace detail

// Byte string that is equal for two complexes iff they are isomorphic under
// the chosen options.
inline std::string canonical_key(const FlagComplex& fc, const KeyOptions& opt = {}) {
  const std::size_t N = fc.size();
  const auto col = detail::flag_colors(fc, opt);
  const auto starts = detail::start_flags(fc, col);
  std::vector<std::int64_t> best, code;
  std::vector<int> num(N), order;
  bool have = false;
  for (int st : starts) {
    std::fill(num.begin(), num.end(), -1);
    order.clear();
    code.clear();
    num[static_cast<std::size_t>(st)] = 0;
    order.push_back(st);
    bool smaller = !have;
    bool abort = false;
    auto emit = [&](std::int64_t v) {
      if (!smaller) {
        const std::size_t p = code.size();
        if (p >= best.size()) abort = true;
        else if (v < best[p]) smaller = true;
        else if (v > best[p]) abort = true;
      }
      code.push_back(v);
    };
    for (std::size_t k = 0; k < order.size() && !abort; ++k) {
      const std::size_t x = static_cast<std::size_t>(order[k]);
      emit(col[x]);
      for (const auto* g : {&fc.s0, &fc.s1, &fc.s2}) {
        const int y = (*g)[x];
        if (num[static_cast<std::size_t>(y)] < 0) {
          num[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
          order.push_back(y);
        }
        emit(num[static_cast<std::size_t>(y)]);
        if (abort) break;
      }
    }
    if (abort) continue;
    if (smaller || !have) {
      best = code;
      have = true;
    }
  }
  std::string key;
  key.reserve(best.size() * 2 + 8);
  auto put = [&](std::int64_t v) {
    // Variable-length encoding keeps keys compact and order independent of width.
    std::uint64_t u = static_cast<std::uint64_t>(v);
    do {
      unsigned char byte = u & 0x7f;
      u >>= 7;
      if (u) byte |= 0x80;
      key.push_back(static_cast<char>(byte));
    } while (u);
  };
  put(static_cast<std::int64_t>(N));
  for (auto v : best) put(v);
  return key;
}

inline std::string canonical_key(const FlagComplex& fc, KeyMode mode, int marked_face = -1) {
  return canonical_key(fc, key_options(mode, marked_face));
}

inline std::string hex_key(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

// Automorphisms as flag permutations preserving the three involutions and colors.
inline std::vector<std::vector<int>> automorphisms(const FlagComplex& fc, const KeyOptions& opt = {}) {
  const std::size_t N = fc.size();
  const auto col = detail::flag_colors(fc, opt);
  const auto sig = detail::flag_signatures(fc, col);
  const auto starts = detail::start_flags(fc, col);
  const int f0 = starts.front();
  std::vector<std::vector<int>> out;
  std::vector<int> m(N), stack;
  for (std::size_t t = 0; t < N; ++t) {
    if (sig[t] != sig[static_cast<std::size_t>(f0)]) continue;
    std::fill(m.begin(), m.end(), -1);
    m[static_cast<std::size_t>(f0)] = static_cast<int>(t);
    stack.assign(1, f0);
    bool ok = true;
    while (!stack.empty() && ok) {
      const std::size_t x = static_cast<std::size_t>(stack.back());
      stack.pop_back();
      for (const auto* g : {&fc.s0, &fc.s1, &fc.s2}) {
        const int y = (*g)[x];
        const int ty = (*g)[static_cast<std::size_t>(m[x])];
        if (col[static_cast<std::size_t>(y)] != col[static_cast<std::size_t>(ty)]) {
          ok = false;
          break;
        }
        if (m[static_cast<std::size_t>(y)] < 0) {
          m[static_cast<std::size_t>(y)] = ty;
          stack.push_back(y);
        } else if (m[static_cast<std::size_t>(y)] != ty) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(N, 0);
    for (int y : m) {
      if (y < 0 || hit[static_cast<std::size_t>(y)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(y)] = 1;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

inline std::size_t automorphism_order(const FlagComplex& fc, const KeyOptions& opt = {}) {
  return automorphisms(fc, opt).size();
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

// Number of distinct reindexed and reoriented versions.
inline std::uint64_t orbit_count(const FlagComplex& fc) {
  const int n = static_cast<int>(fc.labels.size());
  const std::uint64_t group = factorial(n) << n;
  return group * automorphism_order(fc, key_options(KeyMode::indexed_oriented)) / automorphism_order(fc);
}

// ---------------------------------------------------------------------------
// Sides, admissible cells, parity
// ---------------------------------------------------------------------------

// side[c][f] is -1 when face f lies on the disk side of curve c, +1 otherwise.
inline std::vector<std::vector<int>> face_sides(const FlagComplex& fc) {
  const std::size_t n = fc.labels.size();
  const std::size_t F = fc.face_size.size();
  std::vector<std::vector<int>> side(n, std::vector<int>(F, 0));
  // Adjacency of faces across edges.
  std::vector<std::vector<std::pair<int, int>>> adj(F);
  for (std::size_t x = 0; x < fc.size(); ++x) {
    const int a = fc.face[x];
    const int b = fc.face[static_cast<std::size_t>(fc.s2[x])];
    adj[static_cast<std::size_t>(a)].push_back({b, fc.curve[x]});
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> stack;
    for (std::size_t x = 0; x < fc.size(); ++x) {
      if (fc.curve[x] != static_cast<int>(c)) continue;
      int& sd = side[c][static_cast<std::size_t>(fc.face[x])];
      const int want = FlagComplex::side(static_cast<int>(x));
      if (sd == 0) {
        sd = want;
        stack.push_back(fc.face[x]);
      } else if (sd != want) {
        sd = 2;  // a face meeting both sides: only possible off genus one
      }
    }
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (const auto& [g, cc] : adj[static_cast<std::size_t>(f)]) {
        if (cc == static_cast<int>(c)) continue;
        if (side[c][static_cast<std::size_t>(g)] == 0) {
          side[c][static_cast<std::size_t>(g)] = side[c][static_cast<std::size_t>(f)];
          stack.push_back(g);
        }
      }
    }
  }
  return side;
}

inline std::vector<int> admissible_cells(const FlagComplex& fc) {
  if (fc.genus() != 1) throw Error(ErrorCode::GenusNotOne, "admissible cells need genus one");
  const auto side = face_sides(fc);
  std::vector<int> out;
  for (int f = 0; f < fc.num_faces(); ++f) {
    bool ok = true;
    for (const auto& sc : side) ok = ok && sc[static_cast<std::size_t>(f)] == -1;
    if (ok) out.push_back(f);
  }
  return out;
}

// Side of each node relative to each curve (0 when the node lies on the curve).
inline std::vector<std::vector<int>> node_sides(const FlagComplex& fc) {
  const auto fs = face_sides(fc);
  std::vector<std::vector<int>> out(fc.labels.size(), std::vector<int>(static_cast<std::size_t>(fc.num_nodes), 0));
  for (std::size_t c = 0; c < fc.labels.size(); ++c) {
    std::vector<char> on(static_cast<std::size_t>(fc.num_nodes), 0);
    for (std::size_t x = 0; x < fc.size(); ++x)
      if (fc.curve[x] == static_cast<int>(c)) on[static_cast<std::size_t>(fc.node[x])] = 1;
    for (std::size_t x = 0; x < fc.size(); ++x) {
      const int v = fc.node[x];
      if (!on[static_cast<std::size_t>(v)]) out[c][static_cast<std::size_t>(v)] = fs[c][static_cast<std::size_t>(fc.face[x])];
    }
  }
  return out;
}

// Two-coloring of flags along <s0, s1>: flags of a face split into its two
// traversal orientations.
inline std::vector<int> face_parity(const FlagComplex& fc) {
  std::vector<int> par(fc.size(), -1), stack;
  for (std::size_t x = 0; x < fc.size(); ++x) {
    if (par[x] >= 0) continue;
    par[x] = 0;
    stack.assign(1, static_cast<int>(x));
    while (!stack.empty()) {
      const std::size_t y = static_cast<std::size_t>(stack.back());
      stack.pop_back();
      for (int z : {fc.s0[y], fc.s1[y]}) {
        if (par[static_cast<std::size_t>(z)] < 0) {
          par[static_cast<std::size_t>(z)] = 1 - par[y];
          stack.push_back(z);
        }
      }
    }
  }
  return par;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

inline std::string flag_graph_dot(const FlagComplex& fc) {
  std::ostringstream os;
  os << "graph flags {\n";
  for (std::size_t x = 0; x < fc.size(); ++x) {
    os << "  f" << x << " [label=\"n" << fc.node[x] << (FlagComplex::orient(static_cast<int>(x)) > 0 ? " +" : " -")
       << " " << fc.labels[static_cast<std::size_t>(fc.curve[x])]
       << (FlagComplex::side(static_cast<int>(x)) > 0 ? " +" : " -") << "\"];\n";
  }
  int k = 0;
  for (const auto* g : {&fc.s0, &fc.s1, &fc.s2}) {
    for (std::size_t x = 0; x < fc.size(); ++x) {
      const std::size_t y = static_cast<std::size_t>((*g)[x]);
      if (x < y) os << "  f" << x << " -- f" << y << " [label=\"" << k << "\"];\n";
    }
    ++k;
  }
  os << "}\n";
  return os.str();
}

inline std::string dual_graph_dot(const FlagComplex& fc) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (int f = 0; f < fc.num_faces(); ++f)
    os << "  c" << f << " [label=\"" << fc.face_size[static_cast<std::size_t>(f)] << "\"];\n";
  for (std::size_t x = 0; x < fc.size(); ++x) {
    if (FlagComplex::orient(static_cast<int>(x)) < 0 || FlagComplex::side(static_cast<int>(x)) < 0) continue;
    os << "  c" << fc.face[x] << " -- c" << fc.face[static_cast<std::size_t>(fc.s2[x])] << " [label=\""
       << fc.labels[static_cast<std::size_t>(fc.curve[x])] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dpl
