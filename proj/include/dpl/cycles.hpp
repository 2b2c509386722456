// SPDX-License-Identifier: MIT
// Slotted side cycles, block decompositions and the node partition derived
// from a family of disk-type and crosscap-type side cycles.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpl/core_words.hpp"
#include "dpl/error.hpp"

namespace dpl {

using Cycles = std::map<int, std::vector<SignedIndex>>;

struct CycleStructure {
  std::vector<int> labels;                                // sorted index set
  std::vector<std::vector<Symbol>> S;                     // slotted disk cycles
  std::vector<std::vector<Symbol>> T;                     // slotted crosscap cycles
  std::vector<std::vector<std::vector<Symbol>>> blocks;   // blocks of S, per curve
  std::vector<std::vector<int>> block_node;               // node id of each block
  std::vector<std::vector<std::pair<int, int>>> nodes;    // node -> (curve, block)

  std::size_t n() const { return labels.size(); }

  int position(int label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) throw Error(ErrorCode::UnknownIndex, std::to_string(label));
    return static_cast<int>(it - labels.begin());
  }

  // Block index of `node` on curve position `c`, or -1 when the curve misses it.
  int block_at(int node, int c) const {
    for (const auto& [cc, b] : nodes[static_cast<std::size_t>(node)])
      if (cc == c) return b;
    return -1;
  }

  bool simple() const {
    for (const auto& bl : blocks)
      for (const auto& b : bl)
        if (b.size() != 1) return false;
    return true;
  }
};

namespace detail {

inline std::vector<Symbol> slot_word(int carrier, const std::vector<SignedIndex>& w,
                                     const std::vector<int>& labels, bool disk) {
  const std::size_t L = w.size();
  std::vector<Symbol> res(L);
  std::map<int, std::vector<std::size_t>> occ;
  for (std::size_t p = 0; p < L; ++p) {
    const int b = base_of(w[p]);
    if (w[p] == 0 || b == carrier || !std::binary_search(labels.begin(), labels.end(), b))
      throw Error(ErrorCode::UnknownIndex,
                  "letter " + std::to_string(w[p]) + " in cycle of " + std::to_string(carrier));
    occ[b].push_back(p);
  }
  const int pattern_disk[4] = {-1, -1, 1, 1};
  for (int j : labels) {
    if (j == carrier) continue;
    auto it = occ.find(j);
    const std::size_t cnt = it == occ.end() ? 0 : it->second.size();
    if (cnt != 4)
      throw Error(ErrorCode::WrongMultiplicity, "index " + std::to_string(j) + " occurs " +
                                                    std::to_string(cnt) + " times in cycle of " +
                                                    std::to_string(carrier));
    const auto& ps = it->second;
    int found = -1;
    for (int r = 0; r < 4; ++r) {
      bool ok = true;
      for (int t = 0; t < 4 && ok; ++t) {
        const int want = disk ? pattern_disk[t] : -pattern_disk[t];
        ok = sign_of(w[ps[static_cast<std::size_t>((r + t) % 4)]]) == want;
      }
      if (ok) found = r;
    }
    if (found < 0)
      throw Error(ErrorCode::BadSignPattern,
                  "index " + std::to_string(j) + " in cycle of " + std::to_string(carrier));
    for (int t = 0; t < 4; ++t)
      res[ps[static_cast<std::size_t>((found + t) % 4)]] = Symbol{carrier, j, t + 1};
  }
  return res;
}

// Splits S into maximal runs that appear reversed and contiguous in T and
// checks that T is the blockwise reversal of S with the same block order.
inline std::optional<std::vector<std::vector<Symbol>>> detect_blocks(const std::vector<Symbol>& s,
                                                                     const std::vector<Symbol>& t) {
  const std::size_t L = s.size();
  if (L == 0 || t.size() != L) return std::nullopt;
  std::map<Symbol, std::size_t> post;
  for (std::size_t p = 0; p < L; ++p) post[t[p]] = p;
  std::vector<std::size_t> f(L);
  for (std::size_t p = 0; p < L; ++p) {
    auto it = post.find(s[p]);
    if (it == post.end()) return std::nullopt;
    f[p] = it->second;
  }
  std::vector<bool> same(L);
  for (std::size_t p = 0; p < L; ++p) same[p] = (f[(p + 1) % L] + 1) % L == f[p];
  std::vector<std::size_t> starts;
  for (std::size_t p = 0; p < L; ++p)
    if (!same[(p + L - 1) % L]) starts.push_back(p);
  if (starts.empty()) return std::nullopt;
  std::vector<std::vector<Symbol>> bl;
  for (std::size_t a : starts) {
    std::vector<Symbol> b{s[a]};
    std::size_t p = a;
    while (same[p]) {
      p = (p + 1) % L;
      b.push_back(s[p]);
    }
    bl.push_back(std::move(b));
  }
  std::vector<Symbol> tt;
  for (const auto& b : bl) tt.insert(tt.end(), b.rbegin(), b.rend());
  if (!rotation_equal(tt, t)) return std::nullopt;
  for (const auto& b : bl) {
    std::vector<int> cos;
    for (const auto& x : b) cos.push_back(x.co);
    std::sort(cos.begin(), cos.end());
    if (std::adjacent_find(cos.begin(), cos.end()) != cos.end()) return std::nullopt;
  }
  return bl;
}

}  // namespace detail

inline CycleStructure build_structure(std::vector<int> labels, const Cycles& disk, const Cycles& crosscap) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() < 2) throw Error(ErrorCode::TooFewIndices, "an arrangement needs at least two curves");
  for (int l : labels)
    if (l <= 0) throw Error(ErrorCode::Domain, "indices must be positive");
  CycleStructure cs;
  cs.labels = labels;
  const std::size_t n = labels.size();
  cs.S.resize(n);
  cs.T.resize(n);
  cs.blocks.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const int i = labels[c];
    auto d = disk.find(i);
    auto m = crosscap.find(i);
    if (d == disk.end()) throw Error(ErrorCode::WrongMultiplicity, "missing disk cycle for " + std::to_string(i));
    if (m == crosscap.end())
      throw Error(ErrorCode::WrongMultiplicity, "missing crosscap cycle for " + std::to_string(i));
    cs.S[c] = detail::slot_word(i, d->second, labels, true);
    cs.T[c] = detail::slot_word(i, m->second, labels, false);
    auto bl = detail::detect_blocks(cs.S[c], cs.T[c]);
    if (!bl) throw Error(ErrorCode::NoBlockDecomposition, "curve " + std::to_string(i));
    cs.blocks[c] = std::move(*bl);
  }
  for (const auto& kv : disk)
    if (!std::binary_search(labels.begin(), labels.end(), kv.first))
      throw Error(ErrorCode::UnknownIndex, "cycle for unknown index " + std::to_string(kv.first));
  for (const auto& kv : crosscap)
    if (!std::binary_search(labels.begin(), labels.end(), kv.first))
      throw Error(ErrorCode::UnknownIndex, "cycle for unknown index " + std::to_string(kv.first));

  // Locate every symbol in its block.
  std::map<Symbol, std::pair<int, int>> where;
  std::vector<int> offset(n + 1, 0);
  for (std::size_t c = 0; c < n; ++c) {
    offset[c + 1] = offset[c] + static_cast<int>(cs.blocks[c].size());
    for (std::size_t b = 0; b < cs.blocks[c].size(); ++b)
      for (const auto& x : cs.blocks[c][b]) where[x] = {static_cast<int>(c), static_cast<int>(b)};
  }
  std::vector<int> parent(static_cast<std::size_t>(offset[n]));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [x, cb] : where) {
    const auto& ob = where.at(partner(x));
    const int a = find(offset[static_cast<std::size_t>(cb.first)] + cb.second);
    const int b = find(offset[static_cast<std::size_t>(ob.first)] + ob.second);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  cs.block_node.resize(n);
  std::map<int, int> root_id;
  for (std::size_t c = 0; c < n; ++c) {
    cs.block_node[c].resize(cs.blocks[c].size());
    for (std::size_t b = 0; b < cs.blocks[c].size(); ++b) {
      const int r = find(offset[c] + static_cast<int>(b));
      auto [it, fresh] = root_id.emplace(r, static_cast<int>(cs.nodes.size()));
      if (fresh) cs.nodes.emplace_back();
      cs.block_node[c][b] = it->second;
      cs.nodes[static_cast<std::size_t>(it->second)].emplace_back(static_cast<int>(c), static_cast<int>(b));
    }
  }

  // Every node must meet each of its curves in exactly one block naming the
  // other curves of the node.
  for (std::size_t v = 0; v < cs.nodes.size(); ++v) {
    std::vector<int> curves;
    for (const auto& cb : cs.nodes[v]) curves.push_back(cs.labels[static_cast<std::size_t>(cb.first)]);
    std::sort(curves.begin(), curves.end());
    if (std::adjacent_find(curves.begin(), curves.end()) != curves.end())
      throw Error(ErrorCode::NoBlockDecomposition, "a node meets a curve twice");
    for (const auto& [c, b] : cs.nodes[v]) {
      std::vector<int> cos;
      for (const auto& x : cs.blocks[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) cos.push_back(x.co);
      cos.push_back(cs.labels[static_cast<std::size_t>(c)]);
      std::sort(cos.begin(), cos.end());
      if (cos != curves) throw Error(ErrorCode::NoBlockDecomposition, "inconsistent node");
    }
  }

  // Rolling a block to any of its entries must give a block of the crossed curve.
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& b : cs.blocks[c]) {
      if (b.size() < 2) continue;
      std::vector<SignedPair> pr;
      for (const auto& x : b) pr.push_back(pair_of(x));
      for (std::size_t p = 1; p <= b.size(); ++p) {
        const auto seq = roll(pr, p);
        std::vector<Symbol> syms;
        for (const auto& q : seq) syms.push_back(symbol_of(q));
        auto it = where.find(syms.front());
        bool ok = it != where.end();
        if (ok) {
          const auto& target = cs.blocks[static_cast<std::size_t>(it->second.first)][static_cast<std::size_t>(it->second.second)];
          ok = target == syms;
        }
        if (!ok)
          throw Error(ErrorCode::RollMismatch, "block on curve " + std::to_string(labels[c]) + " at entry " +
                                                   std::to_string(p));
      }
    }
  }
  return cs;
}

}  // namespace dpl
