#pragma once

// Brute-force references for tests: maximal compatible ideals from the
// element-level graph on V, and equivalence by bounded coefficient search.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/minimals.hpp"
#include "latbb/staircase.hpp"

namespace latbb::oracle {

inline constexpr std::size_t kDefaultCap = 500;

/// The vertex cap, overridable through LATTICEBB_ORACLE_CAP.
inline std::size_t cap_from_env(std::size_t fallback = kDefaultCap) {
  if (const char* s = std::getenv("LATTICEBB_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(s));
    } catch (const std::exception&) {
      throw std::invalid_argument("LATTICEBB_ORACLE_CAP is not a number");
    }
  }
  return fallback;
}

/// Maximal compatible order ideals of a full-rank lattice, each as a sorted
/// point list, the list sorted.
///
/// Vertices are the points of V. Two points u, v are joined iff D(u) ∪ D(v)
/// contains no two distinct equivalent points, checked through labels.
inline std::vector<std::vector<NatVec>> direct_maximal_ideals(const Lattice& lat, std::size_t cap = cap_from_env()) {
  if (!lat.full_rank()) throw std::invalid_argument("oracle: lattice rank is smaller than n");
  const std::size_t n = lat.dim();
  const RectUnion v = compute_V(compute_A1(lat), n);
  const Cardinality card = v.size();
  if (card.infinite || static_cast<std::size_t>(card.value) > cap)
    throw std::length_error("oracle: V exceeds the vertex cap");
  const std::vector<NatVec> pts = v.points();
  const std::size_t k = pts.size();
  // Labels of each downset.
  std::vector<std::set<Int>> labels(k);
  for (std::size_t i = 0; i < k; ++i)
    RectUnion::single(downset(pts[i])).for_each_point([&](const IntVec& p) { labels[i].insert(lat.label(p)); });
  auto compatible = [&](std::size_t a, std::size_t b) {
    // |D(a) ∪ D(b)| = |D(a)| + |D(b)| - |D(min(a, b))| must equal the label count.
    std::size_t da = 1, db = 1, both = 1;
    for (std::size_t c = 0; c < n; ++c) {
      da *= static_cast<std::size_t>(pts[a][c] + 1);
      db *= static_cast<std::size_t>(pts[b][c] + 1);
      both *= static_cast<std::size_t>(std::min(pts[a][c], pts[b][c]) + 1);
    }
    std::set<Int> u = labels[a];
    u.insert(labels[b].begin(), labels[b].end());
    return u.size() == da + db - both;
  };
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) adj[a][b] = adj[b][a] = compatible(a, b);

  // Bron–Kerbosch with a Tomita pivot: branch only on P minus N(pivot).
  std::vector<std::vector<NatVec>> out;
  std::vector<std::size_t> r;
  auto bk = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty()) {
      if (x.empty()) {
        std::vector<NatVec> ideal;
        for (std::size_t i : r) ideal.push_back(pts[i]);
        std::sort(ideal.begin(), ideal.end());
        out.push_back(std::move(ideal));
      }
      return;
    }
    std::size_t pivot = p.front(), best = 0;
    for (const auto* set : {&p, &x})
      for (std::size_t u : *set) {
        const auto deg = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](std::size_t w) { return adj[u][w]; }));
        if (deg >= best) {
          best = deg;
          pivot = u;
        }
      }
    std::vector<std::size_t> branch;
    for (std::size_t u : p)
      if (!adj[pivot][u]) branch.push_back(u);
    for (std::size_t u : branch) {
      std::vector<std::size_t> np, nx;
      for (std::size_t w : p)
        if (adj[u][w]) np.push_back(w);
      for (std::size_t w : x)
        if (adj[u][w]) nx.push_back(w);
      r.push_back(u);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), u));
      x.push_back(u);
    }
  };
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  bk(bk, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff u - v is a combination of the generators with coefficients in
/// [-radius, radius].
inline bool naive_equivalent(const IntVec& u, const IntVec& v, const Lattice& lat, Int radius) {
  if (radius < 1) throw std::invalid_argument("naive_equivalent: radius must be positive");
  const auto& gens = lat.generators();
  const IntVec target = sub(u, v);
  IntVec acc(target.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) return acc == target;
    for (Int c = -radius; c <= radius; ++c) {
      const IntVec step = scale(c, gens[i]);
      acc = add(acc, step);
      const bool hit = self(self, i + 1);
      acc = sub(acc, step);
      if (hit) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace latbb::oracle
