#pragma once

// Partition of V into signature classes, the finite quotient graph on those
// classes, its maximal cliques, and the maximal compatible order ideals they
// describe.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "latbb/lattice.hpp"
#include "latbb/minimals.hpp"
#include "latbb/staircase.hpp"

namespace latbb {

/// bits[i] == true iff Y[i] ⪯ u.
using Signature = std::vector<bool>;

inline Signature signature(const NatVec& u, const std::vector<NatVec>& y) {
  Signature s(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) s[i] = leq(y[i], u);
  return s;
}

struct Region {
  NatVec representative;  // lexicographically least member
  Signature signature;
  RectUnion points;
};

/// Splits V into the classes of points sharing a signature against Y.
/// Regions are returned sorted by representative.
inline std::vector<Region> compute_regions(const RectUnion& v, const std::vector<XPair>& x1) {
  const std::size_t n = v.dim();
  const auto y = signature_points(x1, n);
  std::vector<std::pair<RectUnion, Signature>> parts;
  if (!v.empty()) parts.emplace_back(v, Signature{});
  for (const auto& c : y) {
    const RectUnion cone = RectUnion::single(upset(c));
    std::vector<std::pair<RectUnion, Signature>> next;
    for (auto& [set, sig] : parts) {
      RectUnion in = set & cone;
      RectUnion out = set - cone;
      if (!in.empty()) {
        auto s = sig;
        s.push_back(true);
        next.emplace_back(std::move(in), std::move(s));
      }
      if (!out.empty()) {
        auto s = sig;
        s.push_back(false);
        next.emplace_back(std::move(out), std::move(s));
      }
    }
    parts = std::move(next);
  }
  std::vector<Region> regions;
  for (auto& [set, sig] : parts) regions.push_back(Region{set.lex_least(), std::move(sig), std::move(set)});
  std::sort(regions.begin(), regions.end(),
            [](const Region& a, const Region& b) { return a.representative < b.representative; });
  return regions;
}

/// Regions are joined unless some pair of X1 splits across their representatives.
inline bool adjacent(const Region& ru, const Region& rv, const std::vector<XPair>& x1) {
  for (const auto& a : x1)
    if (leq(a.a0, ru.representative) && leq(a.a1, rv.representative)) return false;
  return true;
}

struct QuotientGraph {
  std::vector<Region> regions;
  std::vector<std::vector<bool>> adjacency;

  std::size_t size() const { return regions.size(); }

  std::vector<std::pair<std::size_t, std::size_t>> non_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (!adjacency[i][j]) out.emplace_back(i, j);
    return out;
  }
};

inline QuotientGraph build_quotient_graph(std::vector<Region> regions, const std::vector<XPair>& x1) {
  QuotientGraph g{std::move(regions), {}};
  const std::size_t k = g.regions.size();
  g.adjacency.assign(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool e = adjacent(g.regions[i], g.regions[j], x1);
      g.adjacency[i][j] = g.adjacency[j][i] = e;
    }
  return g;
}

using Clique = std::vector<std::size_t>;

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically.
inline std::vector<Clique> maximal_cliques(const std::vector<std::vector<bool>>& adj) {
  std::vector<Clique> out;
  Clique r;
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> bk =
      [&](std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          Clique c = r;
          std::sort(c.begin(), c.end());
          out.push_back(std::move(c));
          return;
        }
        // Pivot: the vertex of P ∪ X with most neighbours in P.
        std::size_t pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto& set : {p, x})
          for (std::size_t u : set) {
            std::size_t cnt = 0;
            for (std::size_t v : p)
              if (v != u && adj[u][v]) ++cnt;
            if (cnt >= best) {
              best = cnt;
              pivot = u;
            }
          }
        std::vector<std::size_t> candidates;
        for (std::size_t v : p)
          if (v == pivot || !adj[pivot][v]) candidates.push_back(v);
        for (std::size_t v : candidates) {
          std::vector<std::size_t> np, nx;
          for (std::size_t w : p)
            if (w != v && adj[v][w]) np.push_back(w);
          for (std::size_t w : x)
            if (w != v && adj[v][w]) nx.push_back(w);
          r.push_back(v);
          bk(std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(adj.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!all.empty()) bk(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

/// Union of the regions of each clique.
inline std::vector<RectUnion> order_ideals_from_cliques(const QuotientGraph& g, const std::vector<Clique>& cliques) {
  std::vector<RectUnion> out;
  for (const auto& c : cliques) {
    std::vector<HyperRect> rs;
    for (std::size_t i : c)
      for (const auto& r : g.regions[i].points.rects()) rs.push_back(r);
    out.emplace_back(g.regions.empty() ? 0 : g.regions.front().points.dim(), rs);
  }
  return out;
}

/// Everything computed on the way from a lattice to its maximal compatible
/// order ideals.
struct IdealSearch {
  Lattice lattice;
  Antichain a1;
  std::vector<XPair> x1;
  RectUnion v;
  QuotientGraph graph;
  std::vector<Clique> cliques;
  std::vector<RectUnion> ideals;
};

inline IdealSearch find_maximal_ideals(const Lattice& lat) {
  IdealSearch s;
  s.lattice = lat;
  s.a1 = compute_A1(lat);
  s.x1 = compute_X1(lat);
  s.v = compute_V(s.a1, lat.dim());
  s.graph = build_quotient_graph(compute_regions(s.v, s.x1), s.x1);
  s.cliques = maximal_cliques(s.graph.adjacency);
  s.ideals = order_ideals_from_cliques(s.graph, s.cliques);
  return s;
}

}  // namespace latbb
