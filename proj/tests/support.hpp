#pragma once

// Shared fixtures for the test binaries.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "latbb/latbb.hpp"

namespace latbb::test {

inline Lattice ex22() { return hnf({{2, 6}, {0, 10}}); }
inline Lattice ex312() { return hnf({{2, 1, 4}, {0, 3, -3}}); }
inline Lattice z3() { return hnf({{1, -2, -1}, {1, -1, 2}, {-2, -1, 1}}); }
inline Lattice r3() { return hnf({{1, 1, 2}, {0, 3, 1}, {0, 0, 4}}); }

// H1 ∪ H2: {(i,0,j) | j <= 14} ∪ {(i,0,j) | i <= 5, j >= 15}.
inline RectUnion ex312_h() {
  return RectUnion(3, {HyperRect{{0, 0, 0}, {kInf, 1, 15}}, HyperRect{{0, 0, 15}, {6, 1, kInf}}});
}

inline RectUnion rect_ideal(const std::vector<NatVec>& tops) { return union_of_downsets(tops, tops.front().size()); }

/// Random full-rank lattice in Z^n with entries in [-e, e] and 0 < |det| <= max_det.
inline Lattice random_lattice(std::mt19937& rng, std::size_t n, Int e, Int max_det) {
  std::uniform_int_distribution<Int> d(-e, e);
  for (;;) {
    std::vector<IntVec> g(n, IntVec(n));
    for (auto& row : g)
      for (auto& x : row) x = d(rng);
    const Lattice lat = hnf(g);
    if (lat.full_rank() && lat.determinant() <= max_det) return lat;
  }
}

inline std::vector<NatVec> sorted_points(const RectUnion& u) {
  auto p = u.points();
  std::sort(p.begin(), p.end());
  return p;
}

/// Points of a family with every coordinate of the border point below w.
inline std::vector<std::pair<NatVec, NatVec>> family_points(const BinomialFamily& f, Int w) {
  HyperRect box = f.params;
  for (std::size_t k = 0; k < box.dim(); ++k)
    if (box.hi[k] == kInf) box.hi[k] = box.lo[k] + w + 1;
  std::vector<std::pair<NatVec, NatVec>> out;
  affine::for_each_param(box, [&](const IntVec& s) {
    const NatVec b = f.border_map(s);
    if (std::all_of(b.begin(), b.end(), [&](Int x) { return x < w; })) out.emplace_back(b, f.rep_map(s));
  });
  return out;
}

/// Empty string when the families describe the border basis of the ideal on
/// the window [0, w)^n; otherwise a description of the first problem.
inline std::string check_border_families(const RectUnion& ideal, const Lattice& lat,
                                         const std::vector<BinomialFamily>& fams, Int w) {
  const std::size_t n = lat.dim();
  std::map<NatVec, int> hits;
  const IdealIndex index(ideal, lat);
  for (const auto& f : fams)
    for (const auto& [b, rep] : family_points(f, w)) {
      ++hits[b];
      if (!ideal.contains(rep)) return "rep " + to_string(rep) + " outside the ideal";
      if (!lat.contains(sub(b, rep))) return "delta of " + to_string(b) + " not in the lattice";
      if (index.find(b) != rep) return "rep of " + to_string(b) + " differs from the ideal's representative";
    }
  const RectUnion window = RectUnion::single(HyperRect{NatVec(n, 0), IntVec(n, w)});
  const RectUnion bd = border(ideal) & window;
  for (const auto& p : bd.points()) {
    const auto it = hits.find(p);
    if (it == hits.end()) return "border point " + to_string(p) + " not covered";
    if (it->second != 1) return "border point " + to_string(p) + " covered twice";
  }
  for (const auto& [p, c] : hits)
    if (!bd.contains(p)) return to_string(p) + " is not a border point";
  return {};
}

}  // namespace latbb::test
