#pragma once

// Closed form for rank-2 lattices in Z^2: every maximal compatible order
// ideal is a box minus a cone, one per consecutive pair of B2.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latbb/compatibility.hpp"
#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/minimals.hpp"
#include "latbb/staircase.hpp"

namespace latbb {

/// Both Hermite forms of a rank-2 lattice in Z^2: rows (a1, a2), (0, a3)
/// and rows (b1, b2), (b3, 0).
struct TwoHNF {
  Int a1, a2, a3;
  Int b1, b2, b3;
};

inline void require_plane(const Lattice& lat) {
  if (lat.dim() != 2 || lat.rank() != 2) throw std::invalid_argument("expected a rank-2 lattice in Z^2");
}

inline TwoHNF second_hnf(const Lattice& lat) {
  require_plane(lat);
  TwoHNF h{};
  h.a1 = lat.row(0)[0];
  h.a2 = lat.row(0)[1];
  h.a3 = lat.row(1)[1];
  h.b2 = gcd(h.a2, h.a3);
  h.b3 = h.a1 * (h.a3 / h.b2);
  Int lambda = 0;
  while (mod_floor(checked_mul(lambda, h.a2) - h.b2, h.a3) != 0) ++lambda;
  h.b1 = checked_mul(h.a1, lambda);
  return h;
}

/// Minimal elements of {(p, q) in N^2 : (p, -q) in M, (p, q) != 0}, sorted by p.
inline Antichain compute_B2(const Lattice& lat) {
  require_plane(lat);
  auto b = hilbert_basis_orthant(lat, {1, -1});
  std::sort(b.begin(), b.end());
  return b;
}

/// Pairs P, Q of B2 with no third element of B2 below lcm(P, Q); P before Q.
inline std::vector<std::pair<NatVec, NatVec>> consecutive_pairs(const Antichain& b2) {
  std::vector<std::pair<NatVec, NatVec>> out;
  for (std::size_t i = 0; i < b2.size(); ++i)
    for (std::size_t j = i + 1; j < b2.size(); ++j) {
      const NatVec l = lcm(b2[i], b2[j]);
      const bool alone = std::none_of(b2.begin(), b2.end(), [&](const NatVec& c) {
        return c != b2[i] && c != b2[j] && leq(c, l);
      });
      if (alone) out.emplace_back(b2[i], b2[j]);
    }
  return out;
}

/// Corners of the complement of a plane ideal and their representatives.
/// A lies on the first axis, B on the second, C (if any) off the axes and
/// in M, so its representative is the origin.
struct CornerData {
  std::vector<NatVec> corners;  // A, B and possibly C
  std::vector<NatVec> reps;     // A', B' and possibly the origin
};

/// x^lead - x^tail.
struct Binomial {
  NatVec lead;
  NatVec tail;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct PlaneIdeal {
  NatVec p, q;  // the consecutive pair
  NatVec r;     // the lattice vector cut away
  RectUnion ideal;
  CornerData corners;
  std::vector<Binomial> groebner;  // reduced basis, one binomial per corner
};

/// O(P, Q) = [0, lcm(P, Q)) minus the cone over R.
inline RectUnion plane_ideal(const NatVec& p, const NatVec& q, NatVec* r_out = nullptr) {
  const NatVec l = lcm(p, q);
  const NatVec r = p[0] >= q[0] ? NatVec{p[0] - q[0], q[1] - p[1]} : NatVec{q[0] - p[0], p[1] - q[1]};
  if (r_out) *r_out = r;
  return RectUnion::single(HyperRect{{0, 0}, l}) - RectUnion::single(upset(r));
}

inline std::vector<PlaneIdeal> ideals_2d(const Lattice& lat) {
  require_plane(lat);
  std::vector<PlaneIdeal> out;
  for (const auto& [p, q] : consecutive_pairs(compute_B2(lat))) {
    PlaneIdeal pi;
    pi.p = p;
    pi.q = q;
    pi.ideal = plane_ideal(p, q, &pi.r);
    const IdealIndex index(pi.ideal, lat);
    auto cs = corners(pi.ideal);
    // A on the first axis, B on the second, then C.
    std::sort(cs.begin(), cs.end(), [](const NatVec& u, const NatVec& v) {
      auto rank = [](const NatVec& w) { return w[1] == 0 ? 0 : w[0] == 0 ? 1 : 2; };
      return rank(u) < rank(v);
    });
    for (const auto& c : cs) {
      const NatVec rep = representative_in(c, index);
      pi.corners.corners.push_back(c);
      pi.corners.reps.push_back(rep);
      pi.groebner.push_back({c, rep});
    }
    out.push_back(std::move(pi));
  }
  return out;
}

}  // namespace latbb
