#pragma once

// The componentwise order on N^n, antichains, and exact set algebra on
// finite unions of half-open integer boxes whose upper bounds may be
// infinite. Order ideals, the set V, regions and borders all live here.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latbb/integer.hpp"

namespace latbb {

inline bool leq(const NatVec& u, const NatVec& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

inline NatVec lcm(const NatVec& u, const NatVec& v) {
  NatVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = std::max(u[i], v[i]);
  return r;
}

/// Finite list of pairwise incomparable points, sorted lexicographically.
using Antichain = std::vector<NatVec>;

inline bool is_antichain(const Antichain& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && leq(a[i], a[j])) return false;
  return true;
}

/// The minimal points of `points` under the componentwise order.
inline Antichain minimal_elements(std::vector<NatVec> points) {
  std::sort(points.begin(), points.end(),
            [](const NatVec& a, const NatVec& b) {
              const Int da = total_degree(a), db = total_degree(b);
              return da != db ? da < db : a < b;
            });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Antichain kept;
  for (const auto& p : points) {
    // A dominating point has strictly smaller degree, so it is already kept.
    bool dominated = false;
    for (const auto& k : kept)
      if (leq(k, p)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Half-open box lo <= x < hi. hi may be kInf; lo is kNegInf only for
/// subsets of Z^n produced by the reduction map.
struct HyperRect {
  IntVec lo;
  IntVec hi;

  std::size_t dim() const { return lo.size(); }

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] >= hi[i]) return true;
    return false;
  }

  bool bounded() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (hi[i] == kInf || lo[i] == kNegInf) return false;
    return true;
  }

  bool contains(const IntVec& p) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (p[i] < lo[i] || p[i] >= hi[i]) return false;
    return true;
  }

  friend bool operator==(const HyperRect&, const HyperRect&) = default;
  friend auto operator<=>(const HyperRect& a, const HyperRect& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    return a.hi <=> b.hi;
  }
};

/// D(u) = [0, u + 1).
inline HyperRect downset(const NatVec& u) {
  HyperRect r{NatVec(u.size(), 0), NatVec(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) r.hi[i] = u[i] + 1;
  return r;
}

/// C(u) = [u, infinity).
inline HyperRect upset(const NatVec& u) { return HyperRect{u, IntVec(u.size(), kInf)}; }

/// Box [lo, hi) built from a finite corner pair.
inline HyperRect box(IntVec lo, IntVec hi) { return HyperRect{std::move(lo), std::move(hi)}; }

/// Number of points, or infinite.
struct Cardinality {
  bool infinite = false;
  Int value = 0;

  static Cardinality inf() { return {true, 0}; }
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

inline Cardinality cardinality(const HyperRect& r) {
  if (r.empty()) return {};
  Int c = 1;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (r.hi[i] == kInf || r.lo[i] == kNegInf) return Cardinality::inf();
    c = checked_mul(c, r.hi[i] - r.lo[i]);
  }
  return {false, c};
}

enum class SetOp { Union, Intersect, Subtract };

namespace detail {

using Interval = std::pair<Int, Int>;
using Slab = std::vector<Interval>;  // intervals for dimensions d..n-1

inline bool apply_op(SetOp op, bool in_a, bool in_b) {
  switch (op) {
    case SetOp::Union: return in_a || in_b;
    case SetOp::Intersect: return in_a && in_b;
    case SetOp::Subtract: return in_a && !in_b;
  }
  return false;
}

// Slices along dimension d at every breakpoint, recurses on each slab and
// merges neighbouring slabs whose cross-sections coincide. The output is a
// function of the point set only, which makes it canonical.
inline std::vector<Slab> combine_rec(const std::vector<const HyperRect*>& a,
                                     const std::vector<const HyperRect*>& b, SetOp op,
                                     std::size_t d, std::size_t n) {
  const bool nothing = op == SetOp::Union ? (a.empty() && b.empty())
                       : op == SetOp::Intersect ? (a.empty() || b.empty())
                                                : a.empty();
  if (nothing) return {};
  if (d == n) return apply_op(op, !a.empty(), !b.empty()) ? std::vector<Slab>{Slab{}} : std::vector<Slab>{};

  std::vector<Int> cuts;
  for (const auto* r : a) {
    cuts.push_back(r->lo[d]);
    cuts.push_back(r->hi[d]);
  }
  for (const auto* r : b) {
    cuts.push_back(r->lo[d]);
    cuts.push_back(r->hi[d]);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Slab> out;
  std::vector<Slab> run;
  Int run_lo = 0, run_hi = 0;
  bool have_run = false;
  auto flush = [&]() {
    if (!have_run) return;
    for (auto& s : run) {
      Slab full;
      full.reserve(s.size() + 1);
      full.emplace_back(run_lo, run_hi);
      full.insert(full.end(), s.begin(), s.end());
      out.push_back(std::move(full));
    }
    have_run = false;
  };

  std::vector<const HyperRect*> sa, sb;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Int x0 = cuts[k], x1 = cuts[k + 1];
    sa.clear();
    sb.clear();
    for (const auto* r : a)
      if (r->lo[d] <= x0 && r->hi[d] >= x1) sa.push_back(r);
    for (const auto* r : b)
      if (r->lo[d] <= x0 && r->hi[d] >= x1) sb.push_back(r);
    std::vector<Slab> sub = combine_rec(sa, sb, op, d + 1, n);
    if (sub.empty()) {
      flush();
      continue;
    }
    if (have_run && run_hi == x0 && sub == run) {
      run_hi = x1;
    } else {
      flush();
      run = std::move(sub);
      run_lo = x0;
      run_hi = x1;
      have_run = true;
    }
  }
  flush();
  return out;
}

}  // namespace detail

/// Finite union of boxes kept in canonical form: pairwise disjoint, produced
/// by slicing along coordinate 0 and recursively canonicalising each slab.
/// Two unions hold the same points iff their rect lists are equal.
class RectUnion {
 public:
  RectUnion() = default;
  explicit RectUnion(std::size_t n) : n_(n) {}
  RectUnion(std::size_t n, const std::vector<HyperRect>& rects) : n_(n) {
    std::vector<const HyperRect*> a;
    for (const auto& r : rects) {
      if (r.dim() != n) throw std::invalid_argument("RectUnion: rect dimension mismatch");
      if (!r.empty()) a.push_back(&r);
    }
    assign(detail::combine_rec(a, {}, SetOp::Union, 0, n_));
  }

  static RectUnion universe(std::size_t n) { return RectUnion(n, {HyperRect{NatVec(n, 0), IntVec(n, kInf)}}); }
  static RectUnion single(const HyperRect& r) { return RectUnion(r.dim(), {r}); }

  std::size_t dim() const { return n_; }
  const std::vector<HyperRect>& rects() const { return rects_; }
  bool empty() const { return rects_.empty(); }

  friend RectUnion combine(const RectUnion& a, const RectUnion& b, SetOp op) {
    if (a.n_ != b.n_) throw std::invalid_argument("RectUnion: dimension mismatch");
    std::vector<const HyperRect*> pa, pb;
    for (const auto& r : a.rects_) pa.push_back(&r);
    for (const auto& r : b.rects_) pb.push_back(&r);
    RectUnion out(a.n_);
    out.assign(detail::combine_rec(pa, pb, op, 0, a.n_));
    return out;
  }

  RectUnion operator|(const RectUnion& o) const { return combine(*this, o, SetOp::Union); }
  RectUnion operator&(const RectUnion& o) const { return combine(*this, o, SetOp::Intersect); }
  RectUnion operator-(const RectUnion& o) const { return combine(*this, o, SetOp::Subtract); }

  bool contains(const IntVec& p) const {
    for (const auto& r : rects_)
      if (r.contains(p)) return true;
    return false;
  }

  bool subset_of(const RectUnion& o) const { return (*this - o).empty(); }

  Cardinality size() const {
    Cardinality c;
    for (const auto& r : rects_) {
      Cardinality rc = cardinality(r);
      if (rc.infinite) return Cardinality::inf();
      c.value = checked_add(c.value, rc.value);
    }
    return c;
  }

  bool bounded() const {
    for (const auto& r : rects_)
      if (!r.bounded()) return false;
    return true;
  }

  /// Lexicographically least point; the union must be non-empty and bounded below.
  IntVec lex_least() const {
    if (rects_.empty()) throw std::logic_error("lex_least of empty set");
    IntVec best = rects_.front().lo;
    for (const auto& r : rects_) best = std::min(best, r.lo);
    return best;
  }

  /// Translates every point by delta * e_i and clips to N^n.
  RectUnion shifted(std::size_t i, Int delta) const {
    std::vector<HyperRect> out;
    for (auto r : rects_) {
      if (r.lo[i] != kNegInf) r.lo[i] = std::max<Int>(0, checked_add(r.lo[i], delta));
      if (r.hi[i] != kInf) r.hi[i] = checked_add(r.hi[i], delta);
      if (!r.empty()) out.push_back(r);
    }
    return RectUnion(n_, out);
  }

  /// Calls f on every point; throws if the union is unbounded.
  void for_each_point(const std::function<void(const IntVec&)>& f) const {
    if (!bounded()) throw std::domain_error("for_each_point on an unbounded set");
    IntVec p(n_);
    for (const auto& r : rects_) {
      std::function<void(std::size_t)> rec = [&](std::size_t d) {
        if (d == n_) {
          f(p);
          return;
        }
        for (Int x = r.lo[d]; x < r.hi[d]; ++x) {
          p[d] = x;
          rec(d + 1);
        }
      };
      rec(0);
    }
  }

  std::vector<IntVec> points() const {
    std::vector<IntVec> out;
    for_each_point([&](const IntVec& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const RectUnion&, const RectUnion&) = default;

 private:
  void assign(const std::vector<detail::Slab>& slabs) {
    rects_.clear();
    for (const auto& s : slabs) {
      HyperRect r{IntVec(n_), IntVec(n_)};
      for (std::size_t i = 0; i < n_; ++i) {
        r.lo[i] = s[i].first;
        r.hi[i] = s[i].second;
      }
      rects_.push_back(std::move(r));
    }
  }

  std::size_t n_ = 0;
  std::vector<HyperRect> rects_;
};

/// Union of the cones C(a) for a in `generators`.
inline RectUnion union_of_cones(const Antichain& generators, std::size_t n) {
  std::vector<HyperRect> rs;
  for (const auto& a : generators) rs.push_back(upset(a));
  return RectUnion(n, rs);
}

/// Union of the boxes D(u) for u in `tops`.
inline RectUnion union_of_downsets(const std::vector<NatVec>& tops, std::size_t n) {
  std::vector<HyperRect> rs;
  for (const auto& u : tops) rs.push_back(downset(u));
  return RectUnion(n, rs);
}

/// N^n minus the union of the cones C(a), a in A.
inline RectUnion complement_of_cones(const Antichain& a, std::size_t n) {
  return RectUnion::universe(n) - union_of_cones(a, n);
}

/// True iff S is closed under u -> u - e_i.
inline bool is_order_ideal(const RectUnion& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!s.shifted(i, -1).subset_of(s)) return false;
  return true;
}

/// Points outside O that become members after subtracting one unit vector.
inline RectUnion border(const RectUnion& o) {
  RectUnion up(o.dim());
  for (std::size_t i = 0; i < o.dim(); ++i) up = up | o.shifted(i, 1);
  return up - o;
}

/// Minimal generators of the up-set N^n \ O, i.e. the corners of O.
inline Antichain corners(const RectUnion& o) {
  const RectUnion rest = RectUnion::universe(o.dim()) - o;
  std::vector<NatVec> lows;
  for (const auto& r : rest.rects()) lows.push_back(r.lo);
  return minimal_elements(lows);
}

/// Maximal points of a bounded order ideal (the u with O = union of D(u)).
inline Antichain maximal_points(const RectUnion& o) {
  std::vector<NatVec> tops;
  for (const auto& r : o.rects()) {
    NatVec t(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) {
      if (r.hi[i] == kInf) throw std::domain_error("maximal_points of an unbounded set");
      t[i] = r.hi[i] - 1;
    }
    tops.push_back(t);
  }
  std::vector<NatVec> out;
  for (const auto& t : tops) {
    bool below = false;
    for (const auto& s : tops)
      if (s != t && leq(t, s)) below = true;
    if (!below) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string to_string(const HyperRect& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (i) s += " x ";
    s += (r.lo[i] == kNegInf ? std::string("-inf") : std::to_string(r.lo[i])) + ".." +
         (r.hi[i] == kInf ? std::string("inf") : std::to_string(r.hi[i]));
  }
  return s + ")";
}

inline std::string to_string(const RectUnion& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.rects().size(); ++i) s += (i ? ", " : "") + to_string(u.rects()[i]);
  return s + "}";
}

}  // namespace latbb
