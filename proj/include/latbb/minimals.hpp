#pragma once

// Minimal absolute values of lattice vectors (the set A1), Hilbert bases of
// the orthant monoids eps*M ∩ N^n, and the minimal mixed-sign pairs X1.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/staircase.hpp"

namespace latbb {

/// Orthant identifier: entries are +1 or -1.
using SignVector = std::vector<int>;

/// (c+, c-) for a lattice vector c with both signs present.
struct XPair {
  NatVec a0;
  NatVec a1;

  XPair swapped() const { return {a1, a0}; }
  friend bool operator==(const XPair&, const XPair&) = default;
  friend auto operator<=>(const XPair&, const XPair&) = default;
};

/// a ⊑ b: a is dominated by b in one of the two orientations.
inline bool pair_leq(const XPair& a, const XPair& b) {
  return (leq(a.a0, b.a0) && leq(a.a1, b.a1)) || (leq(a.a0, b.a1) && leq(a.a1, b.a0));
}

inline IntVec apply_signs(const SignVector& eps, const IntVec& x) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = eps[i] * x[i];
  return r;
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

// Basis of {c in Q^m : sum_i c_i * rows[i][j] = 0 for j in cols}.
inline std::vector<std::vector<Rational>> left_kernel(const std::vector<IntVec>& rows,
                                                      const std::vector<std::size_t>& cols) {
  const std::size_t m = rows.size();
  // Transposed system: one equation per column in `cols`, unknowns c_1..c_m.
  std::vector<std::vector<Rational>> a;
  for (std::size_t j : cols) {
    std::vector<Rational> eq(m);
    for (std::size_t i = 0; i < m; ++i) eq[i] = rows[i][j];
    a.push_back(std::move(eq));
  }
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(m, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == r || a[k][c] == 0) continue;
      const Rational f = a[k][c];
      for (std::size_t t = 0; t < m; ++t) a[k][t] -= f * a[r][t];
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_of_row.size(); ++k) v[pivot_of_row[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Primitive integer multiple of a rational vector.
inline IntVec primitive(const std::vector<Rational>& v) {
  BigInt den = 1;
  for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<BigInt> w;
  BigInt g = 0;
  for (const auto& x : v) {
    w.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
    g = boost::multiprecision::gcd(g, w.back());
  }
  IntVec out;
  for (auto& x : w) out.push_back(to_int(g == 0 ? x : x / g));
  return out;
}

}  // namespace detail

/// Primitive lattice generators of the extreme rays of span(eps*M) ∩ R^n_{>=0}.
inline std::vector<NatVec> orthant_extreme_rays(const Lattice& lat, const SignVector& eps) {
  const std::size_t n = lat.dim(), m = lat.rank();
  std::vector<IntVec> rows;
  for (std::size_t j = 0; j < m; ++j) rows.push_back(apply_signs(eps, lat.row(j)));
  std::vector<NatVec> rays;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) zero_cols.push_back(j);
    const auto ker = detail::left_kernel(rows, zero_cols);
    if (ker.size() != 1) continue;
    const IntVec c = detail::primitive(ker.front());
    IntVec y(n, 0);
    for (std::size_t i = 0; i < m; ++i) y = add(y, scale(c[i], rows[i]));
    const bool nonneg = std::all_of(y.begin(), y.end(), [](Int x) { return x >= 0; });
    const bool nonpos = std::all_of(y.begin(), y.end(), [](Int x) { return x <= 0; });
    if (is_zero(y) || (!nonneg && !nonpos)) continue;
    rays.push_back(nonneg ? y : negate(y));
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

/// Calls f on every point of eps*M lying in the box [0, bound].
inline void for_each_orthant_point(const Lattice& lat, const SignVector& eps, const NatVec& bound,
                                   const std::function<void(const NatVec&)>& f) {
  const std::size_t n = lat.dim(), m = lat.rank();
  const auto& piv = lat.pivot_columns();
  auto in_range = [&](const IntVec& y, std::size_t from, std::size_t to) {
    for (std::size_t c = from; c < to; ++c) {
      const Int v = eps[c] * y[c];
      if (v < 0 || v > bound[c]) return false;
    }
    return true;
  };
  // y accumulates sum_i coef_i * row_i in the original signs.
  std::function<void(std::size_t, const IntVec&)> rec = [&](std::size_t j, const IntVec& y) {
    if (j == m) {
      if (!in_range(y, 0, n)) return;
      f(apply_signs(eps, y));
      return;
    }
    const std::size_t p = piv[j];
    const Int d = lat.pivot(j);
    // Need 0 <= eps_p * (y_p + c d) <= bound_p.
    Int lo, hi;
    if (eps[p] > 0) {
      lo = ceil_div(-y[p], d);
      hi = floor_div(bound[p] - y[p], d);
    } else {
      lo = ceil_div(-bound[p] - y[p], d);
      hi = floor_div(-y[p], d);
    }
    const std::size_t next = j + 1 < m ? piv[j + 1] : n;
    for (Int c = lo; c <= hi; ++c) {
      IntVec z = add(y, scale(c, lat.row(j)));
      // Columns before the next pivot are final once row j is fixed.
      if (!in_range(z, p, next)) continue;
      rec(j + 1, z);
    }
  };
  IntVec start(n, 0);
  if (m == 0 || !in_range(start, 0, piv.front())) return;
  rec(0, start);
}

/// Minimal nonzero points of the monoid eps*M ∩ N^n (its Hilbert basis).
///
/// Every Hilbert basis element is a combination with coefficients in [0, 1]
/// of the extreme-ray generators, so it lies below their sum; the lattice
/// points of that box are enumerated degree by degree.
inline Antichain hilbert_basis_orthant(const Lattice& lat, const SignVector& eps) {
  if (eps.size() != lat.dim()) throw std::invalid_argument("sign vector length mismatch");
  const auto rays = orthant_extreme_rays(lat, eps);
  if (rays.empty()) return {};
  NatVec bound(lat.dim(), 0);
  for (const auto& r : rays) bound = add(bound, r);
  std::vector<NatVec> pts;
  for_each_orthant_point(lat, eps, bound, [&](const NatVec& y) {
    if (!is_zero(y)) pts.push_back(y);
  });
  return minimal_elements(std::move(pts));
}

/// Sign vectors with eps[0] = +1; the mirror -eps has the same Hilbert basis.
inline std::vector<SignVector> half_orthants(std::size_t n) {
  std::vector<SignVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    SignVector e(n, 1);
    for (std::size_t j = 1; j < n; ++j)
      if (mask >> (j - 1) & 1) e[j] = -1;
    out.push_back(e);
  }
  return out;
}

/// Minimal elements of {abs(a) : a in M, a != 0}.
inline Antichain compute_A1(const Lattice& lat) {
  std::vector<NatVec> cand;
  for (const auto& eps : half_orthants(lat.dim())) {
    auto b = hilbert_basis_orthant(lat, eps);
    cand.insert(cand.end(), b.begin(), b.end());
  }
  return minimal_elements(std::move(cand));
}

/// The pairs of `pairs` not strictly dominated under ⊑; sorted, deduplicated.
inline std::vector<XPair> minimal_pairs(std::vector<XPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<XPair> out;
  for (const auto& a : pairs) {
    bool dominated = false;
    for (const auto& b : pairs)
      if (pair_leq(b, a) && !pair_leq(a, b)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(a);
  }
  return out;
}

/// The ⊑-minimal pairs (c+, c-) over lattice vectors c with both signs.
///
/// Inside one orthant a minimal mixed vector is either a mixed Hilbert basis
/// element or the sum of a Hilbert element supported on the positive
/// coordinates and one supported on the negative coordinates.
inline std::vector<XPair> compute_X1(const Lattice& lat) {
  const std::size_t n = lat.dim();
  std::vector<XPair> cand;
  for (const auto& eps : half_orthants(n)) {
    if (std::all_of(eps.begin(), eps.end(), [](int e) { return e > 0; })) continue;
    const auto basis = hilbert_basis_orthant(lat, eps);
    std::vector<NatVec> mixed, pos_only, neg_only;
    for (const auto& y : basis) {
      bool has_pos = false, has_neg = false;
      for (std::size_t i = 0; i < n; ++i)
        if (y[i] != 0) (eps[i] > 0 ? has_pos : has_neg) = true;
      if (has_pos && has_neg)
        mixed.push_back(y);
      else if (has_pos)
        pos_only.push_back(y);
      else
        neg_only.push_back(y);
    }
    for (const auto& p : pos_only)
      for (const auto& q : neg_only) mixed.push_back(add(p, q));
    for (const auto& y : minimal_elements(mixed)) {
      const SignDecomp s = decompose(apply_signs(eps, y));
      cand.push_back({s.plus, s.minus});
      cand.push_back({s.minus, s.plus});
    }
  }
  return minimal_pairs(std::move(cand));
}

/// Y = {a0 : a in X1} ∪ {0}, sorted lexicographically.
inline std::vector<NatVec> signature_points(const std::vector<XPair>& x1, std::size_t n) {
  std::vector<NatVec> y{NatVec(n, 0)};
  for (const auto& a : x1) y.push_back(a.a0);
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  return y;
}

/// The set V: N^n minus the cones over A1.
inline RectUnion compute_V(const Antichain& a1, std::size_t n) { return complement_of_cones(a1, n); }

}  // namespace latbb
