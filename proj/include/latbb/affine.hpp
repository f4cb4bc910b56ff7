#pragma once

// Parametrised point sets: a box of integer parameters together with affine
// maps out of it. Piecewise-affine functions such as rho are evaluated
// symbolically by splitting parameters into residue classes until every
// floor division becomes affine on each piece.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latbb/integer.hpp"
#include "latbb/staircase.hpp"

namespace latbb {

/// c . s + constant over integer parameters s.
struct AffineForm {
  IntVec coeff;
  Int constant = 0;

  static AffineForm zero(std::size_t params) { return {IntVec(params, 0), 0}; }
  static AffineForm param(std::size_t params, std::size_t k) {
    AffineForm f = zero(params);
    f.coeff[k] = 1;
    return f;
  }

  Int operator()(const IntVec& s) const {
    Int v = constant;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      if (coeff[k] != 0) v = checked_add(v, checked_mul(coeff[k], s[k]));
    return v;
  }

  bool is_constant() const { return is_zero(coeff); }

  AffineForm& operator+=(const AffineForm& o) {
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] = checked_add(coeff[k], o.coeff[k]);
    constant = checked_add(constant, o.constant);
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] = checked_sub(coeff[k], o.coeff[k]);
    constant = checked_sub(constant, o.constant);
    return *this;
  }
  friend AffineForm operator*(Int c, AffineForm f) {
    for (auto& x : f.coeff) x = checked_mul(c, x);
    f.constant = checked_mul(c, f.constant);
    return f;
  }
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Affine map Z^r -> Z^k, one form per output coordinate.
struct AffineMap {
  std::vector<AffineForm> rows;

  static AffineMap identity(std::size_t n) {
    AffineMap m;
    for (std::size_t i = 0; i < n; ++i) m.rows.push_back(AffineForm::param(n, i));
    return m;
  }

  IntVec operator()(const IntVec& s) const {
    IntVec out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r(s));
    return out;
  }

  /// Matrix of coefficients (one row per output coordinate).
  std::vector<IntVec> matrix() const {
    std::vector<IntVec> m;
    for (const auto& r : rows) m.push_back(r.coeff);
    return m;
  }
  IntVec offset() const {
    IntVec o;
    for (const auto& r : rows) o.push_back(r.constant);
    return o;
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// A parameter box (finite lower bounds, upper bounds possibly kInf) with
/// several affine maps sharing those parameters.
///
/// Parameters whose range is a single value have zero coefficients in every
/// map; their value is folded into the constants.
struct Piece {
  HyperRect params;
  std::vector<AffineMap> maps;
};

namespace affine {

inline bool singleton(const HyperRect& box, std::size_t k) { return box.hi[k] != kInf && box.hi[k] - box.lo[k] == 1; }

inline void fold(AffineForm& f, const HyperRect& box) {
  for (std::size_t k = 0; k < f.coeff.size(); ++k)
    if (f.coeff[k] != 0 && singleton(box, k)) {
      f.constant = checked_add(f.constant, checked_mul(f.coeff[k], box.lo[k]));
      f.coeff[k] = 0;
    }
}

inline void fold(Piece& p) {
  for (auto& m : p.maps)
    for (auto& r : m.rows) fold(r, p.params);
}

/// Substitution t_k = period * s_k + offset, with s_k ranging over [lo, hi).
struct Subst {
  std::size_t k;
  Int period;
  Int offset;
  Int lo;
  Int hi;
};

inline void apply(AffineForm& f, const Subst& s) {
  f.constant = checked_add(f.constant, checked_mul(f.coeff[s.k], s.offset));
  f.coeff[s.k] = checked_mul(f.coeff[s.k], s.period);
}

inline Piece apply(Piece p, const Subst& s) {
  for (auto& m : p.maps)
    for (auto& r : m.rows) apply(r, s);
  p.params.lo[s.k] = s.lo;
  p.params.hi[s.k] = s.hi;
  fold(p);
  return p;
}

/// Ways of splitting parameter k so that its coefficient times `period`
/// becomes the new coefficient. Bounded parameters no wider than the period
/// are enumerated value by value in their original coordinates.
inline std::vector<Subst> split_options(const HyperRect& box, std::size_t k, Int period) {
  std::vector<Subst> out;
  const Int lo = box.lo[k], hi = box.hi[k];
  if (hi != kInf && hi - lo <= period) {
    for (Int v = lo; v < hi; ++v) out.push_back({k, 1, 0, v, v + 1});
    return out;
  }
  for (Int r = 0; r < period; ++r) {
    const Int slo = ceil_div(lo - r, period);
    const Int shi = hi == kInf ? kInf : floor_div(hi - 1 - r, period) + 1;
    if (shi != kInf && shi <= slo) continue;
    out.push_back({k, period, r, slo, shi});
  }
  return out;
}

/// Splits p until row `row` of map `mi` has every coefficient divisible by d.
inline std::vector<Piece> refine_divisible(Piece p, std::size_t mi, std::size_t row, Int d) {
  d = d < 0 ? -d : d;
  fold(p);
  const AffineForm& e = p.maps[mi].rows[row];
  for (std::size_t k = 0; k < e.coeff.size(); ++k) {
    if (e.coeff[k] % d == 0) continue;
    const Int period = d / gcd(e.coeff[k] < 0 ? -e.coeff[k] : e.coeff[k], d);
    std::vector<Piece> out;
    for (const auto& s : split_options(p.params, k, period)) {
      auto sub = refine_divisible(apply(p, s), mi, row, d);
      out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
    }
    return out;
  }
  return {std::move(p)};
}

/// floor(f / d) for a form whose coefficients are all divisible by d.
inline AffineForm floor_of(const AffineForm& f, Int d) {
  AffineForm q = f;
  for (auto& c : q.coeff) c /= d;
  q.constant = floor_div(f.constant, d);
  return q;
}

/// Pieces of p on which lo <= e(s) < hi. Either bound may be infinite.
/// Constraints on two or more unbounded parameters cannot be expressed as
/// boxes and raise UnsupportedError.
inline std::vector<Piece> restrict(const Piece& p, AffineForm e, Int lo, Int hi) {
  fold(e, p.params);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < e.coeff.size(); ++k)
    if (e.coeff[k] != 0) active.push_back(k);
  if (active.empty()) {
    const bool ok = (lo == kNegInf || e.constant >= lo) && (hi == kInf || e.constant < hi);
    return ok ? std::vector<Piece>{p} : std::vector<Piece>{};
  }
  if (active.size() == 1) {
    const std::size_t k = active.front();
    const Int a = e.coeff[k], c = e.constant;
    Int slo = p.params.lo[k], shi = p.params.hi[k];
    if (a > 0) {
      if (lo != kNegInf) slo = std::max(slo, ceil_div(checked_sub(lo, c), a));
      if (hi != kInf) shi = std::min(shi, floor_div(checked_sub(checked_sub(hi, 1), c), a) + 1);
    } else {
      const Int b = -a;
      if (lo != kNegInf) shi = std::min(shi, floor_div(checked_sub(c, lo), b) + 1);
      if (hi != kInf) slo = std::max(slo, ceil_div(checked_add(checked_sub(c, hi), 1), b));
    }
    if (shi != kInf && shi <= slo) return {};
    return {apply(p, Subst{k, 1, 0, slo, shi})};
  }
  std::optional<std::size_t> pick;
  for (std::size_t k : active)
    if (p.params.hi[k] != kInf &&
        (!pick || p.params.hi[k] - p.params.lo[k] < p.params.hi[*pick] - p.params.lo[*pick]))
      pick = k;
  if (!pick) throw UnsupportedError("constraint couples several unbounded parameters");
  std::vector<Piece> out;
  for (Int v = p.params.lo[*pick]; v < p.params.hi[*pick]; ++v) {
    auto sub = restrict(apply(p, Subst{*pick, 1, 0, v, v + 1}), e, lo, hi);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

/// Expands every bounded parameter into single values.
inline std::vector<Piece> enumerate_bounded(const Piece& p) {
  for (std::size_t k = 0; k < p.params.dim(); ++k) {
    if (p.params.hi[k] == kInf || singleton(p.params, k)) continue;
    std::vector<Piece> out;
    for (Int v = p.params.lo[k]; v < p.params.hi[k]; ++v) {
      auto sub = enumerate_bounded(apply(p, Subst{k, 1, 0, v, v + 1}));
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  return {p};
}

// Two adjacent pieces along parameter k merge when one affine map per row
// agrees with both.
inline std::optional<Piece> try_merge(const Piece& a, const Piece& b, std::size_t k) {
  if (a.params.hi[k] != b.params.lo[k] || a.maps.size() != b.maps.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.params.dim(); ++i)
    if (i != k && (a.params.lo[i] != b.params.lo[i] || a.params.hi[i] != b.params.hi[i])) return std::nullopt;
  const bool a_single = singleton(a.params, k), b_single = singleton(b.params, k);
  Piece m = a;
  m.params.hi[k] = b.params.hi[k];
  for (std::size_t mi = 0; mi < a.maps.size(); ++mi) {
    if (a.maps[mi].rows.size() != b.maps[mi].rows.size()) return std::nullopt;
    for (std::size_t r = 0; r < a.maps[mi].rows.size(); ++r) {
      const AffineForm& fa = a.maps[mi].rows[r];
      const AffineForm& fb = b.maps[mi].rows[r];
      for (std::size_t i = 0; i < fa.coeff.size(); ++i)
        if (i != k && fa.coeff[i] != fb.coeff[i]) return std::nullopt;
      Int col;
      if (!a_single)
        col = fa.coeff[k];
      else if (!b_single)
        col = fb.coeff[k];
      else
        col = checked_sub(fb.constant, fa.constant);
      if (!a_single && !b_single && fa.coeff[k] != fb.coeff[k]) return std::nullopt;
      const Int ca = a_single ? checked_sub(fa.constant, checked_mul(col, a.params.lo[k])) : fa.constant;
      const Int cb = b_single ? checked_sub(fb.constant, checked_mul(col, b.params.lo[k])) : fb.constant;
      if (ca != cb) return std::nullopt;
      AffineForm& fm = m.maps[mi].rows[r];
      fm.coeff[k] = col;
      fm.constant = ca;
    }
  }
  fold(m);
  return m;
}

/// Repeatedly joins neighbouring pieces that share their affine maps.
inline std::vector<Piece> merge_adjacent(std::vector<Piece> pieces) {
  if (pieces.empty()) return pieces;
  const std::size_t r = pieces.front().params.dim();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < r; ++k) {
      auto key = [k](const Piece& p) {
        IntVec v;
        for (std::size_t i = 0; i < p.params.dim(); ++i)
          if (i != k) {
            v.push_back(p.params.lo[i]);
            v.push_back(p.params.hi[i]);
          }
        v.push_back(p.params.lo[k]);
        return v;
      };
      std::sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) { return key(a) < key(b); });
      std::vector<Piece> out;
      for (auto& p : pieces) {
        if (!out.empty())
          if (auto m = try_merge(out.back(), p, k)) {
            out.back() = std::move(*m);
            changed = true;
            continue;
          }
        out.push_back(std::move(p));
      }
      pieces = std::move(out);
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.params < b.params; });
  return pieces;
}

/// Calls f on every parameter point of a bounded box.
template <class F>
void for_each_param(const HyperRect& box, F&& f) {
  IntVec s(box.lo);
  const std::size_t r = box.dim();
  if (box.empty()) return;
  for (;;) {
    f(s);
    std::size_t k = r;
    while (k-- > 0) {
      if (++s[k] < box.hi[k]) break;
      s[k] = box.lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) return;
  }
}

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigInt determinant(const BigMatrix& a) {
  const std::size_t k = a.size();
  if (k == 0) return 1;
  if (k == 1) return a[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < k; ++c) {
    BigMatrix minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

/// adj(A) with A * adj(A) = det(A) * I.
inline BigMatrix adjugate(const BigMatrix& a) {
  const std::size_t k = a.size();
  BigMatrix adj(k, std::vector<BigInt>(k));
  if (k == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      BigMatrix minor;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == i) continue;
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      const BigInt cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
      adj[j][i] = cof;
    }
  return adj;
}

/// Indices of k rows of `a` (rows x k) forming an invertible k x k block.
inline std::optional<std::vector<std::size_t>> independent_rows(const std::vector<IntVec>& a, std::size_t k) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pick;
  std::optional<std::vector<std::size_t>> found;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (found) return;
    if (pick.size() == k) {
      BigMatrix m;
      for (std::size_t r : pick) {
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < k; ++c) row.emplace_back(a[r][c]);
        m.push_back(std::move(row));
      }
      if (determinant(m) != 0) found = pick;
      return;
    }
    for (std::size_t r = start; r < rows; ++r) {
      pick.push_back(r);
      self(self, r + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace affine
}  // namespace latbb
