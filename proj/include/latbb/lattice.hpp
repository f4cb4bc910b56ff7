#pragma once

// Integer lattices M in Z^n: Hermite normal form, membership, the canonical
// fundamental domain B and the reduction map rho onto it.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latbb/integer.hpp"

namespace latbb {

/// Positive/negative split of an integer vector: a = plus - minus.
struct SignDecomp {
  NatVec plus;
  NatVec minus;
  NatVec abs;
};

inline SignDecomp decompose(const IntVec& a) {
  SignDecomp d{NatVec(a.size(), 0), NatVec(a.size(), 0), NatVec(a.size(), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0)
      d.plus[i] = a[i];
    else
      d.minus[i] = -a[i];
    d.abs[i] = d.plus[i] + d.minus[i];
  }
  return d;
}

/// A sublattice of Z^n stored through its row-style Hermite normal form.
///
/// Row j of the HNF has its first nonzero entry d_j > 0 in column
/// pivot_columns()[j]; the entries of earlier rows in that column lie in
/// [0, d_j). Pivot columns are strictly increasing but need not be 0..m-1.
class Lattice {
 public:
  Lattice() = default;

  std::size_t dim() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rank() == n_; }

  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& hnf() const { return rows_; }
  const IntVec& row(std::size_t j) const { return rows_[j]; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  Int pivot(std::size_t j) const { return rows_[j][pivot_cols_[j]]; }
  IntVec pivots() const {
    IntVec d;
    for (std::size_t j = 0; j < rank(); ++j) d.push_back(pivot(j));
    return d;
  }

  /// Columns that carry no pivot; coordinates of B that range over all of Z.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0, j = 0; c < n_; ++c) {
      if (j < pivot_cols_.size() && pivot_cols_[j] == c)
        ++j;
      else
        out.push_back(c);
    }
    return out;
  }

  /// d_1 * ... * d_m, the index of M in Z^n when the rank is full.
  Int determinant() const {
    Int p = 1;
    for (std::size_t j = 0; j < rank(); ++j) p = checked_mul(p, pivot(j));
    return p;
  }

  /// True iff v lies in M (back-substitution against the HNF rows).
  bool contains(const IntVec& v) const {
    check_dim(v);
    IntVec r = v;
    for (std::size_t j = 0; j < rank(); ++j) {
      const Int x = r[pivot_cols_[j]];
      const Int d = pivot(j);
      if (x % d != 0) return false;
      const Int q = x / d;
      if (q != 0) r = sub(r, scale(q, rows_[j]));
    }
    return is_zero(r);
  }

  /// The representative of b in B obtained by successive divisions.
  IntVec rho(const IntVec& b) const {
    check_dim(b);
    IntVec r = b;
    for (std::size_t j = 0; j < rank(); ++j) {
      const Int q = floor_div(r[pivot_cols_[j]], pivot(j));
      if (q != 0) r = sub(r, scale(q, rows_[j]));
    }
    return r;
  }

  /// True iff b lies in the fundamental domain B.
  bool in_domain(const IntVec& b) const {
    check_dim(b);
    for (std::size_t j = 0; j < rank(); ++j) {
      const Int x = b[pivot_cols_[j]];
      if (x < 0 || x >= pivot(j)) return false;
    }
    return true;
  }

  /// Mixed-radix label of the class of b; requires full rank.
  Int label(const IntVec& b) const {
    if (!full_rank()) throw std::domain_error("label: lattice rank is smaller than n");
    const IntVec r = rho(b);
    Int lab = 0;
    for (std::size_t j = 0; j < n_; ++j) lab = checked_add(checked_mul(lab, pivot(j)), r[j]);
    return lab;
  }

  /// Inverse of label(): the element of B carrying the given label.
  IntVec unlabel(Int lab) const {
    if (!full_rank()) throw std::domain_error("unlabel: lattice rank is smaller than n");
    IntVec r(n_, 0);
    for (std::size_t j = n_; j-- > 0;) {
      r[j] = mod_floor(lab, pivot(j));
      lab = floor_div(lab, pivot(j));
    }
    return r;
  }

  friend Lattice hnf(const std::vector<IntVec>& generators);

 private:
  void check_dim(const IntVec& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match lattice dimension");
  }

  std::size_t n_ = 0;
  std::vector<IntVec> generators_;
  std::vector<IntVec> rows_;
  std::vector<std::size_t> pivot_cols_;
};

/// Row-style Hermite normal form of the lattice spanned by `generators`.
///
/// Elimination runs in arbitrary precision; the reduced rows are converted
/// back to 64-bit integers (OverflowError if they do not fit).
inline Lattice hnf(const std::vector<IntVec>& generators) {
  if (generators.empty()) throw std::invalid_argument("hnf: no generators");
  const std::size_t n = generators.front().size();
  if (n == 0) throw std::invalid_argument("hnf: zero-dimensional generators");
  for (const auto& g : generators)
    if (g.size() != n) throw std::invalid_argument("hnf: generators have different lengths");

  std::vector<std::vector<BigInt>> a;
  for (const auto& g : generators) {
    std::vector<BigInt> r;
    for (Int x : g) r.emplace_back(x);
    a.push_back(std::move(r));
  }
  auto axpy = [n](std::vector<BigInt>& dst, const BigInt& q, const std::vector<BigInt>& src) {
    for (std::size_t c = 0; c < n; ++c) dst[c] -= q * src[c];
  };
  auto floor_big = [](const BigInt& x, const BigInt& y) {
    BigInt q = x / y;
    if (q * y != x && ((x < 0) != (y < 0))) --q;
    return q;
  };

  Lattice L;
  L.n_ = n;
  L.generators_ = generators;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < a.size(); ++col) {
    // Euclid on the column below `top` until a single nonzero entry remains.
    for (;;) {
      std::size_t best = a.size();
      for (std::size_t r = top; r < a.size(); ++r)
        if (a[r][col] != 0 && (best == a.size() || abs(a[r][col]) < abs(a[best][col]))) best = r;
      if (best == a.size()) break;
      std::swap(a[top], a[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < a.size(); ++r) {
        if (a[r][col] == 0) continue;
        axpy(a[r], floor_big(a[r][col], a[top][col]), a[top]);
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[top][col] == 0) continue;
    if (a[top][col] < 0)
      for (auto& x : a[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) axpy(a[r], floor_big(a[r][col], a[top][col]), a[top]);
    L.pivot_cols_.push_back(col);
    ++top;
  }
  if (top == 0) throw std::invalid_argument("hnf: all generators are zero");
  for (std::size_t r = 0; r < top; ++r) {
    IntVec row;
    for (const auto& x : a[r]) row.push_back(to_int(x));
    L.rows_.push_back(std::move(row));
  }
  return L;
}

}  // namespace latbb
