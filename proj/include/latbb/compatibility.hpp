#pragma once

// Surjectivity of rho on an order ideal and the inverse map sigma into a
// max-compatible ideal, both pointwise and symbolically over parameter boxes.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latbb/affine.hpp"
#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/staircase.hpp"

namespace latbb {

/// The image of a parameter box under an affine map.
struct AffineFamily {
  HyperRect params;
  AffineMap point_map;

  IntVec operator()(const IntVec& s) const { return point_map(s); }
};

namespace detail {

// s in box with m(s) = y, assuming m is injective on the box.
inline std::optional<IntVec> solve_in_box(const AffineMap& m, const HyperRect& box, const IntVec& y) {
  const std::size_t r = box.dim();
  std::vector<std::size_t> u;
  for (std::size_t k = 0; k < r; ++k)
    for (const auto& row : m.rows)
      if (row.coeff[k] != 0) {
        u.push_back(k);
        break;
      }
  IntVec s = box.lo;
  std::vector<IntVec> a;
  IntVec rhs;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    IntVec row;
    for (std::size_t k : u) row.push_back(m.rows[i].coeff[k]);
    a.push_back(std::move(row));
    rhs.push_back(checked_sub(y[i], m.rows[i].constant));
  }
  if (!u.empty()) {
    const auto q = affine::independent_rows(a, u.size());
    if (!q) throw UnsupportedError("affine map is not injective on its parameters");
    affine::BigMatrix sub;
    for (std::size_t i : *q) {
      std::vector<BigInt> row;
      for (Int x : a[i]) row.emplace_back(x);
      sub.push_back(std::move(row));
    }
    const BigInt det = affine::determinant(sub);
    const auto adj = affine::adjugate(sub);
    for (std::size_t i = 0; i < u.size(); ++i) {
      BigInt acc = 0;
      for (std::size_t t = 0; t < u.size(); ++t) acc += adj[i][t] * rhs[(*q)[t]];
      if (acc % det != 0) return std::nullopt;
      s[u[i]] = to_int(acc / det);
    }
  }
  if (!box.contains(s)) return std::nullopt;
  if (m(s) != y) return std::nullopt;
  return s;
}

// Applies rho symbolically to map `mi` of every piece.
inline std::vector<Piece> rho_symbolic(std::vector<Piece> pieces, std::size_t mi, const Lattice& lat) {
  for (std::size_t j = 0; j < lat.rank(); ++j) {
    const std::size_t p = lat.pivot_columns()[j];
    const Int d = lat.pivot(j);
    const IntVec& h = lat.row(j);
    std::vector<Piece> next;
    for (auto& piece : pieces)
      for (auto& q : affine::refine_divisible(std::move(piece), mi, p, d)) {
        const AffineForm quot = affine::floor_of(q.maps[mi].rows[p], d);
        for (std::size_t i = 0; i < h.size(); ++i)
          if (h[i] != 0) q.maps[mi].rows[i] -= h[i] * quot;
        next.push_back(std::move(q));
      }
    pieces = std::move(next);
  }
  return pieces;
}

inline Piece rect_piece(const HyperRect& r, std::size_t copies) {
  Piece p{r, std::vector<AffineMap>(copies, AffineMap::identity(r.dim()))};
  affine::fold(p);
  return p;
}

}  // namespace detail

/// Decomposition of rho(R) into affine families over sub-boxes of R.
inline std::vector<AffineFamily> rho_image(const HyperRect& r, const Lattice& lat) {
  if (r.dim() != lat.dim()) throw std::invalid_argument("rho_image: dimension mismatch");
  if (r.empty()) return {};
  auto pieces = affine::merge_adjacent(detail::rho_symbolic({detail::rect_piece(r, 1)}, 0, lat));
  std::vector<AffineFamily> out;
  for (auto& p : pieces) out.push_back({std::move(p.params), std::move(p.maps.front())});
  return out;
}

/// rho restricted to an order ideal, tabulated by the values on the pivot
/// columns; inverts rho (the map sigma) when the ideal is max-compatible.
class IdealIndex {
 public:
  IdealIndex(const RectUnion& ideal, const Lattice& lat) : lat_(lat), n_(lat.dim()) {
    if (ideal.dim() != n_) throw std::invalid_argument("ideal and lattice have different dimensions");
    for (const auto& r : ideal.rects()) {
      for (auto& p : detail::rho_symbolic({detail::rect_piece(r, 2)}, 1, lat_))
        for (auto& q : affine::enumerate_bounded(p)) add_entry(std::move(q));
    }
  }

  const Lattice& lattice() const { return lat_; }

  /// The element of the ideal equivalent to z, if any.
  std::optional<NatVec> find(const IntVec& z) const {
    const IntVec y = lat_.rho(z);
    const auto it = by_pattern_.find(pattern(y));
    if (it == by_pattern_.end()) return std::nullopt;
    for (const auto& e : it->second)
      if (auto s = detail::solve_in_box(e.image, e.box, y)) return e.source(*s);
    return std::nullopt;
  }

  /// True iff rho maps the ideal onto B. Overlapping images mean the ideal
  /// was not compatible (std::invalid_argument). Needs corank <= 1.
  bool surjective() const {
    const std::size_t corank = n_ - lat_.rank();
    if (corank == 0) {
      std::size_t count = 0;
      for (const auto& [pi, entries] : by_pattern_) {
        if (entries.size() > 1) throw std::invalid_argument("order ideal is not compatible");
        count += entries.size();
      }
      return static_cast<Int>(count) == lat_.determinant();
    }
    if (corank > 1) throw UnsupportedError("surjectivity test needs rank >= n - 1");
    const std::size_t f = lat_.free_columns().front();
    Int patterns = lat_.determinant();
    if (static_cast<Int>(by_pattern_.size()) != patterns) {
      for (const auto& [pi, entries] : by_pattern_) covers_line(entries, f);  // still detect overlaps
      return false;
    }
    bool all = true;
    for (const auto& [pi, entries] : by_pattern_)
      if (!covers_line(entries, f)) all = false;
    return all;
  }

  /// Extends every piece of p (on which map `mi` takes values in B) by a map
  /// to the matching ideal element. Sub-boxes without a match are dropped.
  std::vector<Piece> represent(const Piece& p, std::size_t mi) const {
    const AffineMap& img = p.maps[mi];
    IntVec pi;
    for (std::size_t c : lat_.pivot_columns()) {
      if (!img.rows[c].is_constant()) throw std::logic_error("represent: image not reduced");
      pi.push_back(img.rows[c].constant);
    }
    const auto it = by_pattern_.find(pi);
    if (it == by_pattern_.end()) return {};
    std::vector<Piece> out;
    for (const auto& e : it->second) {
      auto sub = match(p, mi, e);
      out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
    }
    return out;
  }

 private:
  struct Entry {
    HyperRect box;       // only unbounded parameters are not fixed
    AffineMap image;     // rho on the box; pivot rows constant
    AffineMap source;    // the ideal element itself
    std::vector<std::size_t> open;  // unbounded parameters
  };

  IntVec pattern(const IntVec& y) const {
    IntVec pi;
    for (std::size_t c : lat_.pivot_columns()) pi.push_back(y[c]);
    return pi;
  }

  void add_entry(Piece q) {
    Entry e{q.params, q.maps[1], q.maps[0], {}};
    for (std::size_t k = 0; k < e.box.dim(); ++k)
      if (!affine::singleton(e.box, k)) e.open.push_back(k);
    if (!e.open.empty()) {
      std::vector<IntVec> a;
      for (const auto& row : e.image.rows) {
        IntVec r;
        for (std::size_t k : e.open) r.push_back(row.coeff[k]);
        a.push_back(std::move(r));
      }
      if (!affine::independent_rows(a, e.open.size()))
        throw std::invalid_argument("order ideal is not compatible");
    }
    IntVec pi;
    for (std::size_t c : lat_.pivot_columns()) pi.push_back(e.image.rows[c].constant);
    by_pattern_[pi].push_back(std::move(e));
  }

  // Corank one: do the free-coordinate images of the entries partition Z?
  static bool covers_line(const std::vector<Entry>& entries, std::size_t f) {
    // A point or a ray {c + a*u : u >= lo}.
    struct Piece1 {
      Int start;
      Int step;  // 0 for a point
    };
    std::vector<Piece1> parts;
    Int period = 1;
    for (const auto& e : entries) {
      const AffineForm& z = e.image.rows[f];
      if (e.open.empty()) {
        parts.push_back({z.constant, 0});
        continue;
      }
      const std::size_t k = e.open.front();
      const Int a = z.coeff[k];
      parts.push_back({checked_add(z.constant, checked_mul(a, e.box.lo[k])), a});
      period = lcm(period, a < 0 ? -a : a);
    }
    bool ok = true;
    // Within a residue class r mod period write x = r + period * t.
    for (Int r = 0; r < period; ++r) {
      std::vector<std::pair<Int, Int>> spans;  // [lo, hi) in t, with kNegInf / kInf
      for (const auto& p : parts) {
        if (mod_floor(p.start - r, p.step == 0 ? period : (p.step < 0 ? -p.step : p.step)) != 0) continue;
        if (p.step == 0) {
          const Int t = floor_div(p.start - r, period);
          spans.emplace_back(t, t + 1);
        } else if (p.step > 0) {
          spans.emplace_back(ceil_div(p.start - r, period), kInf);
        } else {
          spans.emplace_back(kNegInf, floor_div(p.start - r, period) + 1);
        }
      }
      std::sort(spans.begin(), spans.end());
      Int reach = kNegInf;
      bool first = true;
      for (const auto& [lo, hi] : spans) {
        if (!first && lo < reach) throw std::invalid_argument("order ideal is not compatible");
        if (first ? lo != kNegInf : lo != reach) ok = false;
        reach = hi;
        first = false;
      }
      if (first || reach != kInf) ok = false;
    }
    return ok;
  }

  // Pieces of p on which the image (map mi) is hit by entry e, with the
  // matching source point appended as a new map.
  std::vector<Piece> match(const Piece& p, std::size_t mi, const Entry& e) const {
    const auto freec = lat_.free_columns();
    const std::size_t r = p.params.dim();
    const std::size_t k = e.open.size();
    std::vector<Piece> pieces{p};
    const std::size_t umi = p.maps.size();  // temporary map holding u(s)
    if (k == 0) {
      for (auto& q : pieces) q.maps.push_back(AffineMap{});
    } else {
      std::vector<IntVec> a;
      for (std::size_t c : freec) {
        IntVec row;
        for (std::size_t t : e.open) row.push_back(e.image.rows[c].coeff[t]);
        a.push_back(std::move(row));
      }
      const auto sel = affine::independent_rows(a, k);
      affine::BigMatrix sub;
      for (std::size_t i : *sel) {
        std::vector<BigInt> row;
        for (Int x : a[i]) row.emplace_back(x);
        sub.push_back(std::move(row));
      }
      const Int det = to_int(affine::determinant(sub));
      const auto adj = affine::adjugate(sub);
      // det * u = adj * (z_sel(s) - c_sel)
      AffineMap g;
      for (std::size_t i = 0; i < k; ++i) {
        AffineForm acc = AffineForm::zero(r);
        for (std::size_t t = 0; t < k; ++t) {
          const std::size_t c = freec[(*sel)[t]];
          AffineForm rhs = p.maps[mi].rows[c];
          rhs.constant = checked_sub(rhs.constant, e.image.rows[c].constant);
          acc += to_int(adj[i][t]) * rhs;
        }
        g.rows.push_back(std::move(acc));
      }
      for (auto& q : pieces) q.maps.push_back(g);
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Piece> next;
        for (auto& q : pieces)
          for (auto& s : affine::refine_divisible(std::move(q), umi, i, det)) next.push_back(std::move(s));
        pieces = std::move(next);
      }
      std::vector<Piece> exact;
      for (auto& q : pieces) {
        bool ok = true;
        for (auto& row : q.maps[umi].rows) {
          if (row.constant % det != 0) {
            ok = false;
            break;
          }
          for (auto& c : row.coeff) c /= det;
          row.constant /= det;
        }
        if (ok) exact.push_back(std::move(q));
      }
      pieces = std::move(exact);
    }
    // u(s) as a form in the entry's full parameter vector.
    auto image_at_u = [&](const Piece& q, const AffineForm& row) {
      AffineForm out = AffineForm::zero(r);
      out.constant = row.constant;
      for (std::size_t i = 0; i < k; ++i) out += row.coeff[e.open[i]] * q.maps[umi].rows[i];
      return out;
    };
    for (std::size_t c : freec) {
      std::vector<Piece> next;
      for (const auto& q : pieces) {
        const AffineForm diff = image_at_u(q, e.image.rows[c]) - q.maps[mi].rows[c];
        for (auto& s : affine::restrict(q, diff, 0, 1)) next.push_back(std::move(s));
      }
      pieces = std::move(next);
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Piece> next;
      for (const auto& q : pieces)
        for (auto& s : affine::restrict(q, q.maps[umi].rows[i], e.box.lo[e.open[i]], e.box.hi[e.open[i]]))
          next.push_back(std::move(s));
      pieces = std::move(next);
    }
    for (auto& q : pieces) {
      AffineMap rep;
      for (const auto& row : e.source.rows) rep.rows.push_back(image_at_u(q, row));
      q.maps[umi] = std::move(rep);
      affine::fold(q);
    }
    return pieces;
  }

  Lattice lat_;
  std::size_t n_;
  std::map<IntVec, std::vector<Entry>> by_pattern_;
};

/// True iff rho maps the order ideal onto B.
///
/// Throws std::invalid_argument when the set is not a compatible order ideal
/// and UnsupportedError when the rank is below n - 1.
inline bool is_max_compatible(const RectUnion& ideal, const Lattice& lat) {
  if (ideal.dim() != lat.dim()) throw std::invalid_argument("ideal and lattice have different dimensions");
  if (!is_order_ideal(ideal)) throw std::invalid_argument("set is not an order ideal");
  if (lat.full_rank()) {
    const Cardinality c = ideal.size();
    if (c.infinite) throw std::invalid_argument("order ideal is not compatible");
    if (c.value > lat.determinant()) throw std::invalid_argument("order ideal is not compatible");
  }
  return IdealIndex(ideal, lat).surjective();
}

/// The unique b in the ideal with b - z in M.
///
/// Throws std::domain_error when there is none, i.e. the ideal is not
/// max-compatible.
inline NatVec representative_in(const IntVec& z, const IdealIndex& index) {
  if (auto b = index.find(z)) return *b;
  throw std::domain_error("no representative of " + to_string(z) + " in the order ideal");
}

inline NatVec representative_in(const IntVec& z, const RectUnion& ideal, const Lattice& lat) {
  return representative_in(z, IdealIndex(ideal, lat));
}

}  // namespace latbb
