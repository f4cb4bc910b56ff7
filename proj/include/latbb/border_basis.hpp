#pragma once

// Border bases of max-compatible order ideals as parametrised binomial
// families, and the test whether such an ideal is the normal set of some
// term order (strictly positive weight vector).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latbb/affine.hpp"
#include "latbb/compatibility.hpp"
#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/staircase.hpp"

namespace latbb {

/// Binomials x^border(s) - x^rep(s) for s in params.
struct BinomialFamily {
  HyperRect params;
  AffineMap border_map;
  AffineMap rep_map;

  /// border(s) - rep(s), an affine map with values in M.
  AffineMap delta() const {
    AffineMap d = border_map;
    for (std::size_t i = 0; i < d.rows.size(); ++i) d.rows[i] -= rep_map.rows[i];
    return d;
  }

  bool finite() const { return params.bounded(); }
};

namespace detail {

// A border family written in border coordinates t: t_k runs over the
// progression lo_k, lo_k + stride_k, ... below hi_k, and rep is affine in t.
struct Strided {
  HyperRect box;
  IntVec stride;
  AffineMap rep;
};

inline bool single(const Strided& f, std::size_t k) { return f.box.hi[k] != kInf && f.box.hi[k] - f.box.lo[k] == 1; }

// Piece with maps {border, rep}; border row k is P * s_k + r.
inline std::optional<Strided> to_strided(const Piece& p) {
  const std::size_t r = p.params.dim();
  Strided f{HyperRect{IntVec(r), IntVec(r)}, IntVec(r, 1), p.maps[1]};
  for (std::size_t k = 0; k < r; ++k) {
    const AffineForm& b = p.maps[0].rows[k];
    const Int step = b.coeff[k], off = b.constant;
    if (step == 0) {
      f.box.lo[k] = off;
      f.box.hi[k] = off + 1;
      continue;
    }
    for (const auto& row : f.rep.rows)
      if (row.coeff[k] % step != 0) return std::nullopt;
    for (auto& row : f.rep.rows) {
      const Int g = row.coeff[k] / step;
      row.coeff[k] = g;
      row.constant = checked_sub(row.constant, checked_mul(g, off));
    }
    f.stride[k] = step;
    f.box.lo[k] = checked_add(checked_mul(step, p.params.lo[k]), off);
    f.box.hi[k] = p.params.hi[k] == kInf ? kInf : checked_add(checked_mul(step, p.params.hi[k] - 1), off) + 1;
  }
  return f;
}

inline Piece from_strided(const Strided& f) {
  const std::size_t r = f.box.dim();
  Piece p{HyperRect{IntVec(r), IntVec(r)}, {AffineMap::identity(r), f.rep}};
  for (std::size_t k = 0; k < r; ++k) {
    const Int step = f.stride[k];
    const Int off = mod_floor(f.box.lo[k], step);
    p.params.lo[k] = (f.box.lo[k] - off) / step;
    p.params.hi[k] = f.box.hi[k] == kInf ? kInf : (f.box.hi[k] - 1 - off) / step + 1;
    for (auto& m : p.maps)
      for (auto& row : m.rows) {
        row.constant = checked_add(row.constant, checked_mul(row.coeff[k], off));
        row.coeff[k] = checked_mul(row.coeff[k], step);
      }
  }
  affine::fold(p);
  return p;
}

// Number of progression terms of coordinate k below `cut`.
inline Int terms_below(const Strided& f, std::size_t k, Int cut) {
  const Int top = f.box.hi[k] == kInf ? cut : std::min(cut, f.box.hi[k]);
  if (top <= f.box.lo[k]) return 0;
  return (top - 1 - f.box.lo[k]) / f.stride[k] + 1;
}

// Joins families sharing one affine rep map whose progressions in
// coordinate k fill an interval. Returns true if anything merged.
inline bool merge_progressions(std::vector<Strided>& fams, std::size_t k) {
  std::map<IntVec, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const Strided& f = fams[i];
    IntVec key;
    for (std::size_t c = 0; c < f.box.dim(); ++c)
      if (c != k) key.insert(key.end(), {f.box.lo[c], f.box.hi[c], f.stride[c]});
    for (const auto& row : f.rep.rows)
      for (std::size_t c = 0; c < row.coeff.size(); ++c)
        if (c != k) key.push_back(row.coeff[c]);
    groups[key].push_back(i);
  }
  std::vector<bool> gone(fams.size(), false);
  std::vector<Strided> added;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    // Candidate maps (column k, constants) from the non-degenerate members.
    std::vector<std::pair<IntVec, IntVec>> maps;
    auto map_of = [&](const Strided& f) {
      IntVec col, con;
      for (const auto& row : f.rep.rows) {
        col.push_back(row.coeff[k]);
        con.push_back(row.constant);
      }
      return std::make_pair(col, con);
    };
    for (std::size_t i : members)
      if (!single(fams[i], k)) {
        auto m = map_of(fams[i]);
        if (std::find(maps.begin(), maps.end(), m) == maps.end()) maps.push_back(std::move(m));
      }
    std::vector<std::vector<std::size_t>> parts(maps.size());
    for (std::size_t i : members) {
      const Strided& f = fams[i];
      for (std::size_t m = 0; m < maps.size(); ++m) {
        bool fits = true;
        if (single(f, k)) {
          for (std::size_t r = 0; r < f.rep.rows.size() && fits; ++r)
            fits = f.rep.rows[r].constant ==
                   checked_add(maps[m].second[r], checked_mul(maps[m].first[r], f.box.lo[k]));
        } else {
          fits = map_of(f) == maps[m];
        }
        if (fits) {
          parts[m].push_back(i);
          break;
        }
      }
    }
    for (std::size_t m = 0; m < maps.size(); ++m) {
      const auto& part = parts[m];
      if (part.size() < 2) continue;
      Int lo = kInf, cut = kNegInf, period = 1;
      bool infinite = false;
      for (std::size_t i : part) {
        const Strided& f = fams[i];
        lo = std::min(lo, f.box.lo[k]);
        cut = std::max(cut, f.box.lo[k] + 1);
        if (f.box.hi[k] == kInf) {
          infinite = true;
          period = lcm(period, f.stride[k]);
        } else {
          cut = std::max(cut, f.box.hi[k]);
        }
      }
      if (infinite) {
        Int density = 0;
        for (std::size_t i : part)
          if (fams[i].box.hi[k] == kInf) density += period / fams[i].stride[k];
        if (density != period) continue;
        cut += period;
      }
      Int count = 0;
      for (std::size_t i : part) count += terms_below(fams[i], k, cut);
      if (count != cut - lo) continue;
      Strided merged = fams[part.front()];
      merged.box.lo[k] = lo;
      merged.box.hi[k] = infinite ? kInf : cut;
      merged.stride[k] = 1;
      for (std::size_t r = 0; r < merged.rep.rows.size(); ++r) {
        merged.rep.rows[r].coeff[k] = maps[m].first[r];
        merged.rep.rows[r].constant = maps[m].second[r];
      }
      if (single(merged, k))
        for (auto& row : merged.rep.rows) {
          row.constant = checked_add(row.constant, checked_mul(row.coeff[k], lo));
          row.coeff[k] = 0;
        }
      for (std::size_t i : part) gone[i] = true;
      added.push_back(std::move(merged));
    }
  }
  if (added.empty()) return false;
  std::vector<Strided> out;
  for (std::size_t i = 0; i < fams.size(); ++i)
    if (!gone[i]) out.push_back(std::move(fams[i]));
  out.insert(out.end(), std::make_move_iterator(added.begin()), std::make_move_iterator(added.end()));
  fams = std::move(out);
  return true;
}

// Rewrites pieces {border, rep} in border coordinates where possible and
// merges residue classes and neighbours sharing their affine maps.
inline std::vector<Piece> canonical_border_pieces(std::vector<Piece> pieces) {
  for (;;) {
    const std::size_t before = pieces.size();
    std::vector<Strided> fams;
    std::vector<Piece> rest;
    for (auto& p : pieces) {
      if (auto f = to_strided(p))
        fams.push_back(std::move(*f));
      else
        rest.push_back(std::move(p));
    }
    const std::size_t r = fams.empty() ? 0 : fams.front().box.dim();
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k < r; ++k) changed = merge_progressions(fams, k) || changed;
    }
    for (const auto& f : fams) rest.push_back(from_strided(f));
    pieces = affine::merge_adjacent(std::move(rest));
    if (pieces.size() == before) return pieces;
  }
}

}  // namespace detail

/// The border families of a max-compatible order ideal. Their border images
/// partition the border of the ideal.
inline std::vector<BinomialFamily> border_families(const RectUnion& ideal, const Lattice& lat) {
  if (ideal.dim() != lat.dim()) throw std::invalid_argument("ideal and lattice have different dimensions");
  if (!is_order_ideal(ideal)) throw std::invalid_argument("set is not an order ideal");
  if (lat.rank() + 1 >= lat.dim() && !is_max_compatible(ideal, lat))
    throw std::invalid_argument("order ideal is not max-compatible");
  const IdealIndex index(ideal, lat);
  const RectUnion bd = border(ideal);
  std::vector<Piece> pieces;
  for (const auto& r : bd.rects())
    for (auto& p : detail::rho_symbolic({detail::rect_piece(r, 2)}, 1, lat))
      for (auto& q : index.represent(p, 1)) {
        q.maps.erase(q.maps.begin() + 1);  // drop the image in B
        pieces.push_back(std::move(q));
      }
  pieces = detail::canonical_border_pieces(std::move(pieces));
  std::vector<BinomialFamily> out;
  for (auto& p : pieces) out.push_back({std::move(p.params), std::move(p.maps[0]), std::move(p.maps[1])});
  return out;
}

/// Outcome of the term-order test.
struct RealizabilityResult {
  /// One weighted difference in a certificate of infeasibility. Vertex terms
  /// carry the border pair; recession terms (unbounded directions) do not.
  struct Term {
    IntVec border;
    IntVec rep;
    IntVec delta;
    Int multiplier;
  };

  bool realizable = false;
  IntVec witness;                // strictly positive, w . delta > 0 on every pair
  std::vector<Term> certificate;  // sum multiplier * delta <= 0 componentwise
};

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

struct Inequality {  // a . w >= b
  std::vector<Rational> a;
  Rational b;
  std::map<std::size_t, Rational> mult;  // as a combination of the input rows
};

inline void normalize(Inequality& q) {
  for (const auto& x : q.a)
    if (x != 0) {
      const Rational s = abs(x);
      for (auto& y : q.a) y /= s;
      q.b /= s;
      for (auto& [k, m] : q.mult) m /= s;
      return;
    }
}

struct FmResult {
  std::optional<std::vector<Rational>> point;
  std::map<std::size_t, Rational> certificate;  // used when point is empty
};

// Exact Fourier–Motzkin on {a_i . w >= b_i}. Returns a feasible point or
// nonnegative multipliers with sum mult_i a_i = 0 and sum mult_i b_i > 0.
inline FmResult fourier_motzkin(const std::vector<IntVec>& a, const IntVec& b) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  std::vector<Inequality> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Inequality q;
    for (Int x : a[i]) q.a.emplace_back(x);
    q.b = b[i];
    q.mult[i] = 1;
    normalize(q);
    rows.push_back(std::move(q));
  }
  auto contradiction = [](const std::vector<Inequality>& rs) -> const Inequality* {
    for (const auto& q : rs)
      if (std::all_of(q.a.begin(), q.a.end(), [](const Rational& x) { return x == 0; }) && q.b > 0) return &q;
    return nullptr;
  };
  std::vector<std::vector<Inequality>> stages;
  for (std::size_t v = 0; v < n; ++v) {
    if (const auto* bad = contradiction(rows)) return {std::nullopt, bad->mult};
    stages.push_back(rows);
    std::vector<Inequality> next;
    std::vector<const Inequality*> pos, neg;
    for (const auto& q : rows) {
      if (q.a[v] > 0)
        pos.push_back(&q);
      else if (q.a[v] < 0)
        neg.push_back(&q);
      else
        next.push_back(q);
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        const Rational sp = -q->a[v], sq = p->a[v];
        Inequality r;
        r.a.resize(n);
        for (std::size_t k = 0; k < n; ++k) r.a[k] = sp * p->a[k] + sq * q->a[k];
        r.b = sp * p->b + sq * q->b;
        r.mult = p->mult;
        for (auto& [k, m] : r.mult) m *= sp;
        for (const auto& [k, m] : q->mult) r.mult[k] += sq * m;
        // Chernikov: after eliminating v + 1 variables a non-redundant row
        // combines at most v + 2 input rows.
        if (r.mult.size() > v + 2) continue;
        normalize(r);
        next.push_back(std::move(r));
      }
    // Keep the strongest right-hand side per direction.
    std::map<std::vector<Rational>, std::size_t> best;
    std::vector<Inequality> kept;
    for (auto& q : next) {
      auto it = best.find(q.a);
      if (it == best.end()) {
        best.emplace(q.a, kept.size());
        kept.push_back(std::move(q));
      } else if (q.b > kept[it->second].b) {
        kept[it->second] = std::move(q);
      }
    }
    rows = std::move(kept);
  }
  if (const auto* bad = contradiction(rows)) return {std::nullopt, bad->mult};
  // Back substitution, last eliminated variable first.
  std::vector<Rational> w(n, 0);
  for (std::size_t v = n; v-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& q : stages[v]) {
      if (q.a[v] == 0) continue;
      Rational rest = q.b;
      for (std::size_t k = v + 1; k < n; ++k) rest -= q.a[k] * w[k];
      const Rational bound = rest / q.a[v];
      if (q.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    auto ceil_q = [](const Rational& x) {
      BigInt num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
      BigInt q = num / den;
      if (q * den != num && num > 0) ++q;
      return Rational(q);
    };
    if (lo) {
      const Rational c = ceil_q(*lo);
      w[v] = (!hi || c <= *hi) ? c : *lo;
    } else if (hi) {
      w[v] = -ceil_q(-*hi);
    }
  }
  return {w, {}};
}

}  // namespace detail

/// Constraint rows of the term-order test: one per vertex of every family's
/// parameter box and one per unbounded direction.
struct RealizabilityConstraint {
  IntVec delta;
  bool strict;   // w . delta > 0 (vertex) or w . delta >= 0 (direction)
  IntVec border;  // vertex only
  IntVec rep;     // vertex only
};

inline std::vector<RealizabilityConstraint> realizability_constraints(const std::vector<BinomialFamily>& families) {
  std::vector<RealizabilityConstraint> out;
  for (const auto& f : families) {
    const std::size_t r = f.params.dim();
    const AffineMap d = f.delta();
    std::vector<std::size_t> ranged;
    for (std::size_t k = 0; k < r; ++k) {
      if (f.params.hi[k] == kInf) {
        IntVec col;
        for (const auto& row : d.rows) col.push_back(row.coeff[k]);
        if (!is_zero(col)) out.push_back({col, false, {}, {}});
      } else if (f.params.hi[k] - f.params.lo[k] > 1) {
        ranged.push_back(k);
      }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << ranged.size()); ++mask) {
      IntVec s = f.params.lo;
      for (std::size_t i = 0; i < ranged.size(); ++i)
        if (mask >> i & 1) s[ranged[i]] = f.params.hi[ranged[i]] - 1;
      out.push_back({d(s), true, f.border_map(s), f.rep_map(s)});
    }
  }
  return out;
}

/// True iff w > 0 and w satisfies every constraint of the families exactly.
inline bool check_witness(const IntVec& w, const std::vector<BinomialFamily>& families) {
  if (std::any_of(w.begin(), w.end(), [](Int x) { return x <= 0; })) return false;
  for (const auto& c : realizability_constraints(families)) {
    BigInt dot = 0;
    for (std::size_t i = 0; i < w.size(); ++i) dot += BigInt(w[i]) * c.delta[i];
    if (c.strict ? dot <= 0 : dot < 0) return false;
  }
  return true;
}

/// True iff the certificate rules out every strictly positive weight: its
/// combination is componentwise <= 0 and some vertex term has positive weight.
inline bool check_certificate(const std::vector<RealizabilityResult::Term>& cert, std::size_t n) {
  std::vector<BigInt> sum(n, 0);
  bool strict = false;
  for (const auto& t : cert) {
    if (t.multiplier < 0 || t.delta.size() != n) return false;
    if (t.multiplier > 0 && !t.border.empty()) {
      strict = true;
      if (sub(t.border, t.rep) != t.delta) return false;
    }
    for (std::size_t i = 0; i < n; ++i) sum[i] += BigInt(t.multiplier) * t.delta[i];
  }
  return strict && std::all_of(sum.begin(), sum.end(), [](const BigInt& x) { return x <= 0; });
}

/// Is there a strictly positive weight vector w with w . (b - rep(b)) > 0 for
/// every border element b?
inline RealizabilityResult groebner_realizable(const std::vector<BinomialFamily>& families) {
  RealizabilityResult res;
  if (families.empty()) {
    res.realizable = true;
    return res;
  }
  const std::size_t n = families.front().border_map.rows.size();
  const auto cons = realizability_constraints(families);
  // Homogeneous system, so strict inequalities become >= 1.
  std::vector<IntVec> a;
  IntVec b;
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    a.push_back(e);
    b.push_back(1);
  }
  for (const auto& c : cons) {
    a.push_back(c.delta);
    b.push_back(c.strict ? 1 : 0);
  }
  const auto fm = detail::fourier_motzkin(a, b);
  if (fm.point) {
    BigInt den = 1;
    for (const auto& x : *fm.point) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<BigInt> num;
    BigInt g = 0;
    for (const auto& x : *fm.point) {
      num.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
      g = boost::multiprecision::gcd(g, num.back());
    }
    for (auto& x : num) res.witness.push_back(to_int(x / g));
    res.realizable = true;
    return res;
  }
  BigInt den = 1;
  for (const auto& [k, m] : fm.certificate) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(m));
  for (const auto& [k, m] : fm.certificate) {
    if (k < n || m == 0) continue;  // positivity rows only add slack
    const auto& c = cons[k - n];
    const Int mult = to_int(boost::multiprecision::numerator(m) * (den / boost::multiprecision::denominator(m)));
    res.certificate.push_back({c.border, c.rep, c.delta, mult});
  }
  return res;
}

inline RealizabilityResult groebner_realizable(const RectUnion& ideal, const Lattice& lat) {
  return groebner_realizable(border_families(ideal, lat));
}

}  // namespace latbb
