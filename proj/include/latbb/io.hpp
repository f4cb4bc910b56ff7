#pragma once

// JSON encodings of lattices, unions of boxes, affine maps and binomial
// families. Infinite bounds are written as null.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "latbb/affine.hpp"
#include "latbb/border_basis.hpp"
#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/staircase.hpp"

namespace latbb::io {

using json = nlohmann::json;

/// Malformed input; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(where + ": missing field \"" + name + "\"");
  return j.at(name);
}

inline Int to_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<Int>();
}

inline IntVec to_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array of integers");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline json bound(Int x) { return x == kInf ? json(nullptr) : json(x); }

}  // namespace detail

// Lattices: {"n": 2, "generators": [[2, 6], [0, 10]]}

inline json to_json(const Lattice& lat) { return {{"n", lat.dim()}, {"generators", lat.generators()}}; }

inline Lattice lattice_from_json(const json& j) {
  const Int n = detail::to_int(detail::field(j, "n", "lattice"), "lattice.n");
  if (n <= 0) throw FormatError("lattice.n: must be positive");
  const json& g = detail::field(j, "generators", "lattice");
  if (!g.is_array() || g.empty()) throw FormatError("lattice.generators: expected a non-empty array");
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string where = "lattice.generators[" + std::to_string(i) + "]";
    IntVec v = detail::to_vec(g[i], where);
    if (v.size() != static_cast<std::size_t>(n)) throw FormatError(where + ": length differs from n");
    gens.push_back(std::move(v));
  }
  try {
    return hnf(gens);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("lattice.generators: ") + e.what());
  }
}

// Boxes: {"lo": [0, 0], "hi": [2, null]}; unions: {"n": 2, "rects": [...]}

inline json to_json(const HyperRect& r) {
  json hi = json::array();
  for (Int x : r.hi) hi.push_back(detail::bound(x));
  return {{"lo", r.lo}, {"hi", hi}};
}

inline HyperRect rect_from_json(const json& j, const std::string& where) {
  HyperRect r;
  r.lo = detail::to_vec(detail::field(j, "lo", where), where + ".lo");
  const json& hi = detail::field(j, "hi", where);
  if (!hi.is_array()) throw FormatError(where + ".hi: expected an array");
  for (std::size_t i = 0; i < hi.size(); ++i)
    r.hi.push_back(hi[i].is_null() ? kInf : detail::to_int(hi[i], where + ".hi[" + std::to_string(i) + "]"));
  if (r.lo.size() != r.hi.size()) throw FormatError(where + ": lo and hi differ in length");
  for (Int x : r.lo)
    if (x < 0) throw FormatError(where + ".lo: negative coordinate");
  return r;
}

inline json to_json(const RectUnion& u) {
  json rects = json::array();
  for (const auto& r : u.rects()) rects.push_back(to_json(r));
  return {{"n", u.dim()}, {"rects", rects}};
}

inline RectUnion rect_union_from_json(const json& j) {
  const json& rs = detail::field(j, "rects", "ideal");
  if (!rs.is_array()) throw FormatError("ideal.rects: expected an array");
  std::vector<HyperRect> rects;
  for (std::size_t i = 0; i < rs.size(); ++i) rects.push_back(rect_from_json(rs[i], "ideal.rects[" + std::to_string(i) + "]"));
  std::size_t n = 0;
  if (j.contains("n"))
    n = static_cast<std::size_t>(detail::to_int(j.at("n"), "ideal.n"));
  else if (!rects.empty())
    n = rects.front().dim();
  else
    throw FormatError("ideal: empty rects need an explicit \"n\"");
  for (std::size_t i = 0; i < rects.size(); ++i)
    if (rects[i].dim() != n) throw FormatError("ideal.rects[" + std::to_string(i) + "]: dimension differs from n");
  return RectUnion(n, rects);
}

// Affine maps: {"matrix": rows per output coordinate, "offset": [...]}

inline json to_json(const AffineMap& m) { return {{"matrix", m.matrix()}, {"offset", m.offset()}}; }

inline AffineMap affine_map_from_json(const json& j, const std::string& where) {
  const json& mat = detail::field(j, "matrix", where);
  const IntVec off = detail::to_vec(detail::field(j, "offset", where), where + ".offset");
  if (!mat.is_array() || mat.size() != off.size()) throw FormatError(where + ".matrix: row count differs from offset");
  AffineMap m;
  for (std::size_t i = 0; i < mat.size(); ++i)
    m.rows.push_back({detail::to_vec(mat[i], where + ".matrix[" + std::to_string(i) + "]"), off[i]});
  return m;
}

inline json to_json(const BinomialFamily& f) {
  return {{"params", to_json(f.params)}, {"border", to_json(f.border_map)}, {"rep", to_json(f.rep_map)}};
}

inline BinomialFamily family_from_json(const json& j, const std::string& where) {
  BinomialFamily f;
  f.params = rect_from_json(detail::field(j, "params", where), where + ".params");
  f.border_map = affine_map_from_json(detail::field(j, "border", where), where + ".border");
  f.rep_map = affine_map_from_json(detail::field(j, "rep", where), where + ".rep");
  return f;
}

inline json to_json(const RealizabilityResult& r) {
  json j{{"realizable", r.realizable}};
  if (r.realizable) {
    j["witness"] = r.witness;
  } else {
    json cert = json::array();
    for (const auto& t : r.certificate) {
      json e{{"delta", t.delta}, {"multiplier", t.multiplier}};
      if (!t.border.empty()) {
        e["border"] = t.border;
        e["rep"] = t.rep;
      }
      cert.push_back(std::move(e));
    }
    j["certificate"] = cert;
  }
  return j;
}

}  // namespace latbb::io
