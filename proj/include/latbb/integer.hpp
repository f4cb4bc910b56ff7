#pragma once

// Integer helpers shared by every module: the coordinate type, the infinity
// sentinels used by half-open boxes, floor division and checked arithmetic.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latbb {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector or lattice point (element of Z^n).
using IntVec = std::vector<Int>;
/// Element of N^n. Same representation as IntVec; all coordinates are >= 0.
using NatVec = IntVec;

/// Upper bound meaning "+infinity" in a half-open interval [lo, hi).
inline constexpr Int kInf = std::numeric_limits<Int>::max();
/// Lower bound meaning "-infinity"; only appears in images of the map rho.
inline constexpr Int kNegInf = std::numeric_limits<Int>::min();

/// Raised when an intermediate value leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised for inputs outside what an algorithm supports (not a math error).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// floor(a / b) for b != 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// ceil(a / b) for b != 0.
inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Least non-negative residue of a modulo b > 0.
inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }
inline Int lcm(Int a, Int b) { return (a == 0 || b == 0) ? 0 : checked_mul(a / gcd(a, b), b < 0 ? -b : b); }

inline Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min() + 1)
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

inline bool is_zero(const IntVec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVec scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
  return r;
}

inline IntVec negate(const IntVec& a) { return scale(-1, a); }

inline Int total_degree(const NatVec& v) {
  Int s = 0;
  for (Int x : v) s = checked_add(s, x);
  return s;
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace latbb
