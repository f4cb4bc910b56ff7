#pragma once

// Exponent vectors as monomials ("x^2*y^3") and back, and binomial families
// as text.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latbb/affine.hpp"
#include "latbb/border_basis.hpp"
#include "latbb/integer.hpp"

namespace latbb {

/// x, y, z for n <= 3, otherwise x1 .. xn.
inline std::vector<std::string> variable_names(std::size_t n) {
  std::vector<std::string> v;
  if (n <= 3) {
    v = {"x", "y", "z"};
    v.resize(n);
    return v;
  }
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

inline std::string monomial(const NatVec& e) {
  const auto names = variable_names(e.size());
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string binomial(const NatVec& lead, const NatVec& tail) { return monomial(lead) + " - " + monomial(tail); }

/// Inverse of monomial(); throws std::invalid_argument on bad input.
inline NatVec parse_monomial(const std::string& text, std::size_t n) {
  const auto names = variable_names(n);
  NatVec e(n, 0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1") return e;
  if (s.empty()) throw std::invalid_argument("empty monomial");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = s.find('*', pos);
    const std::string factor = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    const std::size_t caret = factor.find('^');
    const std::string var = factor.substr(0, caret);
    std::size_t idx = n;
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == var) idx = i;
    if (idx == n) throw std::invalid_argument("unknown variable '" + var + "'");
    Int power = 1;
    if (caret != std::string::npos) {
      const std::string digits = factor.substr(caret + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad exponent in '" + factor + "'");
      power = std::stoll(digits);
    }
    e[idx] += power;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return e;
}

namespace detail {

inline const char* param_name(std::size_t k) {
  static const char* names[] = {"i", "j", "k", "l", "p", "q", "r", "s"};
  return k < 8 ? names[k] : "t";
}

inline std::string affine_text(const AffineForm& f) {
  std::string s;
  for (std::size_t k = 0; k < f.coeff.size(); ++k) {
    const Int c = f.coeff[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    const Int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += param_name(k);
  }
  if (f.constant != 0 || s.empty()) {
    if (!s.empty() && f.constant > 0) s += "+";
    s += std::to_string(f.constant);
  }
  return s;
}

inline std::string parametric_monomial(const AffineMap& m) {
  const auto names = variable_names(m.rows.size());
  std::string s;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const AffineForm& f = m.rows[i];
    if (f.is_constant() && f.constant == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (f.is_constant()) {
      if (f.constant != 1) s += '^' + std::to_string(f.constant);
    } else {
      const std::string e = affine_text(f);
      s += e.find_first_of("+-") == std::string::npos ? "^" + e : "^(" + e + ")";
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

/// One line per binomial for finite families; a parametric line with the
/// parameter ranges otherwise.
inline std::vector<std::string> family_lines(const BinomialFamily& f) {
  std::vector<std::string> out;
  if (f.finite()) {
    affine::for_each_param(f.params, [&](const IntVec& s) { out.push_back(binomial(f.border_map(s), f.rep_map(s))); });
    return out;
  }
  std::ostringstream line;
  line << detail::parametric_monomial(f.border_map) << " - " << detail::parametric_monomial(f.rep_map);
  std::string ranges;
  for (std::size_t k = 0; k < f.params.dim(); ++k) {
    if (affine::singleton(f.params, k)) continue;
    if (!ranges.empty()) ranges += ", ";
    ranges += detail::param_name(k);
    if (f.params.hi[k] == kInf)
      ranges += " >= " + std::to_string(f.params.lo[k]);
    else
      ranges += " in [" + std::to_string(f.params.lo[k]) + ", " + std::to_string(f.params.hi[k]) + ")";
  }
  if (!ranges.empty()) line << "  (" << ranges << ")";
  out.push_back(line.str());
  return out;
}

}  // namespace latbb
