#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "errors.hpp"

namespace cbsg {

// The only scalar types on any decision path. cpp_rational keeps values
// reduced with a positive denominator, which is exactly the invariant the
// rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Int& n, const Int& d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(n) / Rational(d);
}

// Floor division for possibly negative numerators.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rfloor(const Rational& q) { return floor_div(num(q), den(q)); }
inline Int rceil(const Rational& q) { return ceil_div(num(q), den(q)); }

inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw InvalidArgument("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int s = isqrt_floor(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

// Exact square root of a nonnegative rational, when it exists in Q.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int sn, sd;
  if (!is_perfect_square(num(q), &sn)) return std::nullopt;
  if (!is_perfect_square(den(q), &sd)) return std::nullopt;
  return make_rational(sn, sd);
}

// Wire format: "p/q", or "p" when the denominator is 1.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> ParseError { return ParseError("invalid rational '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw bad();
  auto slash = t.find('/');
  auto parse_int = [&](const std::string& u) -> Int {
    if (u.empty()) throw bad();
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) throw bad();
    for (; i < u.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(u[i]))) throw bad();
    return Int(u);
  };
  if (slash == std::string::npos) return Rational(parse_int(t));
  Int n = parse_int(t.substr(0, slash));
  Int d = parse_int(t.substr(slash + 1));
  if (d == 0) throw bad();
  return make_rational(n, d);
}

inline std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

inline std::string to_string(const Int& n) { return n.str(); }

// Truncated decimal rendering, display only (SVG coordinates).
inline std::string to_decimal(const Rational& q, int digits) {
  Int n = num(q), d = den(q);
  std::string out;
  if (n < 0) {
    out += "-";
    n = -n;
  }
  out += Int(n / d).str();
  Int rem = n % d;
  if (rem == 0 || digits <= 0) return out;
  std::string frac;
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    frac += Int(rem / d).str();
    rem %= d;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace cbsg
