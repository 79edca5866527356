#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace omet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Largest integer <= q.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt rfloor(const Rational& q) { return floor_div(num(q), den(q)); }

inline BigInt rceil(const Rational& q) { return -floor_div(-num(q), den(q)); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Canonical "p/q" form used by all JSON interfaces.
inline std::string format_rational(const Rational& q) {
  return num(q).str() + "/" + den(q).str();
}

// Accepts "p/q", a bare integer "p", or a decimal like "0.25".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(p, q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    // strip leading zeros; a bare leading zero would read as octal
    size_t nz = digits.find_first_not_of('0');
    digits = (nz == std::string::npos) ? "0" : digits.substr(nz);
    BigInt p(digits);
    if (neg) p = -p;
    BigInt q = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) q *= 10;
    return Rational(p, q);
  }
  return Rational(BigInt(s));
}

// Scalar abstraction shared by the float and rational backends.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr double triangle_rel_tol = 1e-9;
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational abs(const Rational& x) { return rabs(x); }
};

}  // namespace omet
