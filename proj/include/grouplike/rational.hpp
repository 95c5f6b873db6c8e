#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "grouplike/errors.hpp"

namespace grouplike {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_int(const Rat& x) { return den(x) == 1; }

// Floor division for rationals; floor_rat(7/2) = 3, floor_rat(-7/2) = -4.
inline Int floor_rat(const Rat& x) {
  Int n = num(x), d = den(x);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// x reduced into [0,1) by subtracting an integer.
inline Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

inline std::string rat_str(const Rat& x) {
  if (is_int(x)) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

// Accepts "p", "p/q", optional sign, surrounding whitespace. Exact, no floats.
Rat parse_rat(const std::string& text);

/* Rationals with i adjoined: a + b i. A field; coefficients of the symbolic
 * scalars live here. */
struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero Gaussian rational");
    Rat n = re * re + im * im;
    return {re / n, -im / n};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

std::string gauss_str(const GaussRat& c);

} // namespace grouplike
