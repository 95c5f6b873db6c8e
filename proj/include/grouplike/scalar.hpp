#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouplike/rational.hpp"

namespace grouplike {

/* Exact symbolic coefficient arithmetic.
 *
 * An Angle is a rational linear combination
 *
 *     r0 * 1  +  rlam * lam  +  rpi * 2pi  +  ra1 * a1  +  ra2 * a2
 *
 * where lam is the deformation angle of the twisted convolution product and
 * a1, a2 are free parameters available for symbolic module labels. The five
 * generators are treated as linearly independent over Q; consequently angle
 * equality, congruence modulo a lattice, and phase equality are all decidable
 * by componentwise rational arithmetic. (For lam an irrational multiple of pi
 * this models the true situation; every answer should be read as "for generic
 * lam".)
 *
 * A Phase is e^{i*Angle} with equality modulo full turns: exponents differing
 * by an integer multiple of 2pi are identified, so the canonical exponent has
 * rpi in [0,1). Nothing else is identified; in particular e^{i*pi} and the
 * coefficient -1 are distinct terms, and a Scalar is a formal Q(i)-linear
 * combination of canonical phases. Scalars form a commutative ring with
 * involution (conjugation negates exponents and coefficients' imaginary
 * parts); single-term scalars with nonzero coefficient are units.
 */
struct Angle {
  Rat r0, rlam, rpi, ra1, ra2;

  Angle() = default;
  Angle(Rat r0_, Rat rlam_, Rat rpi_)
      : r0(std::move(r0_)), rlam(std::move(rlam_)), rpi(std::move(rpi_)) {}
  Angle(Rat r0_, Rat rlam_, Rat rpi_, Rat ra1_, Rat ra2_)
      : r0(std::move(r0_)), rlam(std::move(rlam_)), rpi(std::move(rpi_)),
        ra1(std::move(ra1_)), ra2(std::move(ra2_)) {}

  static Angle zero() { return Angle(); }
  static Angle lam(Rat c = Rat(1)) { return Angle(Rat(0), std::move(c), Rat(0)); }
  static Angle two_pi(Rat c = Rat(1)) { return Angle(Rat(0), Rat(0), std::move(c)); }
  static Angle param1(Rat c = Rat(1)) { return Angle(Rat(0), Rat(0), Rat(0), std::move(c), Rat(0)); }
  static Angle param2(Rat c = Rat(1)) { return Angle(Rat(0), Rat(0), Rat(0), Rat(0), std::move(c)); }

  bool is_zero() const { return r0 == 0 && rlam == 0 && rpi == 0 && ra1 == 0 && ra2 == 0; }

  friend Angle operator+(const Angle& a, const Angle& b) {
    return Angle(a.r0 + b.r0, a.rlam + b.rlam, a.rpi + b.rpi, a.ra1 + b.ra1, a.ra2 + b.ra2);
  }
  friend Angle operator-(const Angle& a, const Angle& b) {
    return Angle(a.r0 - b.r0, a.rlam - b.rlam, a.rpi - b.rpi, a.ra1 - b.ra1, a.ra2 - b.ra2);
  }
  friend Angle operator-(const Angle& a) { return Angle(-a.r0, -a.rlam, -a.rpi, -a.ra1, -a.ra2); }
  friend Angle operator*(const Rat& c, const Angle& a) {
    return Angle(c * a.r0, c * a.rlam, c * a.rpi, c * a.ra1, c * a.ra2);
  }
  friend Angle operator/(const Angle& a, const Rat& c) { return Rat(1) / c * a; }

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.r0 == b.r0 && a.rlam == b.rlam && a.rpi == b.rpi && a.ra1 == b.ra1 && a.ra2 == b.ra2;
  }
  friend bool operator!=(const Angle& a, const Angle& b) { return !(a == b); }
  // Lexicographic on (r0, rlam, rpi, ra1, ra2); a total order for canonical term sorting.
  friend bool operator<(const Angle& a, const Angle& b) {
    if (a.r0 != b.r0) return a.r0 < b.r0;
    if (a.rlam != b.rlam) return a.rlam < b.rlam;
    if (a.rpi != b.rpi) return a.rpi < b.rpi;
    if (a.ra1 != b.ra1) return a.ra1 < b.ra1;
    return a.ra2 < b.ra2;
  }
};

// "3*a1+2*a2", "lam/2", "2pi/3", "0", ... (pi alone counts as half of 2pi).
std::string angle_str(const Angle& a);
// Parses the same grammar; see angle_str. Throws ParseError.
Angle parse_angle(const std::string& text);

// Is a - b an integer combination of the lattice generators? Exact; decided by
// integer linear algebra on the five rational coordinates.
bool angle_congruent(const Angle& a, const Angle& b, const std::vector<Angle>& lattice_gens);

/* e^{i*angle}, stored with the canonical exponent (rpi reduced into [0,1)).
 * Phases multiply by adding exponents. */
struct Phase {
  Angle exp; // canonical

  Phase() = default;
  static Phase of(const Angle& a) {
    Phase p;
    p.exp = a;
    p.exp.rpi = frac_part(a.rpi);
    return p;
  }
  static Phase one() { return Phase(); }

  bool is_one() const { return exp.is_zero(); }
  Phase inverse() const { return of(-exp); }
  friend Phase operator*(const Phase& a, const Phase& b) { return of(a.exp + b.exp); }
  friend bool operator==(const Phase& a, const Phase& b) { return a.exp == b.exp; }
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }
  friend bool operator<(const Phase& a, const Phase& b) { return a.exp < b.exp; }
};

inline bool phase_eq(const Phase& a, const Phase& b) { return a == b; }

class Scalar {
public:
  Scalar() = default;
  Scalar(int v) { *this = from_coeff(GaussRat(Rat(v))); }
  Scalar(const Rat& v) { *this = from_coeff(GaussRat(v)); }

  static Scalar from_coeff(const GaussRat& c);
  static Scalar unit_phase(const Angle& exponent); // e^{i*exponent}
  static Scalar term(const GaussRat& c, const Angle& exponent);
  static Scalar unit_i() { return from_coeff(GaussRat::unit_i()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Single term? Such scalars are the units we can divide by exactly.
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const std::map<Phase, GaussRat>& terms() const { return terms_; }

  Scalar conj() const;
  // Inverse of a monomial; throws NotInvertible otherwise.
  Scalar monomial_inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order for use as a map key / deterministic pivots.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;

private:
  // Canonical: no zero coefficients, keys are canonical phases.
  std::map<Phase, GaussRat> terms_;
};

/* Quotient-field fractions of scalars, the coefficient field for exact
 * elimination. Zero tests are formal (numerator vanishes as a canonical
 * combination of phases), matching the generic-lam reading above. Fractions
 * are normalized so a monomial denominator cancels away entirely. */
class ScalarFrac {
public:
  ScalarFrac() : num_(), den_(Scalar(1)) {}
  ScalarFrac(Scalar s) : num_(std::move(s)), den_(Scalar(1)) {}
  ScalarFrac(Scalar n, Scalar d);

  static ScalarFrac one() { return ScalarFrac(Scalar(1)); }

  const Scalar& num() const { return num_; }
  const Scalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  // Exact scalar if the denominator normalized to 1.
  std::optional<Scalar> as_scalar() const;

  ScalarFrac inverse() const;
  ScalarFrac conj() const { return ScalarFrac(num_.conj(), den_.conj()); }

  friend ScalarFrac operator+(const ScalarFrac& a, const ScalarFrac& b);
  friend ScalarFrac operator-(const ScalarFrac& a, const ScalarFrac& b);
  friend ScalarFrac operator-(const ScalarFrac& a);
  friend ScalarFrac operator*(const ScalarFrac& a, const ScalarFrac& b);
  friend ScalarFrac operator/(const ScalarFrac& a, const ScalarFrac& b);
  ScalarFrac& operator+=(const ScalarFrac& b) { return *this = *this + b; }
  ScalarFrac& operator-=(const ScalarFrac& b) { return *this = *this - b; }
  ScalarFrac& operator*=(const ScalarFrac& b) { return *this = *this * b; }

  friend bool operator==(const ScalarFrac& a, const ScalarFrac& b);
  friend bool operator!=(const ScalarFrac& a, const ScalarFrac& b) { return !(a == b); }

  std::string str() const;

private:
  void normalize();
  Scalar num_, den_;
};

} // namespace grouplike
