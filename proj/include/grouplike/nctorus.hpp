#pragma once

#include <map>
#include <string>
#include <utility>

#include "grouplike/scalar.hpp"

namespace grouplike {

/* The algebra with basis a_{n,l} over (n,l) in Z^2 and product
 *   a_{n1,l1} * a_{n2,l2} = e^{i lam n1 l2} a_{n1+n2, l1+l2},
 * star a_{n,l}^* = e^{i lam n l} a_{-n,-l}. Finitely supported sums with
 * exact scalar coefficients. */
struct NCTElement {
  std::map<std::pair<int, int>, Scalar> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::string str() const;
};

NCTElement nct_basis(int n, int l, const Scalar& c = Scalar(1));
NCTElement nct_add(const NCTElement& a, const NCTElement& b);
NCTElement nct_scale(const Scalar& c, const NCTElement& a);
NCTElement nct_mul(const NCTElement& a, const NCTElement& b);
NCTElement nct_star(const NCTElement& a);
bool nct_eq(const NCTElement& a, const NCTElement& b);

/* An isomorphism class of the standard right modules: the quotient by
 * (e^{-i alpha} a_{p,q} - 1), recorded by the winding pair and offset. */
struct ModuleClass {
  int p = 0, q = 0;
  Angle alpha;
};

// Sign-normalized (p > 0, or p = 0 and q > 0) with the 2pi part of alpha
// reduced to [0,1) turns. Throws ZeroClass on (0,0).
ModuleClass class_canonicalize(const ModuleClass& c);
bool class_eq(const ModuleClass& a, const ModuleClass& b);

struct TensorClassification {
  int multiplicity = 0;
  ModuleClass cls;      // meaningful when multiplicity > 0
  bool primitive = true; // gcd(|p|,|q|) of the output class is 1
};

/* Classification of T^{alpha1}_{p1,q1} (x) T^{alpha2}_{p2,q2}: multiplicity
 * gcd(p1,p2) copies of the class with p = lcm, q = (p1 q2 + p2 q1)/gcd and
 * alpha = (alpha1 p2 + alpha2 p1)/gcd when some p is nonzero; for
 * p1 = p2 = 0 a single class survives exactly when
 * q2 alpha1 - q1 alpha2 lies in the lattice spanned by g lam and
 * g lcm(q1,q2) 2pi, g = gcd(q1,q2). Inputs must be canonical coprime classes
 * (NotCoprime otherwise). */
TensorClassification tensor_classify(const ModuleClass& a, const ModuleClass& b);

/* The module realized on coset representatives of Z(p,q) in Z^2: basis
 * indexed by iota(n,l) = n q - l p restricted to a window [lo, hi] of coset
 * indices, with the section sigma(t) chosen by extended gcd. */
struct RealizedModule {
  ModuleClass cls;
  int lo = 0, hi = 0;
  int sn = 0, sl = 0; // sigma(t) = (t sn, t sl), iota(sigma(t)) = t

  int size() const { return hi - lo + 1; }
  int iota(int n, int l) const { return n * cls.q - l * cls.p; }
};

RealizedModule realize_module(const ModuleClass& cls, int lo, int hi);

// Right action of a_{n,l} on the basis vector of coset t: lands in coset
// t + iota(n,l) with an exact phase from walking the defining relation.
// Throws WindowTooSmall when the target leaves the window.
std::pair<int, Scalar> realized_act(const RealizedModule& m, int t, int n, int l);

} // namespace grouplike
