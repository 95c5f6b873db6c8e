#include "grouplike/nctorus.hpp"

#include <cstdlib>
#include <numeric>

#include "grouplike/errors.hpp"

namespace grouplike {

namespace {

void accumulate(NCTElement& out, std::pair<int, int> key, const Scalar& c) {
  auto it = out.coeffs.try_emplace(key, Scalar()).first;
  it->second += c;
  if (it->second.is_zero()) out.coeffs.erase(it);
}

// x*a + y*b = gcd(a,b) >= 0.
void exgcd(long long a, long long b, long long& g, long long& x, long long& y) {
  if (b == 0) {
    g = a < 0 ? -a : a;
    x = a < 0 ? -1 : 1;
    y = 0;
    return;
  }
  long long g1, x1, y1;
  exgcd(b, a % b, g1, x1, y1);
  g = g1;
  x = y1;
  y = x1 - (a / b) * y1;
}

} // namespace

std::string NCTElement::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*a[" + std::to_string(key.first) + "," +
           std::to_string(key.second) + "]";
  }
  return out;
}

NCTElement nct_basis(int n, int l, const Scalar& c) {
  NCTElement e;
  if (!c.is_zero()) e.coeffs.emplace(std::make_pair(n, l), c);
  return e;
}

NCTElement nct_add(const NCTElement& a, const NCTElement& b) {
  NCTElement out = a;
  for (const auto& [key, c] : b.coeffs) accumulate(out, key, c);
  return out;
}

NCTElement nct_scale(const Scalar& c, const NCTElement& a) {
  NCTElement out;
  for (const auto& [key, v] : a.coeffs) {
    Scalar cv = c * v;
    if (!cv.is_zero()) out.coeffs.emplace(key, cv);
  }
  return out;
}

NCTElement nct_mul(const NCTElement& a, const NCTElement& b) {
  NCTElement out;
  for (const auto& [k1, c1] : a.coeffs)
    for (const auto& [k2, c2] : b.coeffs) {
      Scalar phase = Scalar::unit_phase(Angle::lam(Rat(static_cast<long long>(k1.first) * k2.second)));
      accumulate(out, {k1.first + k2.first, k1.second + k2.second}, c1 * c2 * phase);
    }
  return out;
}

NCTElement nct_star(const NCTElement& a) {
  NCTElement out;
  for (const auto& [key, c] : a.coeffs) {
    Scalar phase = Scalar::unit_phase(Angle::lam(Rat(static_cast<long long>(key.first) * key.second)));
    accumulate(out, {-key.first, -key.second}, c.conj() * phase);
  }
  return out;
}

bool nct_eq(const NCTElement& a, const NCTElement& b) { return a.coeffs == b.coeffs; }

ModuleClass class_canonicalize(const ModuleClass& c) {
  if (c.p == 0 && c.q == 0) fail("ZeroClass", "the class (0,0) does not define a module");
  ModuleClass out = c;
  if (out.p < 0 || (out.p == 0 && out.q < 0)) {
    out.p = -out.p;
    out.q = -out.q;
    out.alpha = -out.alpha;
  }
  out.alpha.rpi = frac_part(out.alpha.rpi);
  return out;
}

bool class_eq(const ModuleClass& a, const ModuleClass& b) {
  return a.p == b.p && a.q == b.q && a.alpha == b.alpha;
}

namespace {

void require_canonical_coprime(const ModuleClass& c, const char* which) {
  if (c.p == 0 && c.q == 0) fail("ZeroClass", std::string(which) + " is the zero class");
  if (c.p < 0 || (c.p == 0 && c.q < 0))
    fail("NotCoprime", std::string(which) + " is not sign-canonical");
  if (std::gcd(std::abs(c.p), std::abs(c.q)) != 1)
    fail("NotCoprime", std::string(which) + " has gcd(|p|,|q|) = " +
                           std::to_string(std::gcd(std::abs(c.p), std::abs(c.q))));
}

} // namespace

TensorClassification tensor_classify(const ModuleClass& a, const ModuleClass& b) {
  require_canonical_coprime(a, "left factor");
  require_canonical_coprime(b, "right factor");

  TensorClassification out;
  if (a.p != 0 || b.p != 0) {
    const int g = std::gcd(a.p, b.p); // one may be zero; canonical inputs keep g > 0
    out.multiplicity = g;
    ModuleClass cls;
    cls.p = a.p / g * b.p; // lcm with canonical sign
    cls.q = (a.p * b.q + b.p * a.q) / g;
    cls.alpha = (Rat(1) / Rat(g)) * (Rat(b.p) * a.alpha + Rat(a.p) * b.alpha);
    out.cls = class_canonicalize(cls);
    out.primitive = std::gcd(std::abs(out.cls.p), std::abs(out.cls.q)) == 1;
    return out;
  }

  // Both classes are horizontal families; the tensor survives exactly when
  // the offsets match on a common root of the two root sets, lam shifts
  // allowed.
  const int g = std::gcd(a.q, b.q);
  const int l = a.q / g * b.q;
  const Angle d = Rat(b.q) * a.alpha - Rat(a.q) * b.alpha;
  if (!angle_congruent(d, Angle::zero(),
                       {Angle::lam(Rat(g)), Angle::two_pi(Rat(g) * Rat(l))})) {
    out.multiplicity = 0;
    out.primitive = true;
    return out;
  }
  long long eg, x, y;
  exgcd(a.q, b.q, eg, x, y); // x a.q + y b.q = g
  // Canonical section: smallest positive coefficient on the left offset, so
  // equal factors combine to the left offset itself.
  const long long step = b.q / g;
  x = ((x - 1) % step + step) % step + 1;
  y = (g - x * a.q) / b.q;
  ModuleClass cls;
  cls.p = 0;
  cls.q = g;
  cls.alpha = Rat(x) * a.alpha + Rat(y) * b.alpha;
  out.multiplicity = 1;
  out.cls = class_canonicalize(cls);
  out.primitive = g == 1;
  return out;
}

RealizedModule realize_module(const ModuleClass& cls, int lo, int hi) {
  require_canonical_coprime(cls, "module class");
  if (lo > hi) fail("WindowTooSmall", "empty coset window");

  long long g, x, y;
  exgcd(cls.q, cls.p, g, x, y); // x q + y p = 1 for coprime classes
  RealizedModule m;
  m.cls = cls;
  m.lo = lo;
  m.hi = hi;
  m.sn = static_cast<int>(x);
  m.sl = static_cast<int>(-y); // sigma(t) = (t x, -t y): iota = t(xq + yp) = t
  return m;
}

std::pair<int, Scalar> realized_act(const RealizedModule& m, int t, int n, int l) {
  if (t < m.lo || t > m.hi)
    fail("UnknownObject", "coset " + std::to_string(t) + " outside the window");
  const int t2 = t + m.iota(n, l);
  if (t2 < m.lo || t2 > m.hi)
    fail("WindowTooSmall", "action lands in coset " + std::to_string(t2) +
                               ", window [" + std::to_string(m.lo) + "," +
                               std::to_string(m.hi) + "]");

  // [a_{sigma(t)}] a_{n,l} = e^{i lam sigma(t).n l} [a_{sigma(t)+(n,l)}].
  long long cn = static_cast<long long>(t) * m.sn + n;
  long long cl = static_cast<long long>(t) * m.sl + l;
  Scalar acc = Scalar::unit_phase(Angle::lam(Rat(static_cast<long long>(t) * m.sn * l)));

  // Walk the rewriting rule [a_{N+p,L+q}] = e^{i alpha} e^{-i lam p L}
  // [a_{N,L}] down to the representative of coset t2.
  const long long rn = static_cast<long long>(t2) * m.sn;
  const long long rl = static_cast<long long>(t2) * m.sl;
  long long k = m.cls.p != 0 ? (cn - rn) / m.cls.p : (cl - rl) / m.cls.q;
  while (k > 0) {
    acc *= Scalar::unit_phase(m.cls.alpha +
                              Angle::lam(Rat(-m.cls.p * (cl - m.cls.q))));
    cn -= m.cls.p;
    cl -= m.cls.q;
    --k;
  }
  while (k < 0) {
    acc *= Scalar::unit_phase(-m.cls.alpha + Angle::lam(Rat(m.cls.p * cl)));
    cn += m.cls.p;
    cl += m.cls.q;
    ++k;
  }
  return {t2, acc};
}

} // namespace grouplike
