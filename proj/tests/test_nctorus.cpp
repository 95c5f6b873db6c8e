#include <doctest.h>

#include <random>

#include "grouplike/nctorus.hpp"

using namespace grouplike;

namespace {

NCTElement seeded_nct(std::mt19937_64& rng) {
  NCTElement e;
  for (int pick = 0; pick < 3; ++pick) {
    const int n = static_cast<int>(rng() % 7) - 3;
    const int l = static_cast<int>(rng() % 7) - 3;
    const int re = static_cast<int>(rng() % 5) - 2;
    const int im = static_cast<int>(rng() % 5) - 2;
    e = nct_add(e, nct_basis(n, l, Scalar::term(GaussRat(Rat(re), Rat(im)), Angle::zero())));
  }
  return e;
}

ModuleClass mc(int p, int q, Angle alpha = Angle::zero()) { return ModuleClass{p, q, alpha}; }

} // namespace

TEST_CASE("twisted product law on basis monomials") {
  // a_{n1,l1} a_{n2,l2} = e^{i lam n1 l2} a_{n1+n2, l1+l2}.
  NCTElement prod = nct_mul(nct_basis(2, 1), nct_basis(3, 4));
  NCTElement expect = nct_basis(5, 5, Scalar::unit_phase(Angle::lam(Rat(8))));
  CHECK(nct_eq(prod, expect));

  // Commutator phase: a_{1,0} a_{0,1} = e^{i lam} a_{0,1} a_{1,0}.
  NCTElement xy = nct_mul(nct_basis(1, 0), nct_basis(0, 1));
  NCTElement yx = nct_mul(nct_basis(0, 1), nct_basis(1, 0));
  CHECK(nct_eq(xy, nct_scale(Scalar::unit_phase(Angle::lam()), yx)));
}

TEST_CASE("star is an involutive conjugate-linear anti-automorphism") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    NCTElement a = seeded_nct(rng);
    NCTElement b = seeded_nct(rng);
    CHECK(nct_eq(nct_star(nct_star(a)), a));
    CHECK(nct_eq(nct_star(nct_mul(a, b)), nct_mul(nct_star(b), nct_star(a))));
    CHECK(nct_eq(nct_mul(nct_mul(a, b), a), nct_mul(a, nct_mul(b, a))));
  }
  // a_{n,l}* = e^{i lam n l} a_{-n,-l}.
  CHECK(nct_eq(nct_star(nct_basis(2, 3)),
               nct_basis(-2, -3, Scalar::unit_phase(Angle::lam(Rat(6))))));
}

TEST_CASE("classifier canonicalization and input guards") {
  CHECK_THROWS_AS(class_canonicalize(mc(0, 0)), Error);
  ModuleClass c = class_canonicalize(mc(-2, 1, Angle::param1()));
  CHECK(c.p == 2);
  CHECK(c.q == -1);
  CHECK(c.alpha == -Angle::param1());

  CHECK_THROWS_AS(tensor_classify(mc(2, 4), mc(1, 0)), Error);  // gcd 2
  CHECK_THROWS_AS(tensor_classify(mc(-1, 0), mc(1, 0)), Error); // not canonical
}

TEST_CASE("tensor classification: the four pinned products") {
  const Angle a1 = Angle::param1(), a2 = Angle::param2();

  // (2,1,a1) (x) (3,1,a2): one class, lcm 6, q = 5, offset 3 a1 + 2 a2.
  TensorClassification t1 = tensor_classify(mc(2, 1, a1), mc(3, 1, a2));
  CHECK(t1.multiplicity == 1);
  CHECK(t1.cls.p == 6);
  CHECK(t1.cls.q == 5);
  CHECK(t1.cls.alpha == Rat(3) * a1 + Rat(2) * a2);

  // (2,1,a1) (x) (2,1,a2): gcd 2 copies of (2,2)-winding... primitive (1,1).
  TensorClassification t2 = tensor_classify(mc(2, 1, a1), mc(2, 1, a2));
  CHECK(t2.multiplicity == 2);
  CHECK(t2.cls.p == 2);
  CHECK(t2.cls.q == 2);
  CHECK(t2.cls.alpha == a1 + a2);

  // (0,1,a) (x) (0,1,a+lam): the lam shift is in the lattice; offset a.
  const Angle a = Angle::param1();
  TensorClassification t3 = tensor_classify(mc(0, 1, a), mc(0, 1, a + Angle::lam()));
  CHECK(t3.multiplicity == 1);
  CHECK(t3.cls.p == 0);
  CHECK(t3.cls.q == 1);
  CHECK(t3.cls.alpha == a);

  // (0,1,0) (x) (0,1,2pi/3): offsets in different orbits, empty product.
  TensorClassification t4 = tensor_classify(mc(0, 1), mc(0, 1, Angle::two_pi(Rat(1, 3))));
  CHECK(t4.multiplicity == 0);
}

TEST_CASE("both-zero branch uses the full congruence lattice") {
  // Difference q2 alpha1 - q1 alpha2 = 3 lam - 2pi lies in {lam Z + 2pi Z}.
  TensorClassification t =
      tensor_classify(mc(0, 1, Angle::lam(Rat(3))), mc(0, 1, Angle::two_pi()));
  CHECK(t.multiplicity == 1);
  CHECK(t.cls.q == 1);
}

TEST_CASE("realized modules act by the bisection twist") {
  // T^alpha_{2,1} on a window of cosets; generator a_{2,1} scales xi_t by
  // e^{i(alpha + lam t)}.
  const Angle alpha = Angle::param1();
  RealizedModule m = realize_module(class_canonicalize(mc(2, 1, alpha)), -6, 6);
  for (int t : {-1, 0, 1, 2}) {
    auto [target, phase] = realized_act(m, t, 2, 1);
    CHECK(target == t);
    CHECK(phase == Scalar::unit_phase(alpha + Angle::lam(Rat(t))));
  }

  // Moving off the coset: a_{1,0} sends coset t to t + iota(1,0) = t + q.
  auto [t2, ph2] = realized_act(m, 0, 1, 0);
  CHECK(t2 == 1);

  CHECK_THROWS_AS(realized_act(m, 0, 40, 0), Error); // runs past the window
  CHECK_THROWS_AS(realized_act(m, 99, 1, 0), Error); // start outside the window
}

TEST_CASE("realized action composes like the algebra") {
  const Angle alpha = Angle::lam(Rat(1, 2));
  RealizedModule m = realize_module(class_canonicalize(mc(3, 2, alpha)), -40, 40);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int t = static_cast<int>(rng() % 5) - 2;
    const int n1 = static_cast<int>(rng() % 5) - 2, l1 = static_cast<int>(rng() % 5) - 2;
    const int n2 = static_cast<int>(rng() % 5) - 2, l2 = static_cast<int>(rng() % 5) - 2;
    // xi_t . (a b) vs (xi_t . a) . b, with the product's twist phase.
    NCTElement prod = nct_mul(nct_basis(n1, l1), nct_basis(n2, l2));
    REQUIRE(prod.coeffs.size() == 1);
    const auto& [key, coeff] = *prod.coeffs.begin();
    auto [ta, pa] = realized_act(m, t, n1, l1);
    auto [tb, pb] = realized_act(m, ta, n2, l2);
    auto [tc, pc] = realized_act(m, t, key.first, key.second);
    CHECK(tb == tc);
    CHECK(pa * pb == pc * coeff);
  }
}
