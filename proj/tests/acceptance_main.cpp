// Acceptance sweep: nine independent end-to-end checks, one report line each.
// Exit code = number of failed checks. Everything is exact symbolic
// arithmetic; the two timed sweeps carry their wall-clock limits as named
// constants right next to the check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "grouplike/bibundle.hpp"
#include "grouplike/circlegeom.hpp"
#include "grouplike/convalg.hpp"
#include "grouplike/groupoid.hpp"
#include "grouplike/nctorus.hpp"
#include "grouplike/scalar.hpp"
#include "grouplike/stacky.hpp"
#include "grouplike/symprel.hpp"

using namespace grouplike;

namespace {

constexpr double kOracleSweepLimitSec = 30.0; // criterion 1
constexpr double kHopfishLimitSec = 10.0;     // criterion 4

double elapsed_sec(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// All canonical coprime classes with |p|, |q| <= bound, plus the horizontal
// class (0, 1).
std::vector<std::pair<int, int>> canonical_classes(int bound) {
  std::vector<std::pair<int, int>> out;
  out.push_back({0, 1});
  for (int p = 1; p <= bound; ++p)
    for (int q = -bound; q <= bound; ++q)
      if (std::gcd(p, std::abs(q)) == 1) out.push_back({p, q});
  return out;
}

std::vector<std::pair<std::string, Angle>> alpha_samples() {
  return {{"0", Angle{}},
          {"lam", Angle::lam(Rat(1))},
          {"lam/2", Angle::lam(Rat(1, 2))},
          {"2pi/3", Angle::two_pi(Rat(1, 3))},
          {"a1", Angle::param1(Rat(1))},
          {"a2", Angle::param2(Rat(1))}};
}

std::string pair_str(int p1, int q1, const std::string& a1, int p2, int q2,
                     const std::string& a2) {
  std::ostringstream os;
  os << "(" << p1 << "," << q1 << "," << a1 << ") (x) (" << p2 << "," << q2 << "," << a2 << ")";
  return os.str();
}

// Criterion 1: the algebraic classification and the circle-composition oracle
// agree on every canonical coprime pair with |p|, |q| <= 5 over six symbolic
// offsets per side, hitting all three branches (both windings nonzero, mixed,
// both zero).
Outcome criterion_oracle_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto classes = canonical_classes(5);
  const auto alphas = alpha_samples();
  long long checked = 0, both_nonzero = 0, mixed = 0, both_zero = 0;
  for (const auto& [p1, q1] : classes)
    for (const auto& [p2, q2] : classes)
      for (const auto& [n1, al1] : alphas)
        for (const auto& [n2, al2] : alphas) {
          AgreementReport rep =
              oracle_compare(ModuleClass{p1, q1, al1}, ModuleClass{p2, q2, al2});
          ++checked;
          if (p1 != 0 && p2 != 0) ++both_nonzero;
          else if (p1 == 0 && p2 == 0) ++both_zero;
          else ++mixed;
          if (!rep.agree) {
            std::string w = rep.witnesses.empty() ? "(no witness)" : rep.witnesses.front();
            return {false, "disagreement at " + pair_str(p1, q1, n1, p2, q2, n2) + ": " + w};
          }
        }
  const double sec = elapsed_sec(t0);
  std::ostringstream os;
  os << checked << " pairs agree (" << both_nonzero << " both-winding, " << mixed << " mixed, "
     << both_zero << " both-horizontal) in " << sec << "s";
  if (both_nonzero == 0 || mixed == 0 || both_zero == 0)
    return {false, "branch coverage hole: " + os.str()};
  if (sec > kOracleSweepLimitSec)
    return {false, os.str() + ", over the " + std::to_string(kOracleSweepLimitSec) + "s limit"};
  os << " (limit " << kOracleSweepLimitSec << "s)";
  return {true, os.str()};
}

// Criterion 2: four pinned spot products, exact in every field.
Outcome criterion_spot_products() {
  const Angle a1 = Angle::param1(Rat(1));
  const Angle a2 = Angle::param2(Rat(1));
  std::ostringstream bad;

  TensorClassification t = tensor_classify({2, 1, a1}, {3, 1, a2});
  if (t.multiplicity != 1 || t.cls.p != 6 || t.cls.q != 5 ||
      t.cls.alpha != Angle(Rat(0), Rat(0), Rat(0), Rat(3), Rat(2)) || !t.primitive)
    bad << "[(2,1,a1)(3,1,a2) gave mult " << t.multiplicity << " class (" << t.cls.p << ","
        << t.cls.q << "," << angle_str(t.cls.alpha) << ")] ";

  t = tensor_classify({2, 1, a1}, {2, 1, a2});
  if (t.multiplicity != 2 || t.cls.p != 2 || t.cls.q != 2 ||
      t.cls.alpha != Angle(Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)) || t.primitive)
    bad << "[(2,1,a1)(2,1,a2) gave mult " << t.multiplicity << " class (" << t.cls.p << ","
        << t.cls.q << "," << angle_str(t.cls.alpha) << ")] ";

  t = tensor_classify({0, 1, a1}, {0, 1, a1 + Angle::lam(Rat(1))});
  if (t.multiplicity != 1 || t.cls.p != 0 || t.cls.q != 1 || t.cls.alpha != a1)
    bad << "[(0,1,a)(0,1,a+lam) gave mult " << t.multiplicity << " class (" << t.cls.p << ","
        << t.cls.q << "," << angle_str(t.cls.alpha) << ")] ";

  t = tensor_classify({0, 1, Angle{}}, {0, 1, Angle::two_pi(Rat(1, 3))});
  if (t.multiplicity != 0)
    bad << "[(0,1,0)(0,1,2pi/3) gave mult " << t.multiplicity << ", expected 0] ";

  if (!bad.str().empty()) return {false, bad.str()};
  return {true, "1*T^{3a1+2a2}_{6,5}; 2*T^{a1+a2}_{2,2}; T^{a1}_{0,1}; 0 - all exact"};
}

// Criterion 3: on every output of the nonzero-winding branch (both factors
// have p != 0, so both quotients exist), q/p = q1/p1 + q2/p2 holds as exact
// rationals and alpha/p = alpha1/p1 + alpha2/p2 holds as offsets, i.e. up to
// the 2pi ambiguity the class representative is reduced by.
Outcome criterion_slope_additivity() {
  const auto classes = canonical_classes(5);
  const auto alphas = alpha_samples();
  const std::vector<Angle> two_pi_lattice = {Angle::two_pi(Rat(1))};
  long long checked = 0;
  for (const auto& [p1, q1] : classes) {
    if (p1 == 0) continue;
    for (const auto& [p2, q2] : classes) {
      if (p2 == 0) continue;
      for (const auto& [n1, al1] : alphas)
        for (const auto& [n2, al2] : alphas) {
          TensorClassification t = tensor_classify({p1, q1, al1}, {p2, q2, al2});
          ++checked;
          if (t.multiplicity <= 0 || t.cls.p == 0)
            return {false, "nonzero-winding branch lost its winding at " +
                               pair_str(p1, q1, n1, p2, q2, n2)};
          const Rat slope_sum = Rat(q1, p1) + Rat(q2, p2);
          if (Rat(t.cls.q, t.cls.p) != slope_sum)
            return {false, "slope identity fails at " + pair_str(p1, q1, n1, p2, q2, n2) +
                               ": q/p = " + std::to_string(t.cls.q) + "/" +
                               std::to_string(t.cls.p)};
          const Angle offset_sum = Rat(1, p1) * al1 + Rat(1, p2) * al2;
          if (!angle_congruent(Rat(t.cls.p) * offset_sum, t.cls.alpha, two_pi_lattice))
            return {false, "offset identity fails at " + pair_str(p1, q1, n1, p2, q2, n2) +
                               ": alpha = " + angle_str(t.cls.alpha)};
        }
    }
  }
  std::ostringstream os;
  os << "q/p and alpha/p additive on all " << checked << " nonzero-winding outputs";
  return {true, os.str()};
}

// Criterion 4: hopfish reduction of the two stacky-group families, n = 2..6.
// Trivial-groupoid Z_n: tensoring point modules adds the points. One-object
// Z_n: coassociativity and counitality hold, and the stated character law
// chi_a (x) chi_b ~ chi_{a+b} is asserted literally for every pair.
Outcome criterion_hopfish_reduction() {
  const auto t0 = std::chrono::steady_clock::now();
  long long point_ok = 0, point_total = 0, char_ok = 0, char_total = 0;
  std::string first_witness;
  bool structure_ok = true;
  std::ostringstream structure_bad;

  for (int n = 2; n <= 6; ++n) {
    StackyFamily tf = make_trivial_group_family(GroupSpec::cyclic(n));
    HopfishData th = hopfish_from_stacky_group(tf.g, tf.em, tf.ee, tf.einv);
    if (!check_coassoc(th) || !check_counit(th)) {
      structure_ok = false;
      structure_bad << "[trivial:" << n << " coassoc/counit] ";
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Bimodule prod = module_tensor(point_module(tf.g, x), point_module(tf.g, y), th);
        Bimodule expected = point_module(tf.g, (x + y) % n);
        ++point_total;
        if (bimodule_iso(prod, expected).status == IntertwinerResult::Status::Found)
          ++point_ok;
        else if (first_witness.empty()) {
          std::ostringstream w;
          w << "trivial:" << n << " point " << x << " (x) point " << y << " is not point "
            << (x + y) % n << " (tensor dim " << prod.dim << ")";
          first_witness = w.str();
        }
      }

    StackyFamily of = make_one_object_family(GroupSpec::cyclic(n));
    HopfishData oh = hopfish_from_stacky_group(of.g, of.em, of.ee, of.einv);
    if (!check_coassoc(oh) || !check_counit(oh)) {
      structure_ok = false;
      structure_bad << "[one-object:" << n << " coassoc/counit] ";
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Bimodule prod = module_tensor(character_module(of.g, a), character_module(of.g, b), oh);
        Bimodule expected = character_module(of.g, (a + b) % n);
        ++char_total;
        if (bimodule_iso(prod, expected).status == IntertwinerResult::Status::Found)
          ++char_ok;
        else if (first_witness.empty()) {
          std::ostringstream w;
          w << "one-object:" << n << " chi_" << a << " (x) chi_" << b
            << " is not isomorphic to chi_" << (a + b) % n << " (tensor dim " << prod.dim
            << "): the exchange relations collapse chi_a (x) chi_b unless a = b";
          first_witness = w.str();
        }
      }
  }

  const double sec = elapsed_sec(t0);
  std::ostringstream os;
  os << "point modules " << point_ok << "/" << point_total << ", characters " << char_ok << "/"
     << char_total << ", coassoc+counit " << (structure_ok ? "ok" : structure_bad.str())
     << " in " << sec << "s (limit " << kHopfishLimitSec << "s)";
  const bool pass = structure_ok && point_ok == point_total && char_ok == char_total &&
                    sec <= kHopfishLimitSec;
  if (!pass && !first_witness.empty()) os << "; first failure: " << first_witness;
  return {pass, os.str()};
}

// ---- seeded generators for criteria 5, 6, 9 ----

std::vector<int> seeded_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<int>(rng() % (i + 1))]);
  return p;
}

// Functor between trivial groupoids: an arbitrary object map.
GroupoidFunctor trivial_functor(const GroupoidPtr& a, const GroupoidPtr& b,
                                const std::vector<int>& omap) {
  GroupoidFunctor f;
  f.from = a;
  f.to = b;
  f.obj_map = omap;
  f.arrow_map.resize(a->num_arrows());
  for (int x = 0; x < a->num_objects; ++x) f.arrow_map[a->unit[x]] = b->unit[omap[x]];
  return f;
}

// Z_m -> Z_k sending the generator to c; a homomorphism iff k | c*m.
GroupoidFunctor cyclic_hom(const GroupoidPtr& zm, const GroupoidPtr& zk, int c) {
  GroupoidFunctor f;
  f.from = zm;
  f.to = zk;
  f.obj_map = {0};
  const int m = zm->num_arrows(), k = zk->num_arrows();
  (void)m;
  for (int a = 0; a < zm->num_arrows(); ++a) f.arrow_map.push_back((a * c) % k);
  return f;
}

// Functor between pair groupoids induced by any object map.
GroupoidFunctor pair_functor(const GroupoidPtr& a, const GroupoidPtr& b,
                             const std::vector<int>& omap) {
  auto arrow_of = [](const GroupoidPtr& g, int to, int from) {
    for (int k = 0; k < g->num_arrows(); ++k)
      if (g->l[k] == to && g->r[k] == from) return k;
    return -1;
  };
  GroupoidFunctor f;
  f.from = a;
  f.to = b;
  f.obj_map = omap;
  f.arrow_map.resize(a->num_arrows());
  for (int k = 0; k < a->num_arrows(); ++k)
    f.arrow_map[k] = arrow_of(b, omap[a->l[k]], omap[a->r[k]]);
  return f;
}

// Everything to the unit at one object of the target.
GroupoidFunctor constant_functor(const GroupoidPtr& a, const GroupoidPtr& b, int obj) {
  GroupoidFunctor f;
  f.from = a;
  f.to = b;
  f.obj_map.assign(a->num_objects, obj);
  f.arrow_map.assign(a->num_arrows(), b->unit[obj]);
  return f;
}

std::vector<int> seeded_obj_map(int from_n, int to_n, std::mt19937_64& rng) {
  std::vector<int> m(from_n);
  for (int& v : m) v = static_cast<int>(rng() % to_n);
  return m;
}

// A seeded composable chain G0 -> G1 -> G2 of functors between groupoids with
// at most 8 arrows each, mixing trivial, one-object cyclic, pair, and
// constant-map cases.
std::pair<GroupoidFunctor, GroupoidFunctor> seeded_chain(std::mt19937_64& rng) {
  switch (rng() % 5) {
    case 0: {
      const int n0 = 2 + static_cast<int>(rng() % 4), n1 = 2 + static_cast<int>(rng() % 4),
                n2 = 2 + static_cast<int>(rng() % 4);
      auto g0 = trivial_groupoid(n0), g1 = trivial_groupoid(n1), g2 = trivial_groupoid(n2);
      return {trivial_functor(g0, g1, seeded_obj_map(n0, n1, rng)),
              trivial_functor(g1, g2, seeded_obj_map(n1, n2, rng))};
    }
    case 1: {
      static const int sizes[] = {2, 3, 4, 6, 8};
      const int m = sizes[rng() % 5], k = sizes[rng() % 5], j = sizes[rng() % 5];
      auto zm = group_as_groupoid(GroupSpec::cyclic(m));
      auto zk = group_as_groupoid(GroupSpec::cyclic(k));
      auto zj = group_as_groupoid(GroupSpec::cyclic(j));
      std::vector<int> c1s, c2s;
      for (int c = 0; c < k; ++c)
        if (c * m % k == 0) c1s.push_back(c);
      for (int c = 0; c < j; ++c)
        if (c * k % j == 0) c2s.push_back(c);
      return {cyclic_hom(zm, zk, c1s[rng() % c1s.size()]),
              cyclic_hom(zk, zj, c2s[rng() % c2s.size()])};
    }
    case 2: {
      auto g0 = pair_groupoid(2), g1 = pair_groupoid(2), g2 = pair_groupoid(2);
      return {pair_functor(g0, g1, seeded_obj_map(2, 2, rng)),
              pair_functor(g1, g2, seeded_obj_map(2, 2, rng))};
    }
    case 3: {
      const int n = 2 + static_cast<int>(rng() % 2), k = 2 + static_cast<int>(rng() % 3);
      const int j = k; // identity-shaped second leg keeps the chain composable
      auto g0 = trivial_groupoid(n);
      auto zk = group_as_groupoid(GroupSpec::cyclic(k));
      auto zj = group_as_groupoid(GroupSpec::cyclic(j));
      std::vector<int> cs;
      for (int c = 0; c < j; ++c)
        if (c * k % j == 0) cs.push_back(c);
      return {constant_functor(g0, zk, 0), cyclic_hom(zk, zj, cs[rng() % cs.size()])};
    }
    default: {
      const int m = 2 + static_cast<int>(rng() % 3), n = 2 + static_cast<int>(rng() % 4),
                n2 = 2 + static_cast<int>(rng() % 4);
      auto zm = group_as_groupoid(GroupSpec::cyclic(m));
      auto g1 = trivial_groupoid(n), g2 = trivial_groupoid(n2);
      return {constant_functor(zm, g1, static_cast<int>(rng() % n)),
              trivial_functor(g1, g2, seeded_obj_map(n, n2, rng))};
    }
  }
}

// Criterion 5: the convolution functor is monoidal on 50 seeded right
// principal pairs: the bimodule of a composite bibundle is isomorphic to the
// tensor of the factor bimodules, with an explicit intertwiner each time.
Outcome criterion_functoriality() {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    auto [f1, f2] = seeded_chain(rng);
    Bibundle m = bibundle_from_functor(f1);
    Bibundle n = bibundle_from_functor(f2);
    m = permute_carrier(m, seeded_perm(m.carrier, rng));
    n = permute_carrier(n, seeded_perm(n.carrier, rng));
    std::ostringstream id;
    id << "trial " << trial << " (" << m.left->num_arrows() << "->" << m.right->num_arrows()
       << "->" << n.right->num_arrows() << " arrows)";
    if (!is_right_principal(m) || !is_right_principal(n))
      return {false, id.str() + ": generator produced a non-principal bibundle"};
    Bimodule composite = bimodule_from_bibundle(compose_bibundles(m, n));
    Bimodule tensored = tensor_bimodules(bimodule_from_bibundle(m), bimodule_from_bibundle(n));
    IntertwinerResult iso = bimodule_iso(composite, tensored);
    if (iso.status != IntertwinerResult::Status::Found)
      return {false, id.str() + ": no invertible intertwiner (dims " +
                         std::to_string(composite.dim) + " vs " + std::to_string(tensored.dim) +
                         (iso.note.empty() ? "" : ", " + iso.note) + ")"};
  }
  return {true, "composite bibundle ~ tensored bimodules with explicit intertwiner, 50/50"};
}

// Criterion 6: the stacky-group checker accepts both verified families and
// rejects, with a concrete witness, ten seeded single-entry corruptions of
// the multiplication bibundle.
Outcome criterion_stacky_check() {
  for (int n = 2; n <= 6; ++n) {
    StackyFamily f = make_trivial_group_family(GroupSpec::cyclic(n));
    StackyReport rep = stacky_group_check(f.g, f.em, f.ee, f.einv);
    if (!rep.all_pass()) return {false, "trivial:" + std::to_string(n) + ": " + rep.summary()};
  }
  const std::pair<int, int> quotients[] = {{4, 2}, {6, 2}, {6, 3}, {8, 4}};
  for (auto [nt, so] : quotients) {
    StackyFamily f = make_cyclic_quotient_family(nt, so);
    StackyReport rep = stacky_group_check(f.g, f.em, f.ee, f.einv);
    if (!rep.all_pass())
      return {false, "cyclic-quotient:" + std::to_string(nt) + ":" + std::to_string(so) + ": " +
                         rep.summary()};
  }

  std::mt19937_64 rng(606);
  int rejected = 0;
  for (int trial = 0; trial < 10; ++trial) {
    StackyFamily f = trial % 2 == 0 ? make_trivial_group_family(GroupSpec::cyclic(4))
                                    : make_cyclic_quotient_family(4, 2);
    Bibundle em = f.em;
    // Deterministic single-entry corruption: bump one right-action value.
    std::vector<uint64_t> keys;
    keys.reserve(em.act_r.size());
    for (const auto& [k, v] : em.act_r) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    const uint64_t key = keys[rng() % keys.size()];
    em.act_r[key] = (em.act_r[key] + 1) % em.carrier;
    StackyReport rep = stacky_group_check(f.g, em, f.ee, f.einv);
    if (rep.all_pass())
      return {false, "mutation trial " + std::to_string(trial) + " slipped through"};
    bool witnessed = false;
    for (const auto& row : rep.rows)
      if (!row.passed && !row.witness.empty()) witnessed = true;
    if (!witnessed)
      return {false, "mutation trial " + std::to_string(trial) + " rejected without a witness"};
    ++rejected;
  }
  std::ostringstream os;
  os << "5 trivial + 4 quotient families pass; " << rejected
     << "/10 single-entry corruptions rejected with witnesses";
  return {true, os.str()};
}

// Criterion 7: the one-object Z_2 groupoid and the two-point trivial groupoid
// have isomorphic convolution algebras (commutative, dimension 2, matching
// structure constants under delta_e -> u0 + u1, delta_g -> u0 - u1), yet the
// Morita refuter separates them by their isotropy classes.
Outcome criterion_morita_refutation() {
  auto bz2 = group_as_groupoid(GroupSpec::cyclic(2));
  auto two = trivial_groupoid(2);

  auto obstruction = morita_refute(bz2, two);
  if (!obstruction) return {false, "no obstruction reported"};
  if (obstruction->kind != "isotropy-classes")
    return {false, "obstruction kind '" + obstruction->kind + "', expected isotropy-classes"};

  if (bz2->num_arrows() != 2 || two->num_arrows() != 2)
    return {false, "algebras are not both dimension 2"};
  // phi(delta_arrow i) = images[i], the 2x2 change of basis [[1,1],[1,-1]].
  std::vector<AlgebraElement> images = {
      add(delta_element(two, 0), delta_element(two, 1)),
      add(delta_element(two, 0), scale(Scalar(-1), delta_element(two, 1)))};
  auto phi = [&](const AlgebraElement& x) {
    AlgebraElement out = algebra_zero(two);
    for (const auto& [arrow, c] : x.coeffs) out = add(out, scale(c, images[arrow]));
    return out;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      AlgebraElement a = delta_element(bz2, i), b = delta_element(bz2, j);
      if (!elem_eq(convolve(a, b), convolve(b, a)))
        return {false, "source algebra is not commutative"};
      AlgebraElement ta = delta_element(two, i), tb = delta_element(two, j);
      if (!elem_eq(convolve(ta, tb), convolve(tb, ta)))
        return {false, "target algebra is not commutative"};
      if (!elem_eq(phi(convolve(a, b)), convolve(phi(a), phi(b))))
        return {false, "structure constants differ at delta_" + std::to_string(i) + " * delta_" +
                           std::to_string(j)};
    }
  if (!elem_eq(phi(unit_element(bz2)), unit_element(two)))
    return {false, "the change of basis does not preserve the unit"};
  // det [[1,1],[1,-1]] = -2, so phi is invertible over the scalar field.
  return {true, "algebras isomorphic (dim 2, commutative, unit and structure constants match; "
                "det -2), yet obstructed: " +
                    obstruction->detail};
}

// Criterion 8: zig-zag duality for the standard and 20 seeded forms in
// dimensions 2, 4, 6, and closure of lagrangian relations under composition
// in 100 seeded cases.
Outcome criterion_zigzag() {
  for (int dim : {2, 4, 6}) {
    ZigZagReport rep = check_zigzag(standard_symp(dim));
    if (!rep.all_pass()) return {false, "standard form dim " + std::to_string(dim) + ": " +
                                            rep.summary()};
  }
  for (int k = 0; k < 20; ++k) {
    const int dim = 2 + 2 * (k % 3);
    ZigZagReport rep = check_zigzag(random_symp(dim, 9000 + k));
    if (!rep.all_pass())
      return {false, "seeded form " + std::to_string(k) + " (dim " + std::to_string(dim) +
                         "): " + rep.summary()};
  }
  for (int k = 0; k < 100; ++k) {
    SympSpace a = random_symp(2 + 2 * (k % 3), 7000 + k);
    SympSpace b = random_symp(2 + 2 * ((k + 1) % 3), 7100 + k);
    SympSpace c = random_symp(2 + 2 * ((k + 2) % 3), 7200 + k);
    LinRelation f = random_lagrangian_relation(a, b, 7300 + k);
    LinRelation g = random_lagrangian_relation(b, c, 7400 + k);
    if (!is_lagrangian(compose_rel(f, g)))
      return {false, "composite of seeded lagrangians " + std::to_string(k) +
                         " is not lagrangian"};
  }
  return {true, "3 standard + 20 seeded snakes pass; 100 seeded lagrangian composites stay "
                "lagrangian"};
}

Scalar seeded_scalar(std::mt19937_64& rng) {
  const int re = static_cast<int>(rng() % 5) - 2;
  const int im = static_cast<int>(rng() % 5) - 2;
  const int lam_num = static_cast<int>(rng() % 3) - 1;
  return Scalar::term(GaussRat(Rat(re), Rat(im)), Angle::lam(Rat(lam_num)));
}

AlgebraElement seeded_element(const GroupoidPtr& g, std::mt19937_64& rng) {
  AlgebraElement e = algebra_zero(g);
  for (int pick = 0; pick < 3; ++pick)
    e = add(e, delta_element(g, static_cast<int>(rng() % g->num_arrows()), seeded_scalar(rng)));
  return e;
}

NCTElement seeded_nct(std::mt19937_64& rng) {
  NCTElement e;
  for (int pick = 0; pick < 3; ++pick) {
    const int n = static_cast<int>(rng() % 7) - 3, l = static_cast<int>(rng() % 7) - 3;
    e = nct_add(e, nct_basis(n, l, seeded_scalar(rng)));
  }
  return e;
}

// Criterion 9: algebra laws. Convolution associativity and star
// anti-multiplicativity on 100 seeded elements spread over 10 seeded
// groupoids; rotation-algebra associativity on 100 seeded triples; and the
// symbolic product rule a_{n1,l1} a_{n2,l2} = e^{i lam n1 l2} a_{n1+n2,l1+l2}.
Outcome criterion_algebra_laws() {
  std::mt19937_64 rng(909);
  std::vector<GroupoidPtr> zoo;
  GroupAction swap_act;
  swap_act.group = GroupSpec::cyclic(2);
  swap_act.carrier = 3;
  swap_act.act = {{0, 1, 2}, {1, 0, 2}};
  for (int t = 0; t < 10; ++t) {
    switch (rng() % 4) {
      case 0: zoo.push_back(trivial_groupoid(2 + static_cast<int>(rng() % 3))); break;
      case 1: zoo.push_back(pair_groupoid(2)); break;
      case 2: zoo.push_back(group_as_groupoid(GroupSpec::cyclic(2 + static_cast<int>(rng() % 5)))); break;
      default: zoo.push_back(action_groupoid(swap_act)); break;
    }
  }
  long long conv_checked = 0;
  for (const auto& g : zoo)
    for (int rep = 0; rep < 10; ++rep) {
      AlgebraElement a = seeded_element(g, rng), b = seeded_element(g, rng),
                     c = seeded_element(g, rng);
      ++conv_checked;
      if (!elem_eq(convolve(convolve(a, b), c), convolve(a, convolve(b, c))))
        return {false, "convolution associativity fails on groupoid with " +
                           std::to_string(g->num_arrows()) + " arrows"};
      if (!elem_eq(star(convolve(a, b)), convolve(star(b), star(a))))
        return {false, "star anti-multiplicativity fails on groupoid with " +
                           std::to_string(g->num_arrows()) + " arrows"};
    }

  for (int k = 0; k < 100; ++k) {
    NCTElement a = seeded_nct(rng), b = seeded_nct(rng), c = seeded_nct(rng);
    if (!nct_eq(nct_mul(nct_mul(a, b), c), nct_mul(a, nct_mul(b, c))))
      return {false, "rotation-algebra associativity fails at seeded triple " +
                         std::to_string(k)};
  }
  for (int n1 = -2; n1 <= 2; ++n1)
    for (int l1 = -2; l1 <= 2; ++l1)
      for (int n2 = -2; n2 <= 2; ++n2)
        for (int l2 = -2; l2 <= 2; ++l2) {
          NCTElement lhs = nct_mul(nct_basis(n1, l1), nct_basis(n2, l2));
          NCTElement rhs = nct_basis(n1 + n2, l1 + l2,
                                     Scalar::unit_phase(Angle::lam(Rat(n1) * Rat(l2))));
          if (!nct_eq(lhs, rhs)) {
            std::ostringstream os;
            os << "product rule fails at a_{" << n1 << "," << l1 << "} a_{" << n2 << "," << l2
               << "}";
            return {false, os.str()};
          }
        }
  std::ostringstream os;
  os << conv_checked << " convolution triples (assoc + star) over " << zoo.size()
     << " groupoids; 100 rotation-algebra triples; 625 symbolic product-rule cases";
  return {true, os.str()};
}

} // namespace

int main() {
  struct Row {
    const char* name;
    Outcome (*run)();
  };
  const Row rows[] = {
      {"classification vs geometric oracle", criterion_oracle_agreement},
      {"pinned spot products", criterion_spot_products},
      {"slope and offset additivity", criterion_slope_additivity},
      {"hopfish reduction of stacky groups", criterion_hopfish_reduction},
      {"convolution functor is monoidal", criterion_functoriality},
      {"stacky group checker accepts/rejects", criterion_stacky_check},
      {"morita refutation beats algebra iso", criterion_morita_refutation},
      {"zig-zag duality and lagrangian closure", criterion_zigzag},
      {"algebra laws and product rule", criterion_algebra_laws},
  };
  int failures = 0;
  for (size_t i = 0; i < std::size(rows); ++i) {
    Outcome out;
    try {
      out = rows[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] criterion %zu: %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, rows[i].name,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", std::size(rows) - failures,
              std::size(rows));
  return failures;
}
