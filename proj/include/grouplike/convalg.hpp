#pragma once

#include <map>
#include <string>
#include <vector>

#include "grouplike/bibundle.hpp"
#include "grouplike/budget.hpp"
#include "grouplike/scalar.hpp"

namespace grouplike {

/* Elements of the groupoid convolution algebra: finitely supported scalar
 * functions on arrows with (a * b)(g) = sum over l(h) = l(g) of
 * a(h) b(h^{-1} g), equivalently delta_g * delta_h = delta_{gh} when
 * r(g) = l(h), else 0. */
struct AlgebraElement {
  GroupoidPtr gpd;
  std::map<int, Scalar> coeffs; // arrow -> coefficient, no zero entries

  bool is_zero() const { return coeffs.empty(); }
  std::string str() const;
};

bool same_algebra(const GroupoidPtr& a, const GroupoidPtr& b);

AlgebraElement algebra_zero(const GroupoidPtr& g);
AlgebraElement delta_element(const GroupoidPtr& g, int arrow, const Scalar& c = Scalar(1));
// Sum of delta_{unit(x)} over objects, the algebra unit.
AlgebraElement unit_element(const GroupoidPtr& g);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Scalar& c, const AlgebraElement& a);
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);
// a*(g) = conj(a(g^{-1})), a conjugate-linear anti-automorphism.
AlgebraElement star(const AlgebraElement& a);
bool elem_eq(const AlgebraElement& a, const AlgebraElement& b);

// One column of a sparse operator: list of (row, coefficient).
using SparseCol = std::vector<std::pair<int, Scalar>>;

/* A finite-rank (A(G), A(H))-bimodule given by the actions of delta basis
 * elements: act_left[g] and act_right[h] map each basis column to a sparse
 * column of the image. */
struct Bimodule {
  GroupoidPtr left_alg, right_alg;
  int dim = 0;
  std::vector<std::vector<SparseCol>> act_left;  // [arrow of G][col]
  std::vector<std::vector<SparseCol>> act_right; // [arrow of H][col]
  std::vector<std::string> basis_labels;         // optional

  std::string label(int i) const;
};

// Checks the bimodule axioms on the delta generators: unit sums act as the
// identity, left action is multiplicative, right action is op-multiplicative,
// and the two actions commute.
ValidationReport check_bimodule(const Bimodule& b);

// delta_g . delta_m . delta_h = delta_{g.m.h} where the actions are defined.
// Throws InvalidBibundle when the bibundle does not validate.
Bimodule bimodule_from_bibundle(const Bibundle& m);

// A(G) as an (A(G), A(G))-bimodule by left and right convolution.
Bimodule regular_bimodule(const GroupoidPtr& g);

// (A(G) (x) A(G'), A(H) (x) A(H'))-bimodule on the tensor basis, with the
// product groupoids standing in for the tensor algebras.
Bimodule external_tensor(const Bimodule& p, const Bimodule& q);

/* P (x)_B Q: quotient of the tensor basis by p.b (x) q - p (x) b.q for every
 * arrow b of B and the induced outer actions. Exact elimination over scalar
 * fractions; entries of the induced actions must come out whole (they do
 * whenever the input actions are monomial, which covers every bimodule built
 * here). Throws MiddleMismatch when the middle algebras differ. */
Bimodule tensor_bimodules(const Bimodule& p, const Bimodule& q,
                          const Budget& budget = Budget::from_env());

struct IntertwinerResult {
  enum class Status { Found, None, Undecided };
  Status status = Status::Undecided;
  // target.dim x source.dim invertible intertwiner when status == Found.
  std::vector<std::vector<Scalar>> matrix;
  int hom_dim = 0;
  std::string note;
};

/* Searches for an invertible bimodule intertwiner p -> q: solves the exact
 * equivariance system, then tries basis vectors, their sum, seeded random
 * small combinations, and small exhaustive combinations before giving up
 * with Undecided. Deterministic for fixed inputs. */
IntertwinerResult bimodule_iso(const Bimodule& p, const Bimodule& q,
                               const Budget& budget = Budget::from_env());

/* Hopfish structure carried by a stacky group presentation: delta and
 * epsilon are the bimodules of the multiplication and unit bibundles, the
 * antipode is the inversion bimodule with its right action twisted through
 * star. Construction refuses (AxiomsFailed) unless the stacky group axioms
 * hold. */
struct HopfishData {
  GroupoidPtr algebra;
  Bimodule delta;    // (A (x) A, A)
  Bimodule epsilon;  // (A(point), A)
  Bimodule antipode; // (A, A)
};

HopfishData hopfish_from_stacky_group(const GroupoidPtr& g, const Bibundle& em,
                                      const Bibundle& ee, const Bibundle& einv,
                                      const Budget& budget = Budget::from_env());

// (Delta (x) id) . Delta ~ (id (x) Delta) . Delta as bimodules.
bool check_coassoc(const HopfishData& h, const Budget& budget = Budget::from_env());
// (epsilon (x) id) . Delta ~ id ~ (id (x) epsilon) . Delta.
bool check_counit(const HopfishData& h, const Budget& budget = Budget::from_env());

// Tensor product of right modules over the hopfish structure:
// (T (x) T') (x)_{A (x) A} Delta, again a right A-module.
Bimodule module_tensor(const Bimodule& t1, const Bimodule& t2, const HopfishData& h,
                       const Budget& budget = Budget::from_env());

// Right module over the trivial groupoid algebra supported at object x.
Bimodule point_module(const GroupoidPtr& trivial_g, int x);
// One-dimensional right module over a cyclic group algebra where the group
// generator arrow acts by e^{2 pi i p/n}.
Bimodule character_module(const GroupoidPtr& one_object_g, int p);

} // namespace grouplike
