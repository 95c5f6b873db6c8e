#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplike/budget.hpp"
#include "grouplike/groupoid.hpp"

namespace grouplike {

/* A bibundle G -> M <- H: a finite carrier with commuting partial actions.
 * act_l(g, m) is defined iff r(g) = lm(m) and moves the left moment to l(g);
 * act_r(m, h) is defined iff l(h) = rm(m) and moves the right moment to r(h).
 * With this convention both actions of identity_bibundle are composition.
 * Orientation: a right principal G-H bibundle plays the role of a morphism
 * G -> H; every report that serializes one states this convention. */
struct Bibundle {
  GroupoidPtr left;   // G
  GroupoidPtr right;  // H
  int carrier = 0;
  std::vector<int> lm, rm;                  // carrier -> G0 / H0
  std::unordered_map<uint64_t, int> act_l;  // key pair_key(g, m)
  std::unordered_map<uint64_t, int> act_r;  // key pair_key(m, h)
  std::vector<std::string> labels;

  std::optional<int> left_act(int g, int m) const {
    auto it = act_l.find(pair_key(g, m));
    if (it == act_l.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> right_act(int m, int h) const {
    auto it = act_r.find(pair_key(m, h));
    if (it == act_r.end()) return std::nullopt;
    return it->second;
  }
  std::string label(int m) const;
};

inline constexpr const char* kOrientationConvention =
    "right principal G-H bibundle = morphism G -> H";

ValidationReport validate(const Bibundle& b);

struct PrincipalityResult {
  bool ok = false;
  std::string witness;  // empty when ok
  explicit operator bool() const { return ok; }
};

// lm surjective and the right H-action free and transitive on lm-fibers
// (exactly one h with m.h = m' for every fiber pair).
PrincipalityResult is_right_principal(const Bibundle& b);
// Mirror image: rm surjective, left action free and transitive on rm-fibers.
PrincipalityResult is_left_principal(const Bibundle& b);

// Carrier G1, both actions by composition.
Bibundle identity_bibundle(const GroupoidPtr& g);

// Graph construction: carrier {(x, h) : x in G0, l(h) = f(x)}, always right
// principal. Throws NotAFunctor.
Bibundle bibundle_from_functor(const GroupoidFunctor& f);

// (M x_{H0} N)/H with (m,n).h = (m.h, h^{-1}.n). Throws MiddleMismatch when
// the middle groupoids differ and NotPrincipal when M is not right principal.
Bibundle compose_bibundles(const Bibundle& m, const Bibundle& n);

// Componentwise product, a (GxG')-(HxH') bibundle on carrier M x N.
Bibundle product_bibundle(const Bibundle& m, const Bibundle& n);

// Transport along a bijective functor iso: G' -> G onto the left leg.
Bibundle relabel_left(const Bibundle& m, const GroupoidFunctor& iso);

// Carrier permutation (perm[old] = new); same bibundle up to 2-isomorphism.
Bibundle permute_carrier(const Bibundle& m, const std::vector<int>& perm);

// Two disjoint copies over the same groupoids; never right principal when the
// summands are nonempty (no arrow crosses the copies).
Bibundle disjoint_union(const Bibundle& m, const Bibundle& n);

struct BiequivariantMap {
  std::vector<int> map;  // source carrier -> target carrier bijection
};

// Checks moment preservation, equivariance on both sides, and bijectivity.
ValidationReport check_biequivariant(const Bibundle& m, const Bibundle& n,
                                     const std::vector<int>& map);

// Exact backtracking over moment fibers with orbit propagation; deterministic
// (first bijection in the fixed order). Throws BudgetExceeded past the
// carrier cap or the node budget.
std::optional<BiequivariantMap> find_biequivariant_iso(const Bibundle& m, const Bibundle& n,
                                                       const Budget& budget = Budget::from_env());

struct Obstruction {
  std::string kind;  // "orbit-count" or "isotropy-classes"
  std::string detail;
};

// Morita invariants only: orbit count, then the multiset of isotropy
// isomorphism classes over orbits. No obstruction is not a proof of
// equivalence.
std::optional<Obstruction> morita_refute(const GroupoidPtr& g, const GroupoidPtr& h);

// True iff m is a biprincipal G-H bibundle. Throws InvalidBibundle.
bool morita_verify(const GroupoidPtr& g, const GroupoidPtr& h, const Bibundle& m);

struct StackyRow {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct StackyReport {
  std::vector<StackyRow> rows;
  std::string convention = kOrientationConvention;
  bool all_pass() const;
  std::string summary() const;
};

/* Group-like structure on the stack presented by g: multiplication em as a
 * (GxG)-G bibundle, unit ee as a 1-G bibundle, inversion einv as a G-G
 * bibundle. Checks validity and right principality of all three, then the
 * associativity, unit and inversion diagrams, each decided by biequivariant
 * iso search. Diagram rows are skipped (reported failed) when a precondition
 * row fails. Throws MiddleMismatch when the bibundle endpoints do not have
 * the required shapes. */
StackyReport stacky_group_check(const GroupoidPtr& g, const Bibundle& em, const Bibundle& ee,
                                const Bibundle& einv, const Budget& budget = Budget::from_env());

} // namespace grouplike
