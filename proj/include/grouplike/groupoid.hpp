#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplike/errors.hpp"

namespace grouplike {

// Pack a pair of small nonnegative ids into one hash key.
inline uint64_t pair_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

struct Violation {
  std::string axiom;   // which law failed
  std::string witness; // the concrete offending ids
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

/* A finite group in multiplication-table form. Used for isotropy groups and
 * as the template for action groupoids. */
struct GroupSpec {
  int n = 0;
  std::vector<std::vector<int>> mul; // n x n
  int id = 0;
  std::vector<int> inv;
  std::vector<std::string> labels; // optional, size n

  static GroupSpec cyclic(int n);
  std::string label(int g) const;
};

ValidationReport validate(const GroupSpec& g);

// Isomorphism-of-groups search (exhaustive with pruning; fine for the small
// groups that appear as isotropy). Returns an element bijection or nullopt.
std::optional<std::vector<int>> group_iso(const GroupSpec& a, const GroupSpec& b);

/* A finite groupoid with arrows g : r(g) -> l(g) and composition comp(g, h)
 * defined exactly when r(g) = l(h); then l(gh) = l(g) and r(gh) = r(h).
 * Objects and arrows are dense integer ids; the composition table is sparse
 * (keyed by composable pairs). */
struct FiniteGroupoid {
  int num_objects = 0;
  std::vector<int> l, r;  // arrow -> object
  std::vector<int> unit;  // object -> arrow
  std::vector<int> inv;   // arrow -> arrow
  std::unordered_map<uint64_t, int> comp;
  std::vector<std::string> object_labels, arrow_labels; // optional

  // Fibers of l and r, rebuilt by finalize() after the tables change.
  std::vector<std::vector<int>> arrows_by_l, arrows_by_r;

  int num_arrows() const { return static_cast<int>(l.size()); }

  std::optional<int> compose(int g, int h) const {
    auto it = comp.find(pair_key(g, h));
    if (it == comp.end()) return std::nullopt;
    return it->second;
  }

  void finalize();

  std::string object_label(int x) const;
  std::string arrow_label(int g) const;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

ValidationReport validate(const FiniteGroupoid& g);

// Structural equality of the full tables (labels ignored).
bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);

/* A left action of a finite group on a finite set, act[g][p] = g.p. */
struct GroupAction {
  GroupSpec group;
  int carrier = 0;
  std::vector<std::vector<int>> act; // group.n x carrier
  std::vector<std::string> point_labels; // optional
};

ValidationReport validate(const GroupAction& a);

/* Action groupoid: objects are carrier points, arrows are pairs (g, p) with
 * r(g,p) = p and l(g,p) = g.p; (g, p)(g', p') = (gg', p') when p = g'.p'.
 * Throws InvalidAction if the table is not a group action. */
GroupoidPtr action_groupoid(const GroupAction& a);

// Arrow id of (g, p) in the action groupoid built above.
inline int action_arrow(const GroupAction& a, int g, int p) { return g * a.carrier + p; }

// One object, one arrow.
GroupoidPtr terminal_groupoid();

// A group as a one-object groupoid.
GroupoidPtr group_as_groupoid(const GroupSpec& g);

// Only identity arrows over n objects.
GroupoidPtr trivial_groupoid(int n_objects);

// Exactly one arrow between every ordered pair of objects.
GroupoidPtr pair_groupoid(int n_objects);

/* Product groupoid. Object ids are x*|B0|+y, arrow ids g*|B1|+h, so the
 * factors can be recovered by index arithmetic. */
GroupoidPtr product_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

// Isotropy group at object x: all arrows with l = r = x under composition.
// Also returns the arrow ids in group-element order. Throws UnknownObject.
GroupSpec isotropy(const FiniteGroupoid& g, int x, std::vector<int>* arrow_ids = nullptr);

// Connected components of the object set under "some arrow joins them".
std::vector<std::vector<int>> orbits(const FiniteGroupoid& g);

/* A functor between finite groupoids, as object and arrow maps. */
struct GroupoidFunctor {
  GroupoidPtr from, to;
  std::vector<int> obj_map;   // size from->num_objects
  std::vector<int> arrow_map; // size from->num_arrows

  static GroupoidFunctor identity(const GroupoidPtr& g);
};

ValidationReport validate(const GroupoidFunctor& f);

// Composite functor g . f (apply f first).
GroupoidFunctor compose(const GroupoidFunctor& f, const GroupoidFunctor& g);

// Canonical coherence isos between iterated products.
// (A x B) x C -> A x (B x C)
GroupoidFunctor associator(const GroupoidPtr& a, const GroupoidPtr& b, const GroupoidPtr& c,
                           const GroupoidPtr& lhs, const GroupoidPtr& rhs);
// 1 x A -> A and A x 1 -> A (terminal factor dropped).
GroupoidFunctor left_unitor(const GroupoidPtr& one_a, const GroupoidPtr& a);
GroupoidFunctor right_unitor(const GroupoidPtr& a_one, const GroupoidPtr& a);

// The unique functor G -> 1 and the diagonal G -> G x G (gg must be the
// product of g with itself).
GroupoidFunctor terminal_functor(const GroupoidPtr& g, const GroupoidPtr& one);
GroupoidFunctor diagonal_functor(const GroupoidPtr& g, const GroupoidPtr& gg);

} // namespace grouplike
