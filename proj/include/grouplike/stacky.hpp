#pragma once

#include <string>

#include "grouplike/bibundle.hpp"

namespace grouplike {

// A groupoid presenting a stack together with the three structure bibundles
// of a group object: multiplication em ((GxG)-G), unit ee (1-G), inversion
// einv (G-G).
struct StackyFamily {
  std::string name;
  GroupoidPtr g;
  Bibundle em, ee, einv;
};

// Objects form the group, arrows are identities only; em/ee/einv are functor
// graphs of the group maps on objects.
StackyFamily make_trivial_group_family(const GroupSpec& s);

// One object, arrows form the group; the structure functors act on arrows,
// which requires s abelian (otherwise multiplication is not a functor and
// construction throws NotAFunctor).
StackyFamily make_one_object_family(const GroupSpec& s);

// Finite quotient-stack analog: Z_m translates Z_n by steps of n/m (requires
// m | n); the image subgroup H = (n/m)Z_n glues multiplication up to the
// stabilizer, carrier of em = {(x,y,z) : x + y - z in H}.
StackyFamily make_cyclic_quotient_family(int n_total, int subgroup_order);

} // namespace grouplike
