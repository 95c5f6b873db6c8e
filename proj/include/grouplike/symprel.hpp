#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplike/groupoid.hpp"
#include "grouplike/rational.hpp"

namespace grouplike {

// A rational symplectic vector space: exact skew nondegenerate form.
struct SympSpace {
  int dim = 0;
  std::vector<std::vector<Rat>> omega; // dim x dim
};

ValidationReport validate(const SympSpace& s);

// Standard form on Q^{2n}: omega(e_i, e_{n+i}) = 1.
SympSpace standard_symp(int dim);
SympSpace opposite_space(const SympSpace& s);
// The monoidal product of objects.
SympSpace direct_sum(const SympSpace& a, const SympSpace& b);
bool space_eq(const SympSpace& a, const SympSpace& b);

/* A linear relation src -> dst: a subspace of src (+) dst, stored as a
 * reduced echelon row basis so equal subspaces compare equal. Canonicity of
 * the relation (iso/coiso/lagrangian) is measured against
 * omega_src (+) (-omega_dst). */
struct LinRelation {
  SympSpace src, dst;
  std::vector<std::vector<Rat>> basis;
};

// Canonicalizes the span; rows must have length src.dim + dst.dim
// (DimensionMismatch otherwise).
LinRelation make_relation(SympSpace src, SympSpace dst, std::vector<std::vector<Rat>> span);
bool rel_eq(const LinRelation& a, const LinRelation& b);

bool is_isotropic(const LinRelation& r);
bool is_coisotropic(const LinRelation& r);
bool is_lagrangian(const LinRelation& r);

LinRelation identity_relation(const SympSpace& s);
// Graph {(a, f a)}; f is dst.dim x src.dim. Throws DimensionMismatch.
LinRelation graph_of_linear_map(const SympSpace& src, const SympSpace& dst,
                                const std::vector<std::vector<Rat>>& f);
// Set composition {(a, c) : exists b with (a,b) in f, (b,c) in g}; exact
// intersection + projection. Throws MiddleMismatch.
LinRelation compose_rel(const LinRelation& f, const LinRelation& g);
// The same subspace read backwards, a relation dst -> src.
LinRelation transpose_rel(const LinRelation& r);
// Product relation (a (+) c) -> (b (+) d).
LinRelation rel_tensor(const LinRelation& r1, const LinRelation& r2);

struct ZigZagRow {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct ZigZagReport {
  std::vector<ZigZagRow> rows;
  bool all_pass() const;
  std::string summary() const;
};

/* Dualizability of S with dual S^op: ev and coev are both the diagonal
 * lagrangian, the unit object is the zero space, and both snake composites
 * must come back as identity relations. */
ZigZagReport check_zigzag(const SympSpace& s);

// Columns (u_1..u_n, v_1..v_n) with omega(u_i, v_j) = delta_ij and zero on
// either block: an exact Darboux basis.
std::vector<std::vector<Rat>> darboux_basis(const SympSpace& s);

// Deterministic generators for tests: P^T J P forms and lagrangians moved by
// seeded symplectic shears.
SympSpace random_symp(int dim, std::uint64_t seed);
LinRelation random_lagrangian_relation(const SympSpace& a, const SympSpace& b, std::uint64_t seed);

} // namespace grouplike
