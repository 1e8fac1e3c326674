#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "genkummer/rat.hpp"

// Exact integer lattice algebra: Smith/Hermite normal forms, discriminants,
// indices, saturation, glue-vector overlattices and Z[Z/2]-decomposition.
// Vectors are rows throughout; a lattice inside an ambient quadratic space
// is the row span of a basis matrix.
namespace genkummer::intlat {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntMat int_identity(std::size_t n);
RatMat rat_identity(std::size_t n);
IntMat int_mul(const IntMat& a, const IntMat& b);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat rat_from_int(const IntMat& a);
IntMat transpose(const IntMat& a);
RatMat transpose(const RatMat& a);

Int bareiss_det(IntMat a);
Rat rat_det(RatMat a);

// x * a = rhs, a square invertible. Throws if singular.
RatMat solve_left(const RatMat& a, const RatMat& rhs);
RatMat rat_inverse(const RatMat& a);

std::size_t rat_rank(RatMat a);

struct SnfResult {
  IntMat u, d, v;  // u * m * v = d, u and v unimodular
};

// Smith normal form with transformations; postconditions are re-checked
// (u*m*v == d, |det u| = |det v| = 1) on every call.
SnfResult snf(const IntMat& m);

// Diagonal of the SNF without transformation matrices (cheaper).
std::vector<Int> snf_diagonal(IntMat m);

// Basis of the row span (Hermite-style; rank many rows).
IntMat row_basis(const IntMat& m);

// Basis of the saturation (rowspan tensor Q intersected with Z^n).
IntMat saturate_rows(const IntMat& m);

// Invariant factors (>1 only) of Z^n / rowspan for a full-rank square
// coordinate matrix, in divisibility order.
std::vector<Int> quotient_invariants(const IntMat& sub_in_sup);

struct IntLattice {
  std::vector<std::string> labels;
  RatMat gram;

  std::size_t rank() const { return gram.size(); }
  bool is_integral() const;
  Int discr() const;  // |det gram|; throws if degenerate or non-integral det
};

// Lattice presented by a rational basis inside an ambient quadratic space.
struct Sublattice {
  RatMat basis;        // rows = basis vectors in ambient coordinates
  const RatMat* gram;  // ambient bilinear form

  RatMat gram_matrix() const;
  Int discr() const;
};

// Index |M : L| for L a finite-index sublattice of M, computed both from
// the discriminant ratio and from the coordinate determinant; the two
// routes must agree.
Int index_of(const Sublattice& sub, const Sublattice& sup);

// Overlattice generated by L and the glue vectors. Every glue vector must
// pair integrally with L, with the other glue vectors and with itself;
// offending pairs are reported by label index.
Sublattice add_glue(const Sublattice& l, const RatMat& glue);

// Common-denominator lattice basis from rational generators (rank rows).
RatMat lattice_row_basis(const RatMat& gens);

// Primitive closure of the span of sub inside the lattice with basis
// ambient_basis (integer coordinates of sub w.r.t. that basis required).
RatMat saturate(const RatMat& sub, const RatMat& ambient_basis);

// Invariant factors of sup/sub given bases in common ambient coordinates.
std::vector<Int> quotient_invariants(const RatMat& sub, const RatMat& sup);

// Basis of {x in L : x . s = 0 for every s in sub}, a saturated
// sublattice of the lattice L (rows in ambient coordinates).
RatMat orthogonal_complement(const RatMat& sub, const Sublattice& l);

struct InvolutionModule {
  IntMat gram;    // may be identity when only the module structure matters
  IntMat action;  // squares to the identity, preserves gram
};

struct EquivariantRanks {
  long l2, l1_minus, l1_plus;
};

// (l2, l1-, l1+) of a Z[Z/2]-module: l2 counts the Z/2 factors of
// L/(L^+ + L^-), l1+ = rk L^+ - l2, l1- = rk L^- - l2.
EquivariantRanks equivariant_decompose(const InvolutionModule& m);

}  // namespace genkummer::intlat
