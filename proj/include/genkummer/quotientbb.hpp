#pragma once
#include <vector>

#include "genkummer/intlat.hpp"
#include "genkummer/rat.hpp"

// Beauville-Bogomolov lattice and Fujiki constant of the partial
// resolution K' of the quotient by the symplectic involution: symbolic
// Gram in t = sqrt(2/c), the integrality/primitivity solve for c, the
// exceptional-divisor parity selection, the H^4-normality balance and the
// Betti numbers of K'.
namespace genkummer::quotientbb {

// Gram = t * base on the basis
// (p u1, p u2, p v1, p v2, p w1, p w2, (p e + Z')/2, (p e - Z')/2)
// where p is the composite pushforward-pullback of degree-2 classes and
// Z' the exceptional divisor over the fixed K3.
struct SymbolicGram {
  intlat::RatMat base;  // 8x8, Gram(t) = t * base
};

SymbolicGram kprime_gram_symbolic();

struct FujikiSolution {
  Rat t;             // the unique admissible value (1/2)
  Rat c;             // Fujiki constant 2/t^2
  intlat::IntMat gram;  // integral Gram at t
  bool odd;          // some diagonal entry is odd
  bool unique_in_scan;  // no other t = p/q with p,q <= 12 works
};

// Scans positive rationals of small height for the unique t making the
// Gram integral and primitive (entry gcd 1); asserts the block shape
// U(3)^3 + [[-5,-4],[-4,-5]].
FujikiSolution solve_fujiki();

// Candidates for the number d of exceptional point-divisors entering the
// half-integral class: only (324-d)/2 integral survives; returns 36.
struct DdeltaChoice {
  int d;
  std::vector<std::pair<int, Rat>> table;  // (candidate, (324-d)/2)
};
DdeltaChoice ddelta_select();

struct Balance {
  long lhs, rhs;  // both 60
};
// l1+^4 + 2(l1-^1 + l1-^3 + l1+^0 + l1+^2) against the fixed-locus side
// 36 h^0(pt) + h^0 + h^2 + h^4 of a K3.
Balance h4_normality_balance(long l1p4, long l1m1, long l1m3, long l1p0,
                             long l1p2, int fixed_points = 36);

struct KprimeBetti {
  long b2, b3, b4, chi;
};
KprimeBetti kprime_betti(long l2_2, long l1p_2, long l2_4, long l1p_4);

}  // namespace genkummer::quotientbb
