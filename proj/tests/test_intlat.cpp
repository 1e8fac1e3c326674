#include <doctest.h>

#include "genkummer/intlat.hpp"

using namespace genkummer;
using namespace genkummer::intlat;

TEST_CASE("snf examples") {
  SnfResult s = snf({{2, 0}, {0, 4}});
  CHECK(s.d[0][0] == 2);
  CHECK(s.d[1][1] == 4);

  s = snf({{1, 0}, {0, 1}});
  CHECK(s.d[0][0] == 1);
  CHECK(s.d[1][1] == 1);

  s = snf({{2, 0}, {0, 3}});
  CHECK(s.d[0][0] == 1);
  CHECK(s.d[1][1] == 6);
}

TEST_CASE("snf postconditions on random-ish matrices") {
  IntMat m = {{6, 4, 2}, {4, 8, 1}, {2, 1, 12}};
  SnfResult s = snf(m);  // throws if u*m*v != d or transforms not unimodular
  Int prod = 1;
  for (int i = 0; i < 3; ++i) {
    CHECK(s.d[i][i] > 0);
    if (i) CHECK(s.d[i][i] % s.d[i - 1][i - 1] == 0);
    prod *= s.d[i][i];
  }
  Int det = bareiss_det(m);
  CHECK(prod == boost::multiprecision::abs(det));
}

TEST_CASE("determinants") {
  CHECK(bareiss_det({{1, 2}, {3, 4}}) == -2);
  CHECK(bareiss_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(rat_det({{Rat(1, 2), 0}, {0, Rat(2, 3)}}) == Rat(1, 3));
}

TEST_CASE("row basis and saturation") {
  IntMat sat = saturate_rows({{2, 0}, {0, 2}});
  CHECK(sat == IntMat{{1, 0}, {0, 1}});

  sat = saturate_rows({{2, 4}});
  CHECK(sat == IntMat{{1, 2}});

  // saturate(saturate(L)) = saturate(L)
  IntMat once = saturate_rows({{6, 4, 0}, {0, 10, 0}});
  CHECK(saturate_rows(once) == once);
}

TEST_CASE("quotient invariants") {
  auto inv = quotient_invariants(IntMat{{2, 0}, {0, 1}});
  CHECK(inv == std::vector<Int>{2});
  inv = quotient_invariants(IntMat{{1, 0}, {0, 1}});
  CHECK(inv.empty());
}

TEST_CASE("index via both routes") {
  RatMat gram = rat_identity(2);
  Sublattice sup{rat_identity(2), &gram};
  Sublattice sub{{{2, 0}, {0, 1}}, &gram};
  CHECK(index_of(sub, sup) == 2);
  CHECK_THROWS(index_of(sup, sub));  // not a sublattice
}

TEST_CASE("discriminant / index consistency") {
  RatMat gram = {{2, 1}, {1, 2}};
  Sublattice sup{rat_identity(2), &gram};
  Sublattice sub{{{1, 1}, {2, -2}}, &gram};
  Int i = index_of(sub, sup);
  CHECK(sub.discr() == i * i * sup.discr());
}

TEST_CASE("add_glue") {
  RatMat gram = {{2, 0}, {0, 2}};
  Sublattice l{rat_identity(2), &gram};
  // (1/2, 1/2) pairs integrally with both generators and itself.
  Sublattice over = add_glue(l, {{Rat(1, 2), Rat(1, 2)}});
  CHECK(index_of(l, over) == 2);
  // Re-adding a lattice vector changes nothing.
  Sublattice same = add_glue(l, {{1, 0}});
  CHECK(index_of(l, same) == 1);
  // A vector with fractional pairing is rejected by name.
  CHECK_THROWS(add_glue(l, {{Rat(1, 3), 0}}));
}

TEST_CASE("equivariant decomposition") {
  InvolutionModule swap2;
  swap2.gram = int_identity(2);
  swap2.action = {{0, 1}, {1, 0}};
  auto r = equivariant_decompose(swap2);
  CHECK(r.l2 == 1);
  CHECK(r.l1_minus == 0);
  CHECK(r.l1_plus == 0);

  InvolutionModule ident;
  ident.gram = int_identity(3);
  ident.action = int_identity(3);
  r = equivariant_decompose(ident);
  CHECK(r.l2 == 0);
  CHECK(r.l1_minus == 0);
  CHECK(r.l1_plus == 3);

  InvolutionModule neg;
  neg.gram = int_identity(3);
  neg.action = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  r = equivariant_decompose(neg);
  CHECK(r.l2 == 0);
  CHECK(r.l1_minus == 3);
  CHECK(r.l1_plus == 0);
}

TEST_CASE("lattice discriminants") {
  IntLattice u;
  u.gram = {{0, 1}, {1, 0}};
  CHECK(u.discr() == 1);
  // 81x81 with 4 on the diagonal, 1 off: eigenvalues 3 (x80) and 84.
  RatMat big(81, RatVec(81, 1));
  for (int i = 0; i < 81; ++i) big[i][i] = 4;
  IntLattice pi{{}, big};
  Int expect = 84;
  for (int i = 0; i < 80; ++i) expect *= 3;
  CHECK(pi.discr() == expect);
}
