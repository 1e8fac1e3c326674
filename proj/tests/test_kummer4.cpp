#include <doctest.h>

#include "genkummer/kummer4.hpp"

using namespace genkummer;
using namespace genkummer::kummer4;

namespace {

Int ipow(Int b, int e) {
  Int r = 1;
  while (e--) r *= b;
  return r;
}

const H4Model& model() {
  static const H4Model m = build_h4();
  return m;
}

}  // namespace

TEST_CASE("fujiki quadruples") {
  CHECK(fujiki_quadruple(6, 6, 6, 6) == 324);  // e^4
  CHECK(fujiki_quadruple(0, 1, 6, 6) == -18);  // u1 u2 e e
  CHECK(fujiki_quadruple(0, 0, 1, 1) == 6);    // u1 u1 u2 u2
  CHECK(fujiki_quadruple(0, 0, 0, 1) == 0);    // isotropic leftover
  CHECK(fujiki_quadruple(0, 1, 2, 3) == 3);    // u1 u2 v1 v2
}

TEST_CASE("sym2 gram") {
  IntMat g = sym2_gram();
  int e2 = sym_index(6, 6), u1u2 = sym_index(0, 1);
  CHECK(g[e2][e2] == 324);
  CHECK(g[u1u2][u1u2] == 6);
  intlat::IntLattice sym{{}, intlat::rat_from_int(g)};
  CHECK(sym.discr() == ipow(2, 14) * ipow(3, 38));
}

TEST_CASE("pi grams") {
  intlat::IntLattice pi{{}, intlat::rat_from_int(pi_gram())};
  CHECK(pi.discr() == ipow(3, 80) * 84);
  IntMat pp = piprime_gram();
  CHECK(pp[0][0] == 6);
  CHECK(pp[0][1] == 3);
  intlat::IntLattice pil{{}, intlat::rat_from_int(pp)};
  CHECK(pil.discr() == ipow(3, 84));
}

TEST_CASE("cross pairings") {
  RatVec e(kH2Rank, 0), u1(kH2Rank, 0), u2(kH2Rank, 0);
  e[6] = 1;
  u1[0] = 1;
  u2[1] = 1;
  CHECK(cross_pairing(e, e) == -12);  // Z_tau . e . e
  CHECK(cross_pairing(u1, u2) == 2);
}

TEST_CASE("appendix data sizes") {
  CHECK(pi_glue_classes().size() == 31);
  CHECK(mixed_glue_classes().size() == 19);
}

TEST_CASE("full lattice assembly") {
  const H4Model& m = model();
  CHECK(m.full.size() == 108);
  auto sub = [&](const intlat::RatMat& basis) {
    intlat::Sublattice s;
    s.basis = basis;
    s.gram = &m.gram0;
    return s;
  };
  CHECK(sub(m.sym_over).discr() == ipow(3, 22));
  CHECK(sub(m.pi_over).discr() == ipow(3, 22));
  CHECK(sub(m.full).discr() == 1);

  auto qs = intlat::quotient_invariants(m.sym_basis, m.sym_over);
  Int prod = 1;
  for (const auto& f : qs) prod *= f;
  CHECK(prod == ipow(2, 7) * ipow(3, 8));

  auto qp = intlat::quotient_invariants(m.piprime_basis, m.pi_over);
  CHECK(qp == std::vector<Int>(31, 3));

  intlat::RatMat satsum = m.sym_over;
  for (const auto& r : m.pi_over) satsum.push_back(r);
  auto qf = intlat::quotient_invariants(intlat::lattice_row_basis(satsum),
                                        m.full);
  REQUIRE(qf.size() == 20);
  CHECK(std::count(qf.begin(), qf.end(), Int(3)) == 19);
  CHECK(qf.back() == 27);
}

TEST_CASE("class identities") {
  IdentityReport r = class_identities(model());
  CHECK(r.w_formula);
  CHECK(r.c2_sym);
  CHECK(r.yp_sym);
  CHECK(r.sym_cap_pi);
  CHECK(r.c2_primitive);
  CHECK(r.w_dot_e2 == 243);
  CHECK(r.yp_dot_e2 == -9);
}

TEST_CASE("appendix verification") {
  AppendixReport r = appendix_verify(model());
  CHECK(r.pi_glue_rank_mod3 == 31);
  CHECK(r.pi_glue_matches_d);
  CHECK(r.mixed_glue_rank == 19);
  CHECK(r.thirds_integral);
  CHECK(r.lambdas_nonisotropic);
  CHECK(r.corrupted_fails);
}

TEST_CASE("involution invariants") {
  InvolutionReport r = involution_invariants(model());
  CHECK(r.deg2.l2 == 0);
  CHECK(r.deg2.l1_minus == 0);
  CHECK(r.deg2.l1_plus == 7);
  CHECK(r.deg3.l1_minus == 8);
  CHECK(r.deg4.l2 == 40);
  CHECK(r.deg4.l1_minus == 0);
  CHECK(r.deg4.l1_plus == 28);
}

TEST_CASE("fock crosscheck") {
  CrosscheckReport r = fock_crosscheck(model());
  CHECK(r.quadruples_match);
  CHECK(r.e4_ok);
  CHECK(r.z0e2_ok);
  CHECK(r.c2_identity);
  CHECK(r.w_e2_ok);
}
