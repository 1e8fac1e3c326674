#pragma once
#include <array>
#include <string>
#include <vector>

#include "genkummer/intlat.hpp"
#include "genkummer/rat.hpp"
#include "genkummer/sympfin.hpp"

// The integral model of H^4 of the generalized Kummer fourfold: the
// Beauville-Bogomolov form on H^2, Fujiki quadruple products, the rank-108
// unimodular lattice assembled from Sym^2 H^2 and the Briancon classes with
// their glue vectors, and the symplectic-involution invariants.
namespace genkummer::kummer4 {

using intlat::IntMat;
using intlat::RatMat;
using intlat::RatVec;

// H^2 basis order: u1, u2, v1, v2, w1, w2, e. B = U^3 + <-6>.
constexpr int kH2Rank = 7;
extern const std::array<const char*, kH2Rank> kH2Labels;

Rat bb_form(int i, int j);
Rat bb_form(const RatVec& x, const RatVec& y);

// Fujiki constant 9: a1.a2.a3.a4 = 3 (B12 B34 + B13 B24 + B14 B23).
Rat fujiki_quadruple(const RatVec& a1, const RatVec& a2, const RatVec& a3,
                     const RatVec& a4);
Rat fujiki_quadruple(int i, int j, int k, int l);

// Monomial basis of Sym^2 H^2 in lexicographic pair order; 28 entries.
constexpr int kSymRank = 28;
const std::vector<std::pair<int, int>>& sym_pairs();
int sym_index(int i, int j);
std::string sym_label(int k);

IntMat sym2_gram();

// 81x81 Gram of the Z_tau (4 on the diagonal, 1 elsewhere) and the
// 80x80 Gram of the difference basis Z_tau - Z_0.
IntMat pi_gram();
IntMat piprime_gram();

// Z_tau . D1 . D2 = 2 B(D1, D2), independent of tau.
Rat cross_pairing(const RatVec& d1, const RatVec& d2);

// 3-torsion indexing: tau in F_3^4, index 0..80 (base-3, first coordinate
// most significant). Index 0 is tau = 0.
int tau_index(const sympfin::Vec4& t);
sympfin::Vec4 tau_of_index(int idx);

// Appendix data: the 31 classes sum_{tau in L}(Z_tau - Z_{tau+t'}) whose
// thirds generate Pi'^sat / Pi', and the 19 mixed classes whose thirds
// generate the rest of H^4 together with Z_0.
struct PiGlueClass {
  sympfin::Vec4 lambda_u, lambda_v;  // basis of the plane Lambda
  sympfin::Vec4 tau_prime;
};
const std::vector<PiGlueClass>& pi_glue_classes();

struct MixedGlueClass {
  std::vector<std::pair<int, std::pair<int, int>>> sym;  // coeff, (i,j)
  sympfin::Vec4 lambda_u, lambda_v;
};
const std::vector<MixedGlueClass>& mixed_glue_classes();

// Model coordinates: 28 Sym^2 monomials, then the 80 differences
// d_tau = Z_tau - Z_0 for tau != 0 in tau_index order.
constexpr int kH4Rank = 108;

struct H4Model {
  RatMat gram0;  // reference Gram (sym block, Pi' block, zero cross)

  RatMat sym_basis;      // 28 rows
  RatMat sym_glue;       // 14 rows
  RatMat sym_over;       // basis of Sym + glue
  RatMat piprime_basis;  // 80 rows
  RatMat pi_thirds;      // 31 rows (thirds of the 31-family classes)
  RatMat pi_over;        // basis of Pi' + thirds
  RatVec z0;             // the class Z_0
  RatMat mixed_thirds;   // 19 rows (thirds of the 19-family classes)
  RatMat full;           // 108 rows, basis of H^4

  IntMat gram_full;        // Gram of full (integral, |det| = 1)
  IntMat involution_full;  // action of the symplectic involution on full

  RatVec z_sym;  // common Sym-component of the Z_tau
  RatVec z_tau(int idx) const;
  RatVec c2() const;   // second Chern class = 27 z_sym
  RatVec y_p() const;  // (3 c2 + e^2)/72
};

H4Model build_h4();

struct IdentityReport {
  bool w_formula;        // W = 9 Y_p + e^2 and W = 3/8 (c2 + 3 e^2)
  bool c2_sym;           // c2 = 4 u1u2 + 4 v1v2 + 4 w1w2 - e^2/3
  bool yp_sym;           // Y_p = (u1u2 + v1v2 + w1w2)/6
  bool sym_cap_pi;       // Sym cap Pi = <3 c2>
  bool c2_primitive;     // gcd of F-coordinates of c2 is 1
  Rat w_dot_e2;          // 243
  Rat yp_dot_e2;         // -9
};
IdentityReport class_identities(const H4Model& m);

struct AppendixReport {
  long pi_glue_rank_mod3;        // 31
  bool pi_glue_matches_d;        // reductions span the ideal D of F_3[V]
  long mixed_glue_rank;   // 19
  bool thirds_integral;       // every listed class is divisible by 3 in F
  bool lambdas_nonisotropic;  // every listed plane is non-isotropic
  bool corrupted_fails;       // a single third (Z_tau - Z_0)/3 is rejected
};
AppendixReport appendix_verify(const H4Model& m);

struct InvolutionReport {
  intlat::EquivariantRanks deg2, deg3, deg4;
};
InvolutionReport involution_invariants(const H4Model& m);

struct CrosscheckReport {
  bool quadruples_match;  // Fujiki vs Fock on all degree-2 quadruples
  bool e4_ok;             // e^4 = 324 on both sides
  bool z0e2_ok;           // Z_0 . e^2 = -12 on both sides
  bool c2_identity;       // [K] c2(A^[3]) = [K] (pullback of the Sym formula)
  bool w_e2_ok;           // W . e^2 = 243 via the Fock pipeline
};
CrosscheckReport fock_crosscheck(const H4Model& m);

}  // namespace genkummer::kummer4
