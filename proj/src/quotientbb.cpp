#include "genkummer/quotientbb.hpp"

#include <numeric>
#include <stdexcept>

namespace genkummer::quotientbb {

using intlat::IntMat;
using intlat::RatMat;

SymbolicGram kprime_gram_symbolic() {
  // B(p a, p b) = 6t B_K(a,b) on the hyperbolic part; B(p e, p e) = -36t;
  // B(Z', Z') = -4t; p e and Z' orthogonal to everything else. In the
  // halved basis the last block becomes -t [[10, 8], [8, 10]].
  RatMat base(8, intlat::RatVec(8, 0));
  base[0][1] = base[1][0] = 6;
  base[2][3] = base[3][2] = 6;
  base[4][5] = base[5][4] = 6;
  Rat ee = -36, zz = -4;
  base[6][6] = (ee + zz) / 4;
  base[7][7] = (ee + zz) / 4;
  base[6][7] = base[7][6] = (ee - zz) / 4;
  // Internal consistency of the Z'-square: -4 sqrt(2/c) must equal
  // -8 sqrt(1/(2c)); squaring, 16*2 = 64/2.
  if (Rat(16 * 2) != Rat(64, 2))
    throw std::logic_error("kprime_gram_symbolic: Z' normalization");
  return {base};
}

namespace {

bool admissible(const SymbolicGram& g, const Rat& t, IntMat* out) {
  IntMat m(8, intlat::IntVec(8));
  Int gcd = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Rat v = g.base[i][j] * t;
      if (!is_integer(v)) return false;
      m[i][j] = rat_num(v);
      gcd = boost::multiprecision::gcd(gcd, m[i][j]);
    }
  if (gcd != 1) return false;
  if (out) *out = m;
  return true;
}

}  // namespace

FujikiSolution solve_fujiki() {
  SymbolicGram g = kprime_gram_symbolic();
  FujikiSolution sol;
  bool found = false;
  sol.unique_in_scan = true;
  for (int num = 1; num <= 12; ++num)
    for (int den = 1; den <= 12; ++den) {
      Rat t(num, den);
      if (rat_num(t) != num || rat_den(t) != den) continue;  // not reduced
      IntMat m;
      if (!admissible(g, t, &m)) continue;
      if (found) {
        if (t != sol.t) sol.unique_in_scan = false;
        continue;
      }
      found = true;
      sol.t = t;
      sol.gram = m;
    }
  if (!found) throw std::runtime_error("solve_fujiki: no admissible t");
  sol.c = Rat(2) / (sol.t * sol.t);

  // Shape check: three U(3) blocks and the final [[-5,-4],[-4,-5]].
  IntMat expect(8, intlat::IntVec(8, 0));
  expect[0][1] = expect[1][0] = 3;
  expect[2][3] = expect[3][2] = 3;
  expect[4][5] = expect[5][4] = 3;
  expect[6][6] = expect[7][7] = -5;
  expect[6][7] = expect[7][6] = -4;
  if (sol.gram != expect)
    throw std::logic_error("solve_fujiki: Gram is not U(3)^3 + [[-5,-4],[-4,-5]]");

  sol.odd = false;
  for (int i = 0; i < 8; ++i)
    if (sol.gram[i][i] % 2 != 0) sol.odd = true;
  return sol;
}

DdeltaChoice ddelta_select() {
  DdeltaChoice out;
  out.d = -1;
  for (int d : {1, 35, 36}) {
    // ((pi_2* s* e + D_e)/2)^4 = (8*324 - 8d)/16 = (324 - d)/2 using
    // e^4 = 324, E^4 = -1, E.z = 0 and the degree-2 pushforward factor.
    Rat val = Rat(324 - d, 2);
    out.table.emplace_back(d, val);
    if (is_integer(val)) {
      if (out.d != -1)
        throw std::logic_error("ddelta_select: selection not unique");
      out.d = d;
    }
  }
  if (out.d != 36) throw std::logic_error("ddelta_select: expected 36");
  return out;
}

Balance h4_normality_balance(long l1p4, long l1m1, long l1m3, long l1p0,
                             long l1p2, int fixed_points) {
  Balance b;
  b.lhs = l1p4 + 2 * (l1m1 + l1m3 + l1p0 + l1p2);
  // K3 surface: h^0 = 1, h^2 = 22, h^4 = 1.
  b.rhs = fixed_points + 1 + 22 + 1;
  return b;
}

KprimeBetti kprime_betti(long l2_2, long l1p_2, long l2_4, long l1p_4) {
  KprimeBetti b;
  b.b2 = l2_2 + l1p_2 + 1;  // +1 for the exceptional divisor of the blow-up
  b.b3 = 0;                 // H^3 has no invariants
  b.b4 = l2_4 + l1p_4 + 22; // +h^2(K3)
  b.chi = 1 + b.b2 - b.b3 + b.b4 - b.b3 + b.b2 + 1;
  return b;
}

}  // namespace genkummer::quotientbb
