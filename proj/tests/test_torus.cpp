#include <doctest.h>

#include "genkummer/torus.hpp"

using namespace genkummer;
using namespace genkummer::torus;

TEST_CASE("wedge basics") {
  TorusClass a1 = TorusClass::monomial(0x1);
  TorusClass a2 = TorusClass::monomial(0x2);
  CHECK(wedge(a1, a2) == TorusClass::monomial(0x3));
  CHECK(wedge(a2, a1) == TorusClass::monomial(0x3, -1));
  CHECK(wedge(a1, a1).is_zero());
}

TEST_CASE("supercommutativity and associativity, all monomial pairs") {
  for (int p = 0; p < 16; ++p)
    for (int q = 0; q < 16; ++q) {
      TorusClass x = TorusClass::monomial(Mono(p));
      TorusClass y = TorusClass::monomial(Mono(q));
      int sign = (mono_degree(Mono(p)) * mono_degree(Mono(q))) % 2 ? -1 : 1;
      CHECK((wedge(x, y) - wedge(y, x) * Rat(sign)).is_zero());
      for (int s = 0; s < 16; s += 3) {
        TorusClass z = TorusClass::monomial(Mono(s));
        CHECK((wedge(wedge(x, y), z) - wedge(x, wedge(y, z))).is_zero());
      }
    }
}

TEST_CASE("integration") {
  CHECK(integrate(TorusClass::monomial(kTop)) == 1);
  CHECK(integrate(TorusClass::monomial(0x3)) == 0);
  TorusClass mix = TorusClass::monomial(kTop, 3);
  mix -= TorusClass::monomial(0x3);
  CHECK(integrate(mix) == 3);
}

TEST_CASE("poincare duals") {
  for (int m = 0; m < 16; ++m)
    CHECK(integrate(wedge(TorusClass::monomial(Mono(m)), pd_dual(Mono(m)))) ==
          1);
  CHECK(pd_dual(0x0) == TorusClass::monomial(kTop));
  // Left-normalized duals: int a_i^* ^ a_i = 1.
  CHECK(a_star(1) == TorusClass::monomial(0xE, -1));
  CHECK(a_star(2) == TorusClass::monomial(0xD));
  for (int i = 1; i <= 4; ++i)
    CHECK(integrate(wedge(a_star(i),
                          TorusClass::monomial(Mono(1 << (i - 1))))) == 1);
}

TEST_CASE("degree bookkeeping") {
  TorusClass t = TorusClass::monomial(0x3);
  t += TorusClass::monomial(0x5);
  CHECK(t.degree() == 2);
  t += TorusClass::monomial(0x1);
  CHECK(t.degree() == -1);
  CHECK(t.homogeneous_part(1) == TorusClass::monomial(0x1));
}

TEST_CASE("diagonal pushforward") {
  auto top = diagonal_sweedler(kTop);
  REQUIRE(top.size() == 1);
  CHECK(top[0].coeff == 1);
  CHECK(top[0].left == kTop);
  CHECK(top[0].right == kTop);

  auto unit = diagonal_sweedler(Mono(0));
  CHECK(unit.size() == 16);
  for (const auto& t : unit)
    CHECK(mono_degree(t.left) + mono_degree(t.right) == 4);

  // Defining adjoint property against every monomial pair.
  for (int a = 0; a < 16; ++a) {
    auto terms = diagonal_sweedler(Mono(a));
    for (int u = 0; u < 16; ++u)
      for (int v = 0; v < 16; ++v) {
        Rat lhs = 0;
        for (const auto& t : terms) {
          Rat koszul =
              (mono_degree(t.right) * mono_degree(Mono(u))) % 2 ? -1 : 1;
          lhs += t.coeff * koszul *
                 integrate(wedge(TorusClass::monomial(t.left),
                                 TorusClass::monomial(Mono(u)))) *
                 integrate(wedge(TorusClass::monomial(t.right),
                                 TorusClass::monomial(Mono(v))));
        }
        Rat rhs = integrate(
            wedge(TorusClass::monomial(Mono(a)),
                  wedge(TorusClass::monomial(Mono(u)),
                        TorusClass::monomial(Mono(v)))));
        CHECK(lhs == rhs);
      }
  }
}
