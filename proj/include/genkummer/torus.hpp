#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genkummer/rat.hpp"

// Exact arithmetic in H*(A,Z) for a 2-dimensional complex torus A: the
// exterior algebra on four degree-1 generators a1..a4. A monomial is a
// bitmask over {a1,a2,a3,a4}; the top class x corresponds to mask 0xF.
namespace genkummer::torus {

using Mono = std::uint8_t;  // bit i set <=> generator a_{i+1} present

constexpr Mono kOne = 0x0;
constexpr Mono kTop = 0xF;

inline int mono_degree(Mono m) { return __builtin_popcount(m); }

// Sign of a1^p wedge a1^q as (-1)^{inversions}; 0 if masks overlap.
int wedge_sign(Mono p, Mono q);

struct TorusClass {
  std::array<Rat, 16> c{};

  static TorusClass zero() { return {}; }
  static TorusClass monomial(Mono m, const Rat& coeff = 1) {
    TorusClass t;
    t.c[m] = coeff;
    return t;
  }

  bool is_zero() const;
  // -1 if zero or inhomogeneous, else the common degree.
  int degree() const;
  TorusClass homogeneous_part(int d) const;

  TorusClass& operator+=(const TorusClass& o);
  TorusClass& operator-=(const TorusClass& o);
  TorusClass operator-() const;
  TorusClass operator+(const TorusClass& o) const {
    TorusClass t = *this;
    t += o;
    return t;
  }
  TorusClass operator-(const TorusClass& o) const {
    TorusClass t = *this;
    t -= o;
    return t;
  }
  TorusClass operator*(const Rat& s) const;
  bool operator==(const TorusClass& o) const { return c == o.c; }

  std::string str() const;
};

TorusClass wedge(const TorusClass& x, const TorusClass& y);
Rat integrate(const TorusClass& x);

// Complementary monomial with sign, so that integrate(m ^ pd_dual(m)) = 1.
TorusClass pd_dual(Mono m);

// One Kuenneth summand of the diagonal pushforward.
struct SweedlerTerm {
  Rat coeff;
  Mono left;
  Mono right;
};

// tau_{2*}(a) as a sum of signed tensor pairs, characterized by
// sum_{terms} coeff * int(left^u) * int(right^v) * koszul = int(a^u^v)
// for all monomials u, v.
std::vector<SweedlerTerm> diagonal_sweedler(Mono a);
std::vector<SweedlerTerm> diagonal_sweedler(const TorusClass& a);

// Dual basis elements a_i^* in H^3 with integrate(a_i^* ^ a_i) = 1.
TorusClass a_star(int i);  // i in 1..4

// The six degree-2 monomials in a fixed order (the b_i of the tables).
const std::array<Mono, 6>& b_monomials();

std::string mono_str(Mono m);

}  // namespace genkummer::torus
