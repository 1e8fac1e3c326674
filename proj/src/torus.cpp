#include "genkummer/torus.hpp"

#include <sstream>

namespace genkummer::torus {

int wedge_sign(Mono p, Mono q) {
  if (p & q) return 0;
  // Count pairs (i in p, j in q) with i > j.
  int inv = 0;
  for (int i = 0; i < 4; ++i) {
    if (!(p >> i & 1)) continue;
    for (int j = 0; j < i; ++j)
      if (q >> j & 1) ++inv;
  }
  return (inv & 1) ? -1 : 1;
}

bool TorusClass::is_zero() const {
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

int TorusClass::degree() const {
  int d = -1;
  for (int m = 0; m < 16; ++m) {
    if (c[m] == 0) continue;
    int dm = mono_degree(Mono(m));
    if (d == -1)
      d = dm;
    else if (d != dm)
      return -1;
  }
  return d;
}

TorusClass TorusClass::homogeneous_part(int d) const {
  TorusClass t;
  for (int m = 0; m < 16; ++m)
    if (mono_degree(Mono(m)) == d) t.c[m] = c[m];
  return t;
}

TorusClass& TorusClass::operator+=(const TorusClass& o) {
  for (int m = 0; m < 16; ++m) c[m] += o.c[m];
  return *this;
}

TorusClass& TorusClass::operator-=(const TorusClass& o) {
  for (int m = 0; m < 16; ++m) c[m] -= o.c[m];
  return *this;
}

TorusClass TorusClass::operator-() const {
  TorusClass t;
  for (int m = 0; m < 16; ++m) t.c[m] = -c[m];
  return t;
}

TorusClass TorusClass::operator*(const Rat& s) const {
  TorusClass t;
  for (int m = 0; m < 16; ++m) t.c[m] = c[m] * s;
  return t;
}

TorusClass wedge(const TorusClass& x, const TorusClass& y) {
  TorusClass t;
  for (int p = 0; p < 16; ++p) {
    if (x.c[p] == 0) continue;
    for (int q = 0; q < 16; ++q) {
      if (y.c[q] == 0) continue;
      int s = wedge_sign(Mono(p), Mono(q));
      if (s) t.c[p | q] += x.c[p] * y.c[q] * s;
    }
  }
  return t;
}

Rat integrate(const TorusClass& x) { return x.c[kTop]; }

TorusClass pd_dual(Mono m) {
  Mono comp = Mono(kTop ^ m);
  int s = wedge_sign(m, comp);
  return TorusClass::monomial(comp, s);
}

std::vector<SweedlerTerm> diagonal_sweedler(Mono a) {
  // Solve <tau(a), u (x) v> = int(a^u^v) against the monomial pairs.
  // Each unknown component p (x) q pairs nontrivially with exactly one
  // (u,v) = (comp p, comp q), so the system is diagonal.
  std::vector<SweedlerTerm> out;
  TorusClass ca = TorusClass::monomial(a);
  for (int u = 0; u < 16; ++u) {
    for (int v = 0; v < 16; ++v) {
      Rat rhs = integrate(wedge(ca, wedge(TorusClass::monomial(Mono(u)),
                                          TorusClass::monomial(Mono(v)))));
      if (rhs == 0) continue;
      Mono p = Mono(kTop ^ u), q = Mono(kTop ^ v);
      // <p(x)q, u(x)v> = (-1)^{|q||u|} int(p^u) int(q^v)
      Rat pu = wedge_sign(p, Mono(u));
      Rat qv = wedge_sign(q, Mono(v));
      int koszul = (mono_degree(q) * mono_degree(Mono(u))) & 1 ? -1 : 1;
      Rat factor = pu * qv * koszul;
      out.push_back({rhs / factor, p, q});
    }
  }
  return out;
}

std::vector<SweedlerTerm> diagonal_sweedler(const TorusClass& a) {
  std::vector<SweedlerTerm> out;
  for (int m = 0; m < 16; ++m) {
    if (a.c[m] == 0) continue;
    for (auto t : diagonal_sweedler(Mono(m))) {
      t.coeff *= a.c[m];
      out.push_back(t);
    }
  }
  return out;
}

TorusClass a_star(int i) {
  // Left-normalized dual: integrate(a_i^* ^ a_i) = 1; this is the
  // convention under which the tabulated operator pairings come out with
  // the expected signs.
  Mono ai = Mono(1 << (i - 1));
  Mono comp = Mono(kTop ^ ai);
  return TorusClass::monomial(comp, wedge_sign(comp, ai));
}

const std::array<Mono, 6>& b_monomials() {
  static const std::array<Mono, 6> b = {0x3, 0x5, 0x9, 0x6, 0xA, 0xC};
  // a1a2, a1a3, a1a4, a2a3, a2a4, a3a4
  return b;
}

std::string mono_str(Mono m) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (m >> i & 1) s += "a" + std::to_string(i + 1);
  return s;
}

std::string TorusClass::str() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < 16; ++m) {
    if (c[m] == 0) continue;
    if (!first) os << " + ";
    os << c[m] << "*" << mono_str(Mono(m));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace genkummer::torus
