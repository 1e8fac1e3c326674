#include "genkummer/intlat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace genkummer::intlat {

IntMat int_identity(std::size_t n) {
  IntMat a(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

RatMat rat_identity(std::size_t n) {
  RatMat a(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  std::size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
  IntMat c(m, IntVec(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  std::size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
  RatMat c(m, RatVec(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatMat rat_from_int(const IntMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = RatVec(a[i].begin(), a[i].end());
  return r;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMat transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Int bareiss_det(IntMat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = t / prev;  // exact division (Bareiss)
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rat rat_det(RatMat a) {
  std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    Rat inv = Rat(1) / a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

RatMat solve_left(const RatMat& a, const RatMat& rhs) {
  // Solve x * a = rhs exactly for a matrix a of full row rank (the rows
  // form a basis of their span); throws if rhs leaves the row span.
  std::size_t k = a.size(), n = k ? a[0].size() : 0;
  RatMat r = a, t = rat_identity(k);  // invariant: r = t * a
  std::vector<std::size_t> pivot_col(k);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < k; ++c) {
    std::size_t p = row;
    while (p < k && r[p][c] == 0) ++p;
    if (p == k) continue;
    std::swap(r[p], r[row]);
    std::swap(t[p], t[row]);
    Rat inv = Rat(1) / r[row][c];
    for (std::size_t j = 0; j < n; ++j) r[row][j] *= inv;
    for (std::size_t j = 0; j < k; ++j) t[row][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || r[i][c] == 0) continue;
      Rat f = r[i][c];
      for (std::size_t j = 0; j < n; ++j) r[i][j] -= f * r[row][j];
      for (std::size_t j = 0; j < k; ++j) t[i][j] -= f * t[row][j];
    }
    pivot_col[row] = c;
    ++row;
  }
  if (row != k) throw std::runtime_error("solve_left: rank-deficient matrix");

  RatMat out(rhs.size(), RatVec(k, 0));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    // Coordinates against the reduced rows, then back through t.
    RatVec y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = rhs[i][pivot_col[j]];
    for (std::size_t j = 0; j < k; ++j) {
      Rat acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc += y[l] * t[l][j];
      out[i][j] = acc;
    }
    // Consistency: the candidate must reproduce rhs exactly.
    for (std::size_t c = 0; c < n; ++c) {
      Rat acc = 0;
      for (std::size_t l = 0; l < k; ++l)
        if (out[i][l] != 0) acc += out[i][l] * a[l][c];
      if (acc != rhs[i][c])
        throw std::runtime_error("solve_left: rhs outside the row span");
    }
  }
  return out;
}

RatMat rat_inverse(const RatMat& a) {
  return solve_left(a, rat_identity(a.size()));
}

std::size_t rat_rank(RatMat a) {
  std::size_t rank = 0, rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    Rat inv = Rat(1) / a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// In-place SNF of a; u, v optional accumulators.
void snf_inplace(IntMat& a, IntMat* u, IntMat* v) {
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (u) std::swap((*u)[i], (*u)[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    if (v)
      for (std::size_t r = 0; r < n; ++r) std::swap((*v)[r][i], (*v)[r][j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    if (u)
      for (std::size_t j = 0; j < m; ++j) (*u)[dst][j] += f * (*u)[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < m; ++r) a[r][dst] += f * a[r][src];
    if (v)
      for (std::size_t r = 0; r < n; ++r) (*v)[r][dst] += f * (*v)[r][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : a[i]) x = -x;
    if (u)
      for (auto& x : (*u)[i]) x = -x;
  };

  std::size_t k = 0;
  while (k < m && k < n) {
    // Pick the pivot of smallest absolute value in the trailing block.
    std::size_t pi = m, pj = n;
    Int best = 0;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Int v2 = abs_int(a[i][j]);
        if (best == 0 || v2 < best) {
          best = v2;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    if (pi != k) swap_rows(k, pi);
    if (pj != k) swap_cols(k, pj);

    bool clean = true;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (a[i][k] == 0) continue;
      Int q = a[i][k] / a[k][k];
      if (q != 0) add_row(i, k, -q);
      if (a[i][k] != 0) clean = false;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a[k][j] == 0) continue;
      Int q = a[k][j] / a[k][k];
      if (q != 0) add_col(j, k, -q);
      if (a[k][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pick pivot

    // Enforce divisibility of the remaining block by the pivot.
    bool fixed = false;
    for (std::size_t i = k + 1; i < m && !fixed; ++i)
      for (std::size_t j = k + 1; j < n && !fixed; ++j)
        if (a[i][j] % a[k][k] != 0) {
          add_row(k, i, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (a[k][k] < 0) negate_row(k);
    ++k;
  }
}

}  // namespace

SnfResult snf(const IntMat& m) {
  SnfResult r;
  r.d = m;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  r.u = int_identity(rows);
  r.v = int_identity(cols);
  snf_inplace(r.d, &r.u, &r.v);
  // Postconditions, on every call.
  if (int_mul(int_mul(r.u, m), r.v) != r.d)
    throw std::logic_error("snf: u*m*v != d");
  if (abs_int(bareiss_det(r.u)) != 1 || abs_int(bareiss_det(r.v)) != 1)
    throw std::logic_error("snf: transformation not unimodular");
  return r;
}

std::vector<Int> snf_diagonal(IntMat m) {
  snf_inplace(m, nullptr, nullptr);
  std::vector<Int> d;
  for (std::size_t i = 0; i < m.size() && i < (m.empty() ? 0 : m[0].size());
       ++i)
    d.push_back(m[i][i]);
  return d;
}

IntMat row_basis(const IntMat& m) {
  // rowspan(m) = rowspan(u*m) and u*m has the nonzero rows on top after
  // SNF of the transposed elimination; use HNF-style elimination instead.
  IntMat a = m;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c below row r
    while (true) {
      std::size_t p = rows;
      Int best = 0;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int v = abs_int(a[i][c]);
        if (best == 0 || v < best) {
          best = v;
          p = i;
        }
      }
      if (p == rows) break;
      std::swap(a[r], a[p]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] != 0) {
      if (a[r][c] < 0)
        for (auto& x : a[r]) x = -x;
      // reduce entries above the pivot
      for (std::size_t i = 0; i < r; ++i) {
        Int q = a[i][c] / a[r][c];
        if (a[i][c] < 0 && a[i][c] % a[r][c] != 0) q -= 1;
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
      }
      ++r;
    }
  }
  a.resize(r);
  return a;
}

IntMat saturate_rows(const IntMat& m) {
  // rowspan_Q(m) cap Z^n: with u*m*v = d (k nonzero invariant factors),
  // the saturation is spanned by the first k rows of v^{-1}... equivalently
  // rows of d_reduced * v^{-1} with unit factors. We avoid inverting v by
  // eliminating over Q and saturating the Hermite basis.
  IntMat b = row_basis(m);
  if (b.empty()) return b;
  // Solve for the primitive basis: saturation = {x in Z^n : x in span_Q(b)}.
  // Compute via SNF of b: u b v = d => span_Q(b) = span_Q(rows of d v^-1)
  // => saturation basis rows = first k rows of v^{-1} scaled to units.
  SnfResult s = snf(b);
  // v^{-1}: solve v * vinv = I over the integers via rational solve.
  RatMat vinv = rat_inverse(rat_from_int(s.v));
  std::size_t k = b.size(), n = b[0].size();
  IntMat out(k, IntVec(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& val = vinv[i][j];  // row i of v^{-1}
      if (!is_integer(val)) throw std::logic_error("saturate_rows: non-integer");
      out[i][j] = rat_num(val);
    }
  return row_basis(out);
}

std::vector<Int> quotient_invariants(const IntMat& sub_in_sup) {
  std::vector<Int> d = snf_diagonal(sub_in_sup);
  std::vector<Int> out;
  for (auto& x : d) {
    Int v = abs_int(x);
    if (v == 0) throw std::runtime_error("quotient_invariants: not full rank");
    if (v != 1) out.push_back(v);
  }
  return out;
}

bool IntLattice::is_integral() const {
  for (const auto& row : gram)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

Int IntLattice::discr() const {
  Rat d = rat_det(gram);
  if (d == 0) throw std::runtime_error("discr: degenerate lattice");
  if (!is_integer(d)) throw std::runtime_error("discr: non-integral determinant");
  Int n = rat_num(d);
  return n < 0 ? Int(-n) : n;
}

RatMat Sublattice::gram_matrix() const {
  return rat_mul(rat_mul(basis, *gram), transpose(basis));
}

Int Sublattice::discr() const {
  IntLattice l;
  l.gram = gram_matrix();
  return l.discr();
}

Int index_of(const Sublattice& sub, const Sublattice& sup) {
  if (sub.basis.size() != sup.basis.size())
    throw std::runtime_error("index_of: ranks differ");
  RatMat coords = solve_left(sup.basis, sub.basis);  // sub = coords * sup
  for (auto& row : coords)
    for (auto& x : row)
      if (!is_integer(x))
        throw std::runtime_error("index_of: not a sublattice");
  Rat det = rat_det(coords);
  Int by_coords = rat_num(det);
  if (by_coords < 0) by_coords = -by_coords;
  // Discriminant route: |M:L| = sqrt(discr L / discr M).
  Int dl = sub.discr(), dm = sup.discr();
  if (dl % dm != 0 || by_coords * by_coords * dm != dl)
    throw std::logic_error("index_of: discriminant route disagrees");
  return by_coords;
}

RatMat lattice_row_basis(const RatMat& gens) {
  Int den = 1;
  for (const auto& row : gens)
    for (const auto& x : row) den = boost::multiprecision::lcm(den, rat_den(x));
  IntMat scaled(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    scaled[i].resize(gens[i].size());
    for (std::size_t j = 0; j < gens[i].size(); ++j) {
      Rat v = gens[i][j] * den;
      scaled[i][j] = rat_num(v);
    }
  }
  IntMat basis = row_basis(scaled);
  RatMat out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i].resize(basis[i].size());
    for (std::size_t j = 0; j < basis[i].size(); ++j)
      out[i][j] = Rat(basis[i][j], den);
  }
  return out;
}

Sublattice add_glue(const Sublattice& l, const RatMat& glue) {
  // Precondition: integral pairings of glue with the lattice and itself.
  for (std::size_t g = 0; g < glue.size(); ++g) {
    RatMat gv{glue[g]};
    RatMat against_l = rat_mul(rat_mul(gv, *l.gram), transpose(l.basis));
    for (const auto& x : against_l[0])
      if (!is_integer(x))
        throw std::runtime_error("add_glue: glue vector " + std::to_string(g) +
                                 " pairs non-integrally with the lattice");
    for (std::size_t h = 0; h <= g; ++h) {
      RatMat hv{glue[h]};
      RatMat p = rat_mul(rat_mul(gv, *l.gram), transpose(hv));
      if (!is_integer(p[0][0]))
        throw std::runtime_error("add_glue: glue vectors " + std::to_string(g) +
                                 "," + std::to_string(h) +
                                 " pair non-integrally");
    }
  }
  RatMat gens = l.basis;
  for (const auto& g : glue) gens.push_back(g);
  Sublattice out;
  out.basis = lattice_row_basis(gens);
  out.gram = l.gram;
  return out;
}

RatMat saturate(const RatMat& sub, const RatMat& ambient_basis) {
  // Express sub in ambient coordinates (must be integral), saturate there,
  // and map back.
  RatMat coords = solve_left(ambient_basis, sub);
  IntMat icoords(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    icoords[i].resize(coords[i].size());
    for (std::size_t j = 0; j < coords[i].size(); ++j) {
      if (!is_integer(coords[i][j]))
        throw std::runtime_error("saturate: sub not inside ambient lattice");
      icoords[i][j] = rat_num(coords[i][j]);
    }
  }
  IntMat sat = saturate_rows(icoords);
  return rat_mul(rat_from_int(sat), ambient_basis);
}

std::vector<Int> quotient_invariants(const RatMat& sub, const RatMat& sup) {
  RatMat coords = solve_left(sup, sub);
  IntMat icoords(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    icoords[i].resize(coords[i].size());
    for (std::size_t j = 0; j < coords[i].size(); ++j) {
      if (!is_integer(coords[i][j]))
        throw std::runtime_error("quotient_invariants: not a sublattice");
      icoords[i][j] = rat_num(coords[i][j]);
    }
  }
  return quotient_invariants(icoords);
}

namespace {

// Saturated left kernel of an integer matrix (rows x acting as x*m = 0).
IntMat left_kernel(const IntMat& m);

}  // namespace

RatMat orthogonal_complement(const RatMat& sub, const Sublattice& l) {
  // Pairings of the lattice basis against sub; clear denominators and take
  // the saturated integer kernel in lattice coordinates.
  RatMat p = rat_mul(rat_mul(l.basis, *l.gram), transpose(sub));
  Int den = 1;
  for (const auto& row : p)
    for (const auto& x : row) den = boost::multiprecision::lcm(den, rat_den(x));
  IntMat pi(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    pi[i].resize(p[i].size());
    for (std::size_t j = 0; j < p[i].size(); ++j)
      pi[i][j] = rat_num(p[i][j] * den);
  }
  IntMat kern = left_kernel(pi);
  return rat_mul(rat_from_int(kern), l.basis);
}

namespace {

IntMat left_kernel(const IntMat& m) {
  SnfResult s = snf(m);
  std::size_t rows = m.size();
  IntMat out;
  for (std::size_t i = 0; i < rows; ++i) {
    bool zero = i >= s.d.size() || i >= (s.d.empty() ? 0 : s.d[0].size()) ||
                s.d[i][i] == 0;
    if (zero) out.push_back(s.u[i]);
  }
  return out;
}

}  // namespace

EquivariantRanks equivariant_decompose(const InvolutionModule& m) {
  std::size_t n = m.action.size();
  if (int_mul(m.action, m.action) != int_identity(n))
    throw std::runtime_error("equivariant_decompose: action^2 != id");
  // Isometry check.
  IntMat g = m.gram;
  if (int_mul(int_mul(m.action, g), transpose(m.action)) != g)
    throw std::runtime_error("equivariant_decompose: action not an isometry");

  IntMat plus = m.action, minus = m.action;
  for (std::size_t i = 0; i < n; ++i) {
    plus[i][i] -= 1;   // kernel of (T - 1) = invariants
    minus[i][i] += 1;  // kernel of (T + 1) = anti-invariants
  }
  IntMat inv = left_kernel(plus);
  IntMat anti = left_kernel(minus);
  if (inv.size() + anti.size() != n)
    throw std::logic_error("equivariant_decompose: rank mismatch");

  IntMat stacked = inv;
  for (const auto& r : anti) stacked.push_back(r);
  std::vector<Int> factors = quotient_invariants(stacked);
  long r = 0;
  for (const auto& f : factors) {
    if (f != 2)
      throw std::logic_error("equivariant_decompose: non-2 invariant factor");
    ++r;
  }
  return {r, long(anti.size()) - r, long(inv.size()) - r};
}

}  // namespace genkummer::intlat
