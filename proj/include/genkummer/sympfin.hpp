#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

// Symplectic geometry over F_q, q in {2,3,5}: plane enumeration, the group
// algebra k[V] with its ideals (M), (N) and D, the combined representation
// Sym^2(Lambda^2 V) + k[V] under Sp(4,q), and the G_xi orbit computation on
// the planes of F_2^4.
namespace genkummer::sympfin {

using Vec4 = std::array<int, 4>;
using FormMat = std::array<std::array<int, 4>, 4>;

// Block form ((0,I),(-I,0)): omega(x,y) = x1 y3 + x2 y4 - x3 y1 - x4 y2.
FormMat standard_form(int q);
// Hyperbolic-pair form pairing coordinates (1,2) and (3,4); this is the
// form induced on the 3-torsion of a product of elliptic curves and is the
// one used for the H^4 glue dictionary.
FormMat product_form(int q);

struct SympSpace {
  int q;
  FormMat form;

  int omega(const Vec4& x, const Vec4& y) const;
  int vec_index(const Vec4& v) const;  // base-q, v[0] most significant
  Vec4 vec_of_index(int idx) const;
};

// A plane as its canonical (row-reduced) basis pair.
struct Plane {
  Vec4 u, v;
  auto operator<=>(const Plane&) const = default;
};

Plane canonical_plane(const SympSpace& s, const Vec4& a, const Vec4& b);
bool is_isotropic(const SympSpace& s, const Plane& p);
std::vector<Vec4> plane_points(const SympSpace& s, const Plane& p);
std::vector<Plane> all_planes(const SympSpace& s);

struct PlaneCounts {
  long lines, planes, isotropic, nonisotropic;
};
// Closed-form counts for dim in {2,4}; checked against brute force.
PlaneCounts plane_count_formulas(int q, int dim = 4);
PlaneCounts plane_counts(const SympSpace& s);

// Dense F_q row-echelon span with exact membership tests.
class Echelon {
 public:
  Echelon(int q, std::size_t len);
  // Reduces v against the basis; if nonzero, inserts it and returns true.
  bool add(std::vector<std::int16_t> v);
  bool contains(std::vector<std::int16_t> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return len_; }
  const std::vector<std::vector<std::int16_t>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<std::int16_t>& v) const;
  int q_;
  std::size_t len_;
  std::vector<std::vector<std::int16_t>> rows_;  // fully reduced, pivot 1
  std::vector<int> pivots_;
};

using GFVec = std::vector<std::int16_t>;
using Generator = std::function<GFVec(const GFVec&)>;

// Span of the orbit of the seeds under the group generated by gens
// (worklist closure; every basis vector sees every generator).
Echelon span_closure(int q, std::size_t len, const std::vector<GFVec>& seeds,
                     const std::vector<Generator>& gens);

// Transvection t_w: u -> u + omega(u,w) w. Throws if it fails to preserve
// the form.
Vec4 transvect(const SympSpace& s, const Vec4& w, const Vec4& u);

// One representative per line; their powers give every transvection.
std::vector<Vec4> line_representatives(const SympSpace& s);

struct IdealDims {
  long dim_n, dim_d;
};
// dim (N) and dim D = m(N); also asserts (M) = (N) and that the two
// constructions of D (difference span / ideal product) agree.
IdealDims ideal_dims(const SympSpace& s);

// X = sum_i X_i lies in D.
bool x_in_d_check(const SympSpace& s);

struct CombinedDims {
  long dim_o, dim_u, ker_pr1, ker_pr2;
};
// Sp-span closures of x = (v^w)^2 and of x + translates of y; kernels of
// the two projections. Asserts pr1(O) = U and pr2(O) = (N), and that the
// result does not depend on the hyperbolic pair chosen for (v,w).
CombinedDims combined_dims(const SympSpace& s);

// Sp(4,q)-orbit of a plane under transvections (for the transitivity check).
long plane_orbit_size(const SympSpace& s, const Plane& start);

struct GxiOrbits {
  std::vector<std::vector<Plane>> orbits;  // sorted by size
};
// The three generators (xi, 1), swap, and the shear (z1,z2) -> (z1+z2,z2)
// on F_2^4 = E[2] x E[2], with the xi-multiplication matrix derived from
// xi^2 = xi - 1.
std::vector<std::function<Vec4(const Vec4&)>> gxi_generators();
// Orbits of that group on the 35 planes.
GxiOrbits gxi_orbits();

}  // namespace genkummer::sympfin
