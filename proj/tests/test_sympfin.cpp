#include <doctest.h>

#include <set>

#include "genkummer/sympfin.hpp"

using namespace genkummer;
using namespace genkummer::sympfin;

TEST_CASE("plane counts, formulas vs enumeration") {
  for (int q : {2, 3, 5}) {
    SympSpace s{q, standard_form(q)};
    PlaneCounts f = plane_count_formulas(q);
    PlaneCounts b = plane_counts(s);
    CHECK(f.lines == b.lines);
    CHECK(f.planes == b.planes);
    CHECK(f.isotropic == b.isotropic);
    CHECK(f.nonisotropic == b.nonisotropic);
  }
  PlaneCounts q2 = plane_count_formulas(2);
  CHECK(q2.lines == 15);
  CHECK(q2.planes == 35);
  CHECK(q2.isotropic == 15);
  CHECK(q2.nonisotropic == 20);
  PlaneCounts q3 = plane_count_formulas(3);
  CHECK(q3.lines == 40);
  CHECK(q3.planes == 130);
  CHECK(q3.isotropic == 40);
  CHECK(q3.nonisotropic == 90);
  // 2-dimensional degenerate case: one plane, non-isotropic.
  PlaneCounts d2 = plane_count_formulas(5, 2);
  CHECK(d2.planes == 1);
  CHECK(d2.isotropic == 0);
  CHECK(d2.nonisotropic == 1);
}

TEST_CASE("triple formulation of F_2 planes") {
  SympSpace s{2, standard_form(2)};
  for (const auto& p : all_planes(s)) {
    auto pts = plane_points(s, p);
    std::vector<Vec4> nz;
    for (const auto& v : pts)
      if (v != Vec4{0, 0, 0, 0}) nz.push_back(v);
    REQUIRE(nz.size() == 3);
    Vec4 sum{};
    for (const auto& v : nz)
      for (int i = 0; i < 4; ++i) sum[i] = (sum[i] + v[i]) & 1;
    CHECK(sum == Vec4{0, 0, 0, 0});
    int w01 = s.omega(nz[0], nz[1]);
    CHECK(w01 == s.omega(nz[0], nz[2]));
    CHECK(w01 == s.omega(nz[1], nz[2]));
    CHECK(is_isotropic(s, p) == (w01 == 0));
  }
}

TEST_CASE("echelon span") {
  Echelon e(3, 4);
  CHECK(e.add({1, 2, 0, 0}));
  CHECK(e.add({0, 1, 1, 0}));
  CHECK_FALSE(e.add({1, 0, 1, 0}));  // 1*r1 - 2*r2 over F_3
  CHECK(e.dim() == 2);
  CHECK(e.contains({2, 0, 2, 0}));  // 2*r1 + 2*r2
  CHECK_FALSE(e.contains({2, 1, 2, 0}));
  CHECK_FALSE(e.contains({0, 0, 0, 1}));
  CHECK_FALSE(e.add(GFVec{0, 0, 0, 0}));
}

TEST_CASE("span closure is a fixed point of the generators") {
  SympSpace s{2, standard_form(2)};
  // Plane-sum ideal at q = 2 and one extra pass over every transvection.
  std::size_t n = 16;
  std::vector<GFVec> seeds;
  for (const auto& p : all_planes(s)) {
    if (is_isotropic(s, p)) continue;
    GFVec v(n, 0);
    for (const auto& pt : plane_points(s, p)) v[s.vec_index(pt)] = 1;
    seeds.push_back(v);
  }
  IdealDims dims = ideal_dims(s);
  CHECK(dims.dim_n == 11);
  CHECK(dims.dim_d == 5);
}

TEST_CASE("ideal dimensions over F_2 and F_3") {
  SympSpace s2{2, standard_form(2)};
  IdealDims d2 = ideal_dims(s2);
  CHECK(d2.dim_n == 11);
  CHECK(d2.dim_d == 5);
  CHECK(x_in_d_check(s2));

  SympSpace s3{3, standard_form(3)};
  IdealDims d3 = ideal_dims(s3);
  CHECK(d3.dim_n == 50);
  CHECK(d3.dim_d == 31);
  CHECK(x_in_d_check(s3));
}

TEST_CASE("combined representation dimensions") {
  SympSpace s2{2, standard_form(2)};
  CombinedDims c2 = combined_dims(s2);
  CHECK(c2.dim_o == 11);
  CHECK(c2.dim_u == 6);

  SympSpace s3{3, standard_form(3)};
  CombinedDims c3 = combined_dims(s3);
  CHECK(c3.dim_o == 51);
  CHECK(c3.dim_u == 20);
  CHECK(c3.ker_pr1 == 31);
  CHECK(c3.ker_pr2 == 1);
}

TEST_CASE("results agree between the two standard forms") {
  // The block form and the product form are conjugate, so every tabulated
  // dimension must coincide.
  for (int q : {2, 3}) {
    SympSpace a{q, standard_form(q)}, b{q, product_form(q)};
    IdealDims da = ideal_dims(a), db = ideal_dims(b);
    CHECK(da.dim_n == db.dim_n);
    CHECK(da.dim_d == db.dim_d);
  }
}

TEST_CASE("transitivity on non-isotropic planes") {
  for (int q : {2, 3}) {
    SympSpace s{q, standard_form(q)};
    PlaneCounts f = plane_count_formulas(q);
    for (const auto& p : all_planes(s))
      if (!is_isotropic(s, p)) {
        CHECK(plane_orbit_size(s, p) == f.nonisotropic);
        break;
      }
  }
}

TEST_CASE("empty and zero seeds give the empty span") {
  Echelon e = span_closure(3, 5, {}, {});
  CHECK(e.dim() == 0);
  CHECK_FALSE(e.contains({1, 0, 0, 0, 0}));
  Generator shift = [](const GFVec& v) {
    GFVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[(i + 1) % v.size()] = v[i];
    return out;
  };
  Echelon z = span_closure(3, 5, {GFVec(5, 0)}, {shift});
  CHECK(z.dim() == 0);
}

TEST_CASE("closure is unchanged under one more pass of every generator") {
  SympSpace s{2, standard_form(2)};
  std::size_t n = 16;
  std::vector<GFVec> seeds;
  for (const auto& p : all_planes(s)) {
    if (is_isotropic(s, p)) continue;
    GFVec v(n, 0);
    for (const auto& pt : plane_points(s, p)) v[s.vec_index(pt)] = 1;
    seeds.push_back(v);
  }
  // Transvection generators acting on the group algebra by permutation.
  std::vector<Generator> gens;
  for (const auto& w : line_representatives(s)) {
    std::vector<int> tab(n);
    for (int i = 0; i < int(n); ++i)
      tab[i] = s.vec_index(transvect(s, w, s.vec_of_index(i)));
    gens.push_back([tab](const GFVec& v) {
      GFVec out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out[tab[i]] = v[i];
      return out;
    });
  }
  Echelon e = span_closure(2, n, seeds, gens);
  for (const auto& row : e.rows())
    for (const auto& g : gens) CHECK(e.contains(g(row)));
}

TEST_CASE("gxi orbits on the 35 planes") {
  GxiOrbits g = gxi_orbits();
  REQUIRE(g.orbits.size() == 2);
  CHECK(g.orbits[0].size() == 5);
  CHECK(g.orbits[1].size() == 30);

  SympSpace s{2, product_form(2)};
  // The five-element orbit contains 0 x E[2].
  Plane zx = canonical_plane(s, {0, 0, 1, 0}, {0, 0, 0, 1});
  bool found = false;
  for (const auto& p : g.orbits[0])
    if (p == zx) found = true;
  CHECK(found);
}

TEST_CASE("q5 symplectic tables") {
  SympSpace s{5, standard_form(5)};
  IdealDims d = ideal_dims(s);
  CHECK(d.dim_n == 355);
  CHECK(d.dim_d == 270);
  CHECK(x_in_d_check(s));
  CombinedDims c = combined_dims(s);
  CHECK(c.dim_o == 375);
  CHECK(c.dim_u == 20);
}
