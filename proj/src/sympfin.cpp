#include "genkummer/sympfin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace genkummer::sympfin {

namespace {

int mod(int x, int q) {
  int r = x % q;
  return r < 0 ? r + q : r;
}

int inv_mod(int x, int q) {
  for (int y = 1; y < q; ++y)
    if (mod(x * y, q) == 1) return y;
  throw std::logic_error("inv_mod");
}

}  // namespace

FormMat standard_form(int q) {
  FormMat f{};
  f[0][2] = 1;
  f[1][3] = 1;
  f[2][0] = q - 1;
  f[3][1] = q - 1;
  return f;
}

FormMat product_form(int q) {
  FormMat f{};
  f[0][1] = 1;
  f[1][0] = q - 1;
  f[2][3] = 1;
  f[3][2] = q - 1;
  return f;
}

int SympSpace::omega(const Vec4& x, const Vec4& y) const {
  int s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += x[i] * form[i][j] * y[j];
  return mod(s, q);
}

int SympSpace::vec_index(const Vec4& v) const {
  return ((v[0] * q + v[1]) * q + v[2]) * q + v[3];
}

Vec4 SympSpace::vec_of_index(int idx) const {
  Vec4 v;
  v[3] = idx % q;
  idx /= q;
  v[2] = idx % q;
  idx /= q;
  v[1] = idx % q;
  idx /= q;
  v[0] = idx % q;
  return v;
}

Plane canonical_plane(const SympSpace& s, const Vec4& a, const Vec4& b) {
  // Row-reduce the 2x4 matrix (a; b) over F_q.
  std::array<Vec4, 2> m = {a, b};
  int q = s.q;
  int row = 0;
  for (int col = 0; col < 4 && row < 2; ++col) {
    int p = -1;
    for (int r = row; r < 2; ++r)
      if (mod(m[r][col], q)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    int inv = inv_mod(mod(m[row][col], q), q);
    for (int j = 0; j < 4; ++j) m[row][j] = mod(m[row][j] * inv, q);
    for (int r = 0; r < 2; ++r) {
      if (r == row) continue;
      int f = mod(m[r][col], q);
      if (f)
        for (int j = 0; j < 4; ++j) m[r][j] = mod(m[r][j] - f * m[row][j], q);
    }
    ++row;
  }
  if (row != 2) throw std::invalid_argument("canonical_plane: dependent pair");
  return {m[0], m[1]};
}

bool is_isotropic(const SympSpace& s, const Plane& p) {
  return s.omega(p.u, p.v) == 0;
}

std::vector<Vec4> plane_points(const SympSpace& s, const Plane& p) {
  std::vector<Vec4> pts;
  for (int a = 0; a < s.q; ++a)
    for (int b = 0; b < s.q; ++b) {
      Vec4 v;
      for (int j = 0; j < 4; ++j) v[j] = mod(a * p.u[j] + b * p.v[j], s.q);
      pts.push_back(v);
    }
  return pts;
}

std::vector<Plane> all_planes(const SympSpace& s) {
  std::set<Plane> seen;
  int n = s.q * s.q * s.q * s.q;
  for (int i = 1; i < n; ++i) {
    Vec4 a = s.vec_of_index(i);
    for (int j = i + 1; j < n; ++j) {
      Vec4 b = s.vec_of_index(j);
      // independence: b not proportional to a
      bool dep = false;
      for (int l = 1; l < s.q && !dep; ++l) {
        bool eq = true;
        for (int t = 0; t < 4; ++t)
          if (mod(l * a[t], s.q) != b[t]) eq = false;
        if (eq) dep = true;
      }
      if (dep) continue;
      seen.insert(canonical_plane(s, a, b));
    }
  }
  return {seen.begin(), seen.end()};
}

PlaneCounts plane_count_formulas(int q, int dim) {
  auto ipow = [](long b, int e) {
    long r = 1;
    while (e--) r *= b;
    return r;
  };
  long qn = ipow(q, dim);
  PlaneCounts c;
  c.lines = (qn - 1) / (q - 1);
  c.planes = (qn - 1) * (ipow(q, dim - 1) - 1) / ((q * q - 1) * (q - 1));
  c.isotropic = (qn - 1) * (ipow(q, dim - 2) - 1) / ((q * q - 1) * (q - 1));
  c.nonisotropic = ipow(q, dim - 2) * (qn - 1) / (q * q - 1);
  return c;
}

PlaneCounts plane_counts(const SympSpace& s) {
  PlaneCounts c{};
  int n = s.q * s.q * s.q * s.q;
  c.lines = (n - 1) / (s.q - 1);
  auto planes = all_planes(s);
  c.planes = long(planes.size());
  for (const auto& p : planes)
    (is_isotropic(s, p) ? c.isotropic : c.nonisotropic)++;
  return c;
}

Echelon::Echelon(int q, std::size_t len) : q_(q), len_(len) {
  // reduce() accumulates up to q + rank*(q-1)^2 in int16 entries.
  if (len * std::size_t((q - 1) * (q - 1)) + q > 32000)
    throw std::invalid_argument("Echelon: dimension too large for int16");
}

void Echelon::reduce(std::vector<std::int16_t>& v) const {
  // Rows are cross-reduced: each has 1 at its own pivot and 0 at every
  // other pivot, so the pivot coefficients of v are independent of the
  // subtraction order and entries may accumulate un-reduced (bounded by
  // q + rows * (q-1)^2, well inside int16).
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int f = mod(v[pivots_[r]], q_);
    if (!f) continue;
    const std::int16_t* row = rows_[r].data();
    std::int16_t* out = v.data();
    const std::int16_t ff = std::int16_t(f);
    for (std::size_t j = 0; j < len_; ++j) out[j] -= ff * row[j];
  }
  for (auto& x : v) x = std::int16_t(mod(x, q_));
}

bool Echelon::add(std::vector<std::int16_t> v) {
  if (v.size() != len_) throw std::invalid_argument("Echelon: length");
  reduce(v);
  std::size_t p = len_;
  for (std::size_t j = 0; j < len_; ++j)
    if (v[j]) {
      p = j;
      break;
    }
  if (p == len_) return false;
  int inv = inv_mod(v[p], q_);
  for (auto& x : v) x = std::int16_t(mod(x * inv, q_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int f = rows_[r][p];
    if (!f) continue;
    auto& row = rows_[r];
    for (std::size_t j = 0; j < len_; ++j)
      row[j] = std::int16_t(mod(row[j] - f * v[j], q_));
  }
  pivots_.push_back(int(p));
  rows_.push_back(std::move(v));
  return true;
}

bool Echelon::contains(std::vector<std::int16_t> v) const {
  reduce(v);
  for (auto x : v)
    if (x) return false;
  return true;
}

Echelon span_closure(int q, std::size_t len, const std::vector<GFVec>& seeds,
                     const std::vector<Generator>& gens) {
  Echelon e(q, len);
  std::vector<GFVec> work;
  for (const auto& s : seeds)
    if (e.add(s)) work.push_back(e.rows().back());
  while (!work.empty()) {
    GFVec v = std::move(work.back());
    work.pop_back();
    for (const auto& g : gens) {
      GFVec img = g(v);
      if (e.add(img)) work.push_back(e.rows().back());
    }
  }
  return e;
}

Vec4 transvect(const SympSpace& s, const Vec4& w, const Vec4& u) {
  int c = s.omega(u, w);
  Vec4 r;
  for (int j = 0; j < 4; ++j) r[j] = mod(u[j] + c * w[j], s.q);
  return r;
}

std::vector<Vec4> line_representatives(const SympSpace& s) {
  std::vector<Vec4> reps;
  std::set<int> seen;
  int n = s.q * s.q * s.q * s.q;
  for (int i = 1; i < n; ++i) {
    if (seen.count(i)) continue;
    Vec4 v = s.vec_of_index(i);
    for (int l = 1; l < s.q; ++l) {
      Vec4 w;
      for (int j = 0; j < 4; ++j) w[j] = mod(l * v[j], s.q);
      seen.insert(s.vec_index(w));
    }
    reps.push_back(v);
  }
  // Every transvection preserves the form; check each representative on
  // the standard basis (a failure here means the form data is corrupt).
  for (const auto& w : reps)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Vec4 ei{}, ej{};
        ei[i] = 1;
        ej[j] = 1;
        if (s.omega(transvect(s, w, ei), transvect(s, w, ej)) !=
            s.omega(ei, ej))
          throw std::logic_error("transvection does not preserve the form");
      }
  return reps;
}

namespace {

// Group algebra helpers: vectors of length q^4 indexed by V.
GFVec plane_sum(const SympSpace& s, const Plane& p, std::size_t len,
                std::size_t offset = 0) {
  GFVec v(len, 0);
  for (const auto& pt : plane_points(s, p)) v[offset + s.vec_index(pt)] = 1;
  return v;
}

std::vector<int> shift_table(const SympSpace& s, const Vec4& t) {
  int n = s.q * s.q * s.q * s.q;
  std::vector<int> tab(n);
  for (int i = 0; i < n; ++i) {
    Vec4 v = s.vec_of_index(i);
    for (int j = 0; j < 4; ++j) v[j] = mod(v[j] + t[j], s.q);
    tab[i] = s.vec_index(v);
  }
  return tab;
}

GFVec apply_perm(const std::vector<int>& tab, const GFVec& v,
                 std::size_t offset) {
  GFVec out = v;
  for (std::size_t i = 0; i < tab.size(); ++i)
    out[offset + tab[i]] = v[offset + i];
  return out;
}

// Echelon of the ideal generated by the given group-algebra elements
// (= closure of their span under the four coordinate translations).
Echelon ideal_closure(const SympSpace& s, const std::vector<GFVec>& gens) {
  int n = s.q * s.q * s.q * s.q;
  std::vector<Generator> shifts;
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1;
    auto tab = shift_table(s, e);
    shifts.push_back(
        [tab](const GFVec& v) { return apply_perm(tab, v, 0); });
  }
  return span_closure(s.q, std::size_t(n), gens, shifts);
}

// 4x4 symplectic matrix of the transvection along w.
std::array<Vec4, 4> transvection_matrix(const SympSpace& s, const Vec4& w) {
  std::array<Vec4, 4> m;  // columns m[j] = image of e_j
  for (int j = 0; j < 4; ++j) {
    Vec4 ej{};
    ej[j] = 1;
    m[j] = transvect(s, w, ej);
  }
  return m;
}

// Induced 21x21 matrix on Sym^2(Lambda^2 V) plus index permutation on k[V].
struct CombinedAction {
  std::array<std::array<int, 21>, 21> sym;  // sym[r][c]
  std::vector<int> perm;
};

constexpr std::array<std::pair<int, int>, 6> kWedgeBasis = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<std::pair<int, int>, 21> sym_basis() {
  std::array<std::pair<int, int>, 21> b;
  int t = 0;
  for (int a = 0; a < 6; ++a)
    for (int c = a; c < 6; ++c) b[t++] = {a, c};
  return b;
}

CombinedAction combined_action(const SympSpace& s, const Vec4& w) {
  auto mcols = transvection_matrix(s, w);
  int q = s.q;
  // Lambda^2: columns indexed by (i<j), rows by (k<l).
  std::array<std::array<int, 6>, 6> lam{};
  for (int c = 0; c < 6; ++c) {
    auto [i, j] = kWedgeBasis[c];
    for (int r = 0; r < 6; ++r) {
      auto [k, l] = kWedgeBasis[r];
      lam[r][c] = mod(mcols[i][k] * mcols[j][l] - mcols[i][l] * mcols[j][k], q);
    }
  }
  CombinedAction act;
  auto sb = sym_basis();
  for (int c = 0; c < 21; ++c) {
    auto [a, b] = sb[c];
    std::array<int, 21> col{};
    // (sum_k lam[k][a] f_k)(sum_l lam[l][b] f_l)
    for (int k = 0; k < 6; ++k)
      for (int l = 0; l < 6; ++l) {
        int coeff = lam[k][a] * lam[l][b];
        if (!coeff) continue;
        int idx;
        int lo = std::min(k, l), hi = std::max(k, l);
        idx = 0;
        for (int t = 0; t < 21; ++t)
          if (sb[t] == std::make_pair(lo, hi)) {
            idx = t;
            break;
          }
        col[idx] = mod(col[idx] + coeff, q);
      }
    for (int r = 0; r < 21; ++r) act.sym[r][c] = col[r];
  }
  act.perm.resize(q * q * q * q);
  for (int i = 0; i < q * q * q * q; ++i) {
    Vec4 v = s.vec_of_index(i);
    Vec4 img{};
    for (int j = 0; j < 4; ++j)
      for (int t = 0; t < 4; ++t) img[t] = mod(img[t] + v[j] * mcols[j][t], q);
    act.perm[i] = s.vec_index(img);
  }
  return act;
}

GFVec apply_combined(const CombinedAction& a, const GFVec& v, int q,
                     bool sym_only) {
  GFVec out(v.size(), 0);
  for (int r = 0; r < 21; ++r) {
    int acc = 0;
    for (int c = 0; c < 21; ++c) acc += a.sym[r][c] * v[c];
    out[r] = std::int16_t(mod(acc, q));
  }
  if (!sym_only)
    for (std::size_t i = 0; i < a.perm.size(); ++i)
      out[21 + a.perm[i]] = v[21 + i];
  return out;
}

// Coordinates of (v ^ w)^2 in Sym^2(Lambda^2).
GFVec x_vector(const SympSpace& s, const Vec4& v, const Vec4& w,
               std::size_t len) {
  int q = s.q;
  std::array<int, 6> lam{};
  for (int c = 0; c < 6; ++c) {
    auto [i, j] = kWedgeBasis[c];
    lam[c] = mod(v[i] * w[j] - v[j] * w[i], q);
  }
  GFVec out(len, 0);
  auto sb = sym_basis();
  for (int t = 0; t < 21; ++t) {
    auto [a, b] = sb[t];
    out[t] = std::int16_t(a == b ? mod(lam[a] * lam[a], q)
                                 : mod(2 * lam[a] * lam[b], q));
  }
  return out;
}

std::pair<Vec4, Vec4> standard_hyperbolic_pair(const SympSpace& s,
                                               bool second = false) {
  // i < j so that the "second" pair spans a genuinely different plane.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Vec4 ei{}, ej{};
      ei[i] = 1;
      ej[j] = 1;
      if (s.omega(ei, ej) == 1) {
        if (second) {
          second = false;
          continue;
        }
        return {ei, ej};
      }
    }
  throw std::logic_error("no hyperbolic basis pair");
}

struct CombinedSetup {
  std::vector<CombinedAction> gens;
  std::size_t len;
};

CombinedSetup combined_setup(const SympSpace& s) {
  CombinedSetup cs;
  cs.len = 21 + std::size_t(s.q) * s.q * s.q * s.q;
  for (const auto& w : line_representatives(s))
    cs.gens.push_back(combined_action(s, w));
  return cs;
}

long closure_dim(const SympSpace& s, const CombinedSetup& cs,
                 const std::vector<GFVec>& seeds, bool sym_only,
                 Echelon* out = nullptr) {
  std::vector<Generator> gens;
  for (const auto& a : cs.gens)
    gens.push_back([&a, q = s.q, sym_only](const GFVec& v) {
      return apply_combined(a, v, q, sym_only);
    });
  Echelon e = span_closure(s.q, seeds.empty() ? cs.len : seeds[0].size(),
                           seeds, gens);
  long d = long(e.dim());
  if (out) *out = std::move(e);
  return d;
}

}  // namespace

IdealDims ideal_dims(const SympSpace& s) {
  std::size_t n = std::size_t(s.q) * s.q * s.q * s.q;
  std::vector<GFVec> nseeds, mseeds;
  for (const auto& p : all_planes(s)) {
    GFVec v = plane_sum(s, p, n);
    mseeds.push_back(v);
    if (!is_isotropic(s, p)) nseeds.push_back(std::move(v));
  }
  Echelon en = ideal_closure(s, nseeds);
  Echelon em = ideal_closure(s, mseeds);
  if (en.dim() != em.dim())
    throw std::logic_error("ideal_dims: (M) != (N)");

  // D = m * (N), spanned by (X_{e_i} - 1) applied to a basis of (N).
  Echelon d(s.q, n);
  std::vector<std::vector<int>> shifts;
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1;
    shifts.push_back(shift_table(s, e));
  }
  for (const auto& b : en.rows())
    for (const auto& tab : shifts) {
      GFVec img = apply_perm(tab, b, 0);
      for (std::size_t j = 0; j < n; ++j)
        img[j] = std::int16_t(mod(img[j] - b[j], s.q));
      d.add(std::move(img));
    }

  // Difference-span construction: span{X_v n_P - n_P}; must agree with D.
  Echelon ddiff(s.q, n);
  std::vector<std::vector<int>> all_shifts;
  for (std::size_t i = 1; i < n; ++i)
    all_shifts.push_back(shift_table(s, s.vec_of_index(int(i))));
  bool done = false;
  for (const auto& sv : nseeds) {
    for (const auto& tab : all_shifts) {
      GFVec img = apply_perm(tab, sv, 0);
      for (std::size_t j = 0; j < n; ++j)
        img[j] = std::int16_t(mod(img[j] - sv[j], s.q));
      ddiff.add(std::move(img));
      if (ddiff.dim() == d.dim()) {
        done = true;
        break;
      }
    }
    if (done) break;
  }
  for (const auto& row : ddiff.rows())
    if (!d.contains(row))
      throw std::logic_error("ideal_dims: difference span not inside m(N)");
  for (const auto& row : d.rows())
    if (!ddiff.contains(row))
      throw std::logic_error("ideal_dims: m(N) not inside difference span");

  return {long(en.dim()), long(d.dim())};
}

bool x_in_d_check(const SympSpace& s) {
  std::size_t n = std::size_t(s.q) * s.q * s.q * s.q;
  std::vector<GFVec> nseeds;
  for (const auto& p : all_planes(s))
    if (!is_isotropic(s, p)) nseeds.push_back(plane_sum(s, p, n));
  Echelon en = ideal_closure(s, nseeds);
  Echelon d(s.q, n);
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1;
    auto tab = shift_table(s, e);
    for (const auto& b : en.rows()) {
      GFVec img = apply_perm(tab, b, 0);
      for (std::size_t j = 0; j < n; ++j)
        img[j] = std::int16_t(mod(img[j] - b[j], s.q));
      d.add(std::move(img));
    }
  }
  return d.contains(GFVec(n, 1));
}

CombinedDims combined_dims(const SympSpace& s) {
  std::size_t n = std::size_t(s.q) * s.q * s.q * s.q;
  CombinedSetup cs = combined_setup(s);

  auto run = [&](const Vec4& v, const Vec4& w) {
    GFVec x = x_vector(s, v, w, cs.len);
    Plane p = canonical_plane(s, v, w);
    GFVec y = plane_sum(s, p, cs.len, 21);

    std::vector<GFVec> oseeds;
    for (std::size_t i = 0; i < n; ++i) {
      auto tab = shift_table(s, s.vec_of_index(int(i)));
      GFVec seed = x;
      for (std::size_t j = 0; j < n; ++j)
        seed[21 + tab[j]] = y[21 + j];
      oseeds.push_back(std::move(seed));
    }
    Echelon eo(s.q, cs.len);
    long dim_o = closure_dim(s, cs, oseeds, false, &eo);

    GFVec xs(x.begin(), x.begin() + 21);
    long dim_u = closure_dim(s, cs, {xs}, true);

    // Projections: pr1(O) should be U, pr2(O) should be (N).
    Echelon pr1(s.q, 21), pr2(s.q, n);
    for (const auto& row : eo.rows()) {
      pr1.add(GFVec(row.begin(), row.begin() + 21));
      pr2.add(GFVec(row.begin() + 21, row.end()));
    }
    std::vector<GFVec> nseeds;
    for (const auto& pl : all_planes(s))
      if (!is_isotropic(s, pl)) nseeds.push_back(plane_sum(s, pl, n));
    Echelon en = ideal_closure(s, nseeds);
    if (long(pr1.dim()) != dim_u)
      throw std::logic_error("combined_dims: pr1(O) != U");
    if (pr2.dim() != en.dim())
      throw std::logic_error("combined_dims: pr2(O) != (N)");

    return CombinedDims{dim_o, dim_u, dim_o - dim_u,
                        dim_o - long(en.dim())};
  };

  auto [v1, w1] = standard_hyperbolic_pair(s);
  CombinedDims first = run(v1, w1);
  auto [v2, w2] = standard_hyperbolic_pair(s, true);
  CombinedDims second = run(v2, w2);
  if (first.dim_o != second.dim_o || first.dim_u != second.dim_u)
    throw std::logic_error("combined_dims: depends on the hyperbolic pair");
  return first;
}

long plane_orbit_size(const SympSpace& s, const Plane& start) {
  std::set<Plane> seen{start};
  std::vector<Plane> work{start};
  auto reps = line_representatives(s);
  while (!work.empty()) {
    Plane p = work.back();
    work.pop_back();
    for (const auto& w : reps) {
      Plane img = canonical_plane(s, transvect(s, w, p.u),
                                  transvect(s, w, p.v));
      if (seen.insert(img).second) work.push_back(img);
    }
  }
  return long(seen.size());
}

std::vector<std::function<Vec4(const Vec4&)>> gxi_generators() {
  // Matrix of multiplication by xi on the lattice <1, xi>: xi * 1 = xi and
  // xi * xi = xi^2 = -1 + xi from the ring relation, so mod 2 the columns
  // are (0,1) and (1,1).
  static const int xi_sq[2] = {-1, 1};  // coefficients of xi^2 in (1, xi)
  int m00 = 0, m01 = ((xi_sq[0] % 2) + 2) % 2;
  int m10 = 1, m11 = ((xi_sq[1] % 2) + 2) % 2;
  auto g1 = [=](const Vec4& v) {
    return Vec4{(m00 * v[0] + m01 * v[1]) & 1, (m10 * v[0] + m11 * v[1]) & 1,
                v[2], v[3]};
  };
  auto g2 = [](const Vec4& v) { return Vec4{v[2], v[3], v[0], v[1]}; };
  auto g3 = [](const Vec4& v) {
    return Vec4{(v[0] + v[2]) & 1, (v[1] + v[3]) & 1, v[2], v[3]};
  };
  return {g1, g2, g3};
}

GxiOrbits gxi_orbits() {
  SympSpace s{2, product_form(2)};
  auto gens = gxi_generators();
  auto planes = all_planes(s);
  std::set<Plane> remaining(planes.begin(), planes.end());
  GxiOrbits out;
  while (!remaining.empty()) {
    Plane start = *remaining.begin();
    std::set<Plane> orbit{start};
    std::vector<Plane> work{start};
    while (!work.empty()) {
      Plane p = work.back();
      work.pop_back();
      for (const auto& g : gens) {
        Plane img = canonical_plane(s, g(p.u), g(p.v));
        if (orbit.insert(img).second) work.push_back(img);
      }
    }
    for (const auto& p : orbit) remaining.erase(p);
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace genkummer::sympfin
