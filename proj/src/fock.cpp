#include "genkummer/fock.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace genkummer::fock {

using torus::TorusClass;
using torus::wedge_sign;

int word_weight(const Word& w) {
  int n = 0;
  for (const auto& op : w) n += op.m;
  return n;
}

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& op : w) d += op.degree();
  return d;
}

namespace {

// Sorts a creation word by (m, mono); Koszul signs for odd-odd swaps,
// zero for a repeated odd factor. Returns false if the term vanishes.
bool canonicalize(Word& w, int& sign) {
  sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      if (w[j].parity() && w[j - 1].parity()) sign = -sign;
      std::swap(w[j], w[j - 1]);
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && w[i].parity()) return false;
  return true;
}

}  // namespace

State State::vacuum(const Rat& c) {
  State s;
  if (c != 0) s.terms[{}] = c;
  return s;
}

void State::add(Word w, Rat c) {
  if (c == 0) return;
  int sign;
  if (!canonicalize(w, sign)) return;
  Rat& slot = terms[w];
  slot += c * sign;
  if (slot == 0) terms.erase(w);
}

int State::weight() const {
  int n = -1;
  for (const auto& [w, c] : terms) {
    int wn = word_weight(w);
    if (n == -1)
      n = wn;
    else if (n != wn)
      return -1;
  }
  return n;
}

int State::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms) {
    int wd = word_degree(w);
    if (d == -1)
      d = wd;
    else if (d != wd)
      return -1;
  }
  return d;
}

State& State::operator+=(const State& o) {
  for (const auto& [w, c] : o.terms) {
    Rat& slot = terms[w];
    slot += c;
    if (slot == 0) terms.erase(w);
  }
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [w, c] : o.terms) {
    Rat& slot = terms[w];
    slot -= c;
    if (slot == 0) terms.erase(w);
  }
  return *this;
}

State State::operator+(const State& o) const {
  State r = *this;
  r += o;
  return r;
}

State State::operator-(const State& o) const {
  State r = *this;
  r -= o;
  return r;
}

State State::operator*(const Rat& s) const {
  State r;
  if (s == 0) return r;
  for (const auto& [w, c] : terms) r.terms[w] = c * s;
  return r;
}

bool State::operator==(const State& o) const { return terms == o.terms; }

std::string State::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c << "*";
    if (w.empty()) os << "|0>";
    for (const auto& op : w)
      os << "q" << op.m << "(" << torus::mono_str(op.mono) << ")";
  }
  return os.str();
}

State make_state(const Rat& coeff, const std::vector<CrOp>& ops) {
  State s;
  s.add(ops, coeff);
  return s;
}

namespace {

// coeff * prefix-ops prepended to every term of s (creation only).
State prepend(const Word& prefix, const State& s, const Rat& coeff = 1) {
  State out;
  for (const auto& [w, c] : s.terms) {
    Word nw = prefix;
    nw.insert(nw.end(), w.begin(), w.end());
    out.add(std::move(nw), c * coeff);
  }
  return out;
}

State suffix_state(const Word& w, std::size_t from) {
  State s;
  s.add(Word(w.begin() + from, w.end()), 1);
  return s;
}

}  // namespace

State apply_q(int m, Mono a, const State& s) {
  if (m == 0) return {};
  State out;
  if (m > 0) {
    for (const auto& [w, c] : s.terms) {
      Word nw;
      nw.reserve(w.size() + 1);
      nw.push_back({m, a});
      nw.insert(nw.end(), w.begin(), w.end());
      out.add(std::move(nw), c);
    }
    return out;
  }
  // Annihilation: commute rightwards, q_m(a)|0> = 0.
  int pa = torus::mono_degree(a) & 1;
  for (const auto& [w, c] : s.terms) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].m == -m) {
        int ws = wedge_sign(a, w[i].mono);
        if (ws && (Mono(a | w[i].mono) == torus::kTop)) {
          Word rest;
          rest.reserve(w.size() - 1);
          for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i) rest.push_back(w[j]);
          out.add(std::move(rest), c * sign * ws * m);
        }
      }
      if (pa && w[i].parity()) sign = -sign;
    }
  }
  return out;
}

State apply_L(int m, Mono a, const State& s) {
  State out;
  int pa = torus::mono_degree(a) & 1;

  // Vacuum value: creation-creation summands of the defining sum survive
  // for m >= 2; L_m(a)|0> = 0 for m <= 1.
  State vac;
  if (m >= 2) {
    for (const auto& t : torus::diagonal_sweedler(a))
      for (int k = 1; k < m; ++k) {
        State part = State::vacuum(t.coeff / 2);
        part = apply_q(m - k, t.right, part);
        part = apply_q(k, t.left, part);
        vac += part;
      }
  }

  for (const auto& [w, c] : s.terms) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      // [L_m(a), q_n(b)] = -n q_{m+n}(ab)
      int n = w[i].m;
      int ws = wedge_sign(a, w[i].mono);
      if (ws && m + n != 0) {
        Mono ab = Mono(a | w[i].mono);
        State tail = apply_q(m + n, ab, suffix_state(w, i + 1));
        Word prefix(w.begin(), w.begin() + i);
        out += prepend(prefix, tail, c * sign * ws * Rat(-n));
      }
      if (pa && w[i].parity()) sign = -sign;
    }
    if (!vac.is_zero()) out += prepend(w, vac, c * sign);
  }
  return out;
}

State apply_D(const State& s) {
  State out;
  for (const auto& [w, c] : s.terms) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      // [d, q_n(b)] = n L_n(b); d is even, no Koszul signs.
      State tail = apply_L(w[i].m, w[i].mono, suffix_state(w, i + 1));
      Word prefix(w.begin(), w.begin() + i);
      out += prepend(prefix, tail, c * Rat(w[i].m));
    }
  }
  return out;
}

namespace {

// Words over {D, Q1(mono)} representing states in the d/q_1 picture.
struct Tok {
  bool is_d;
  Mono mono;
  auto operator<=>(const Tok&) const = default;
};
using TokWord = std::vector<Tok>;
using TokExpr = std::vector<std::pair<Rat, TokWord>>;

TokExpr tok_concat(const TokExpr& a, const TokExpr& b) {
  TokExpr out;
  for (const auto& [ca, wa] : a)
    for (const auto& [cb, wb] : b) {
      TokWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(ca * cb, std::move(w));
    }
  return out;
}

TokExpr& operator+=(TokExpr& a, const TokExpr& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TokExpr tok_scale(TokExpr e, const Rat& s) {
  for (auto& [c, w] : e) c *= s;
  return e;
}

// q' = [d, q_1(1)] as a token expression (even operator).
const TokExpr& qprime_expr() {
  static const TokExpr e = {{1, {{true, 0}, {false, 0}}},
                            {-1, {{false, 0}, {true, 0}}}};
  return e;
}

// (ad q')(X) for even q'.
TokExpr ad_qprime(const TokExpr& x) {
  TokExpr out = tok_concat(qprime_expr(), x);
  out += tok_scale(tok_concat(x, qprime_expr()), -1);
  return out;
}

// q_m(a) as a d/q_1 word via q_{m}(a) = (-1)^{m-1}/(m-1)! (ad q')^{m-1} q_1(a).
const TokExpr& dq1_expand(const CrOp& op) {
  static std::map<CrOp, TokExpr> cache;
  auto it = cache.find(op);
  if (it != cache.end()) return it->second;
  TokExpr e = {{1, {{false, op.mono}}}};
  Rat factor = 1;
  for (int j = 1; j < op.m; ++j) {
    e = ad_qprime(e);
    factor *= -Rat(1) / j;
  }
  e = tok_scale(std::move(e), factor);
  return cache.emplace(op, std::move(e)).first->second;
}

TokExpr dq1_expand_word(const Word& w) {
  TokExpr e = {{1, {}}};
  for (const auto& op : w) e = tok_concat(e, dq1_expand(op));
  return e;
}

// (ad d)^k (q_1(c)) applied to a state.
State ad_dk_q1(int k, Mono c, const State& s) {
  if (k == 0) return apply_q(1, c, s);
  State inner = ad_dk_q1(k - 1, c, s);
  State shifted = ad_dk_q1(k - 1, c, apply_D(s));
  return apply_D(inner) - shifted;
}

// G_k(a) along a token word; suffix evaluations are cached by position.
struct GTokApply {
  int k;
  Mono a;
  int pa;
  const TokWord& w;
  std::vector<State> eval_cache;  // eval of suffix starting at i
  std::vector<char> have_eval;

  GTokApply(int k_, Mono a_, const TokWord& w_)
      : k(k_), a(a_), pa(torus::mono_degree(a_) & 1), w(w_),
        eval_cache(w_.size() + 1), have_eval(w_.size() + 1, 0) {}

  const State& eval_suffix(std::size_t i) {
    if (!have_eval[i]) {
      if (i == w.size())
        eval_cache[i] = State::vacuum();
      else
        eval_cache[i] = w[i].is_d ? apply_D(eval_suffix(i + 1))
                                  : apply_q(1, w[i].mono, eval_suffix(i + 1));
      have_eval[i] = 1;
    }
    return eval_cache[i];
  }

  State run(std::size_t i) {
    if (i == w.size()) return {};  // G_k(a)|0> = 0 for k + |a| > 0
    if (w[i].is_d) return apply_D(run(i + 1));
    Mono b = w[i].mono;
    State out;
    int ws = wedge_sign(a, b);
    if (ws) {
      Rat f = ws;
      for (int j = 2; j <= k; ++j) f /= j;  // 1/k!
      out += ad_dk_q1(k, Mono(a | b), eval_suffix(i + 1)) * f;
    }
    State deeper = run(i + 1);
    if (!deeper.is_zero()) {
      int sign = (pa && (torus::mono_degree(b) & 1)) ? -1 : 1;
      out += apply_q(1, b, deeper) * Rat(sign);
    }
    return out;
  }
};

}  // namespace

State apply_G(int k, Mono a, const State& s) {
  if (k + torus::mono_degree(a) <= 0)
    throw std::invalid_argument("apply_G: G_0(1) is not supported");
  State out;
  for (const auto& [word, c] : s.terms) {
    for (const auto& [tc, tw] : dq1_expand_word(word)) {
      GTokApply g(k, a, tw);
      out += g.run(0) * (c * tc);
    }
  }
  return out;
}

namespace {

State qprime_op(const State& t) {
  // q' = [d, q_1(1)] evaluated through the d-action.
  return apply_D(apply_q(1, 0, t)) - apply_q(1, 0, apply_D(t));
}

State ad_qprime_pow(int j, Mono a, const State& t) {
  if (j == 0) return apply_q(1, a, t);
  return qprime_op(ad_qprime_pow(j - 1, a, t)) -
         ad_qprime_pow(j - 1, a, qprime_op(t));
}

}  // namespace

State dq1_identity_defect(int m, Mono a, const State& s) {
  State lhs = ad_qprime_pow(m, a, s);
  Rat f = (m % 2) ? -1 : 1;
  for (int j = 2; j <= m; ++j) f *= j;
  State rhs = apply_q(m + 1, a, s) * f;
  return lhs - rhs;
}

MultTok tok_d() { return {true, 0, 1, 0}; }
MultTok tok_g(int k, Mono mono, const Rat& coeff) {
  return {false, k, coeff, mono};
}

State apply_word(const MultWord& w, const State& s) {
  State cur = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_d)
      cur = apply_D(cur);
    else
      cur = apply_G(it->k, it->mono, cur) * it->coeff;
    if (cur.is_zero()) break;
  }
  return cur;
}

State apply_expr(const MultExpr& e, const State& s) {
  State out;
  for (const auto& [c, w] : e) out += apply_word(w, s) * c;
  return out;
}

MultExpr normalize_word(const MultWord& w, const Rat& coeff) {
  // Multiplication operators supercommute; sort by (is_d, k, mono) with
  // Koszul signs from odd (|a| odd) tokens.
  MultWord v = w;
  Rat c = coeff;
  auto parity = [](const MultTok& t) {
    return t.is_d ? 0 : (torus::mono_degree(t.mono) & 1);
  };
  auto key = [](const MultTok& t) {
    return std::tuple<int, int, int>(t.is_d ? 0 : 1, t.k, t.mono);
  };
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && key(v[j]) < key(v[j - 1]); --j) {
      if (parity(v[j]) && parity(v[j - 1])) c = -c;
      std::swap(v[j], v[j - 1]);
    }
  return {{c, v}};
}

Rat vacuum_pairing(const State& x, const State& y) {
  if (x.is_zero() || y.is_zero()) return 0;
  int wx = x.weight(), wy = y.weight();
  if (wx < 0 || wy < 0 || wx != wy)
    throw std::invalid_argument("vacuum_pairing: weight mismatch");

  // int_{A^[n]} x ^ y, peeling the creation word of x onto y:
  // int (q_m(b) x') y = (-1)^{deg q_m(b) deg x'} int x' ((-1)^m q_{-m}(b) y).
  Rat total = 0;
  for (const auto& [xw, xc] : x.terms) {
    State cur = y;
    int sign = 1;
    int rest_deg = word_degree(xw);
    for (const auto& op : xw) {
      rest_deg -= op.degree();
      if ((op.degree() & 1) && (rest_deg & 1)) sign = -sign;
      cur = apply_q(-op.m, op.mono, cur);
      if (op.m % 2) cur = cur * Rat(-1);
      if (cur.is_zero()) break;
    }
    auto it = cur.terms.find(Word{});
    if (it != cur.terms.end()) total += xc * it->second * sign;
  }
  return total;
}

State unit_state(int n) {
  Rat f = 1;
  for (int j = 2; j <= n; ++j) f /= j;
  Word w(n, CrOp{1, 0});
  return make_state(f, w);
}

Rat integral(const State& s) {
  if (s.is_zero()) return 0;
  int n = s.weight();
  if (n < 0) throw std::invalid_argument("integral: mixed weight");
  return vacuum_pairing(s, unit_state(n));
}

const MultWord& kummer_class_word() {
  static const MultWord w = {tok_g(0, 0x1), tok_g(0, 0x2), tok_g(0, 0x4),
                             tok_g(0, 0x8)};
  return w;
}

Rat kummer_pairing(const State& alpha, const State& beta) {
  if (alpha.weight() != 3 || beta.weight() != 3)
    throw std::invalid_argument("kummer_pairing: states must have weight 3");
  if (alpha.degree() + beta.degree() != 8) return 0;
  State k_alpha = apply_word(kummer_class_word(), alpha);
  if (k_alpha.is_zero()) return 0;
  return vacuum_pairing(beta, k_alpha);
}

bool annihilator_test(const State& alpha) {
  if (alpha.weight() != 3)
    throw std::invalid_argument("annihilator_test: weight 3 required");
  return apply_word(kummer_class_word(), alpha).is_zero();
}

namespace {

void enumerate_words(int n, int min_m, Mono min_mono, Word& cur,
                     std::vector<Word>& out) {
  if (n == 0) {
    out.push_back(cur);  // built in canonical (m, mono) order
    return;
  }
  for (int m = min_m; m <= n; ++m) {
    int start = (m == min_m) ? min_mono : 0;
    for (int mono = start; mono < 16; ++mono) {
      // no repeated odd factor
      if (!cur.empty() && cur.back().m == m && cur.back().mono == mono &&
          (torus::mono_degree(Mono(mono)) & 1))
        continue;
      cur.push_back({m, Mono(mono)});
      enumerate_words(n - m, m, Mono(mono), cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> weight_basis(int n) {
  std::vector<Word> out;
  Word cur;
  enumerate_words(n, 1, 0, cur, out);
  return out;
}

std::vector<long> goettsche_betti(int n) {
  std::vector<long> b(4 * n + 1, 0);
  for (const auto& w : weight_basis(n)) ++b[word_degree(w)];
  return b;
}

namespace {

std::string op_label(const char* name, int idx) {
  return std::string(name) + std::to_string(idx);
}

}  // namespace

std::vector<BasisEntry> hilb_basis_a2() {
  using torus::a_star;
  using torus::b_monomials;
  std::vector<BasisEntry> out;
  const auto& bs = b_monomials();
  auto add = [&](int deg, State cls, MultExpr word, std::string label) {
    out.push_back({deg, std::move(cls), std::move(word), std::move(label)});
  };
  auto astar_op = [&](int i) {  // (sign, mono) of a_i^*
    TorusClass t = a_star(i);
    for (int m = 0; m < 16; ++m)
      if (t.c[m] != 0) return std::pair<Rat, Mono>(t.c[m], Mono(m));
    throw std::logic_error("a_star");
  };

  add(0, make_state(Rat(1, 2), {{1, 0}, {1, 0}}), {{1, {}}}, "1");
  for (int i = 1; i <= 4; ++i) {
    Mono ai = Mono(1 << (i - 1));
    add(1, make_state(1, {{1, 0}, {1, ai}}), {{1, {tok_g(0, ai)}}},
        op_label("a", i));
  }
  add(2, make_state(Rat(1, 2), {{2, 0}}), {{1, {tok_d()}}}, "delta");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      Mono ai = Mono(1 << (i - 1)), aj = Mono(1 << (j - 1));
      add(2, make_state(1, {{1, ai}, {1, aj}}),
          {{1, {tok_g(0, ai), tok_g(0, aj)}}},
          op_label("a", i) + op_label("a", j));
    }
  for (int i = 0; i < 6; ++i)
    add(2, make_state(1, {{1, 0}, {1, bs[i]}}), {{1, {tok_g(0, bs[i])}}},
        op_label("b", i + 1));
  for (int i = 1; i <= 4; ++i) {
    Mono ai = Mono(1 << (i - 1));
    add(3, make_state(Rat(1, 2), {{2, ai}}), {{-1, {tok_g(1, ai)}}},
        "q2(a" + std::to_string(i) + ")/2");
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = 0; j < 6; ++j) {
      Mono ai = Mono(1 << (i - 1));
      add(3, make_state(1, {{1, ai}, {1, bs[j]}}),
          {{1, {tok_g(0, ai), tok_g(0, bs[j])}}},
          op_label("a", i) + op_label("b", j + 1));
    }
  for (int i = 1; i <= 4; ++i) {
    auto [sc, sm] = astar_op(i);
    add(3, make_state(sc, {{1, 0}, {1, sm}}), {{1, {tok_g(0, sm, sc)}}},
        op_label("a*", i));
  }
  for (int i = 0; i < 6; ++i) {
    State cls = make_state(Rat(1, 2), {{1, bs[i]}, {1, bs[i]}});
    cls -= make_state(Rat(1, 2), {{2, bs[i]}});
    add(4, cls,
        {{Rat(1, 2), {tok_g(0, bs[i]), tok_g(0, bs[i])}},
         {1, {tok_g(1, bs[i])}}},
        "b" + std::to_string(i + 1) + "-int");
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      Mono ai = Mono(1 << (i - 1));
      auto [sc, sm] = astar_op(j);
      add(4, make_state(sc, {{1, ai}, {1, sm}}),
          {{sc, {tok_g(0, ai), tok_g(0, sm)}}},
          op_label("a", i) + op_label("a*", j));
    }
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      add(4, make_state(1, {{1, bs[i]}, {1, bs[j]}}),
          {{1, {tok_g(0, bs[i]), tok_g(0, bs[j])}}},
          op_label("b", i + 1) + op_label("b", j + 1));
  add(4, make_state(1, {{1, 0}, {1, torus::kTop}}),
      {{1, {tok_g(0, torus::kTop)}}}, "x");
  for (int i = 1; i <= 4; ++i) {
    auto [sc, sm] = astar_op(i);
    add(5, make_state(sc, {{2, sm}}), {{-2 * sc, {tok_g(1, sm)}}},
        "q2(a*" + std::to_string(i) + ")");
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = 0; j < 6; ++j) {
      auto [sc, sm] = astar_op(i);
      add(5, make_state(sc, {{1, sm}, {1, bs[j]}}),
          {{sc, {tok_g(0, sm), tok_g(0, bs[j])}}},
          op_label("a*", i) + op_label("b", j + 1));
    }
  for (int i = 1; i <= 4; ++i) {
    Mono ai = Mono(1 << (i - 1));
    add(5, make_state(1, {{1, ai}, {1, torus::kTop}}),
        {{1, {tok_g(0, ai), tok_g(0, torus::kTop)}}},
        op_label("a", i) + "x");
  }
  add(6, make_state(1, {{2, torus::kTop}}), {{-2, {tok_g(1, torus::kTop)}}},
      "q2(x)");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      auto [si, mi] = astar_op(i);
      auto [sj, mj] = astar_op(j);
      add(6, make_state(si * sj, {{1, mi}, {1, mj}}),
          {{si * sj, {tok_g(0, mi), tok_g(0, mj)}}},
          op_label("a*", i) + op_label("a*", j));
    }
  for (int i = 0; i < 6; ++i)
    add(6, make_state(1, {{1, bs[i]}, {1, torus::kTop}}),
        {{1, {tok_g(0, bs[i]), tok_g(0, torus::kTop)}}},
        op_label("b", i + 1) + "x");
  for (int i = 1; i <= 4; ++i) {
    auto [sc, sm] = astar_op(i);
    add(7, make_state(sc, {{1, sm}, {1, torus::kTop}}),
        {{sc, {tok_g(0, sm), tok_g(0, torus::kTop)}}},
        op_label("a*", i) + "x");
  }
  add(8, make_state(1, {{1, torus::kTop}, {1, torus::kTop}}),
      {{1, {tok_g(0, torus::kTop), tok_g(0, torus::kTop)}}}, "x^2");
  return out;
}

std::vector<ThetaEntry> theta_table() {
  using torus::a_star;
  using torus::b_monomials;
  std::vector<ThetaEntry> out;
  const auto& bs = b_monomials();
  auto add = [&](int deg, State cls, std::string label) {
    out.push_back({deg, std::move(cls), std::move(label)});
  };
  auto astar_op = [&](int i) {
    TorusClass t = a_star(i);
    for (int m = 0; m < 16; ++m)
      if (t.c[m] != 0) return std::pair<Rat, Mono>(t.c[m], Mono(m));
    throw std::logic_error("a_star");
  };

  add(0, unit_state(3), "1");
  for (int i = 0; i < 6; ++i)
    add(2, make_state(Rat(1, 2), {{1, bs[i]}, {1, 0}, {1, 0}}),
        "j(b" + std::to_string(i + 1) + ")");
  add(2, make_state(Rat(1, 2), {{2, 0}, {1, 0}}), "e");
  for (int i = 1; i <= 4; ++i) {
    auto [sc, sm] = astar_op(i);
    add(3, make_state(sc / 2, {{1, sm}, {1, 0}, {1, 0}}),
        "h3(a*" + std::to_string(i) + ")");
  }
  for (int i = 1; i <= 4; ++i) {
    Mono ai = Mono(1 << (i - 1));
    add(3, make_state(Rat(1, 2), {{2, ai}, {1, 0}}),
        "h3(q2(a" + std::to_string(i) + "))");
  }
  // Degree 4: b_i b_j products excluding (a1a2, a3a4); Y_p; the six
  // integral operator classes; W.
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      if (bs[i] == 0x3 && bs[j] == 0xC) continue;
      add(4, make_state(1, {{1, bs[i]}, {1, bs[j]}, {1, 0}}),
          "b" + std::to_string(i + 1) + "b" + std::to_string(j + 1));
    }
  add(4, make_state(Rat(1, 2), {{1, torus::kTop}, {1, 0}, {1, 0}}), "Y_p");
  for (int i = 0; i < 6; ++i) {
    State cls = make_state(Rat(1, 2), {{1, bs[i]}, {1, bs[i]}, {1, 0}});
    cls -= make_state(Rat(1, 2), {{2, bs[i]}, {1, 0}});
    add(4, cls, "intop(b" + std::to_string(i + 1) + ")");
  }
  add(4, make_state(Rat(1, 3), {{3, 0}}), "W/3");
  // Degree 5: q1(a_i a_j) q1(a_j^*) q1(1), fixed choice j != i; q2(a_i^*)q1(1).
  for (int i = 1; i <= 4; ++i) {
    int j = (i == 1) ? 2 : 1;
    Mono ai = Mono(1 << (i - 1)), aj = Mono(1 << (j - 1));
    int ws = wedge_sign(ai, aj);
    auto [sc, sm] = astar_op(j);
    add(5, make_state(Rat(ws) * sc, {{1, Mono(ai | aj)}, {1, sm}, {1, 0}}),
        "h5(a" + std::to_string(i) + ")");
  }
  for (int i = 1; i <= 4; ++i) {
    auto [sc, sm] = astar_op(i);
    add(5, make_state(sc, {{2, sm}, {1, 0}}),
        "h5(q2(a*" + std::to_string(i) + "))");
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      auto [si, mi] = astar_op(i);
      auto [sj, mj] = astar_op(j);
      add(6, make_state(si * sj, {{1, mi}, {1, mj}, {1, 0}}),
          "a*" + std::to_string(i) + "a*" + std::to_string(j));
    }
  add(6, make_state(1, {{2, torus::kTop}, {1, 0}}), "q2(x)q1(1)");
  add(8, make_state(1, {{1, torus::kTop}, {1, torus::kTop}, {1, 0}}), "top");
  return out;
}

std::vector<GenWord> h4_generator_words() {
  using torus::b_monomials;
  std::vector<GenWord> out;
  const auto& bs = b_monomials();
  auto astar_op = [&](int i) {
    TorusClass t = torus::a_star(i);
    for (int m = 0; m < 16; ++m)
      if (t.c[m] != 0) return std::pair<Rat, Mono>(t.c[m], Mono(m));
    throw std::logic_error("a_star");
  };

  out.push_back({{{1, kummer_class_word()}}, true, "G0(a1)G0(a2)G0(a3)G0(a4)"});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = 0; k < 6; ++k)
        out.push_back({{{1,
                         {tok_g(0, Mono(1 << (i - 1))),
                          tok_g(0, Mono(1 << (j - 1))), tok_g(0, bs[k])}}},
                       true,
                       "G0(a)G0(a)G0(b)"});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      auto [sc, sm] = astar_op(j);
      out.push_back(
          {{{sc, {tok_g(0, Mono(1 << (i - 1))), tok_g(0, sm)}}}, true,
           "G0(a)G0(a*)"});
    }
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      out.push_back({{{1, {tok_g(0, bs[i]), tok_g(0, bs[j])}}}, false,
                     "G0(b)G0(b)"});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      out.push_back(
          {{{1,
             {tok_g(0, Mono(1 << (i - 1))), tok_g(0, Mono(1 << (j - 1))),
              tok_d()}}},
           true,
           "G0(a)G0(a)G1(1)"});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      out.push_back(
          {{{1,
             {tok_g(0, Mono(1 << (i - 1))), tok_g(1, Mono(1 << (j - 1)))}}},
           true,
           "G0(a)G1(a)"});
  for (int i = 0; i < 6; ++i)
    out.push_back({{{1, {tok_g(0, bs[i]), tok_d()}}}, false, "G0(b)G1(1)"});
  out.push_back({{{1, {tok_d(), tok_d()}}}, false, "G1(1)^2"});
  return out;
}

std::vector<Rat> coordinates(const State& s, const std::vector<Word>& basis) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<Rat> out(basis.size(), 0);
  for (const auto& [w, c] : s.terms) {
    auto it = index.find(w);
    if (it == index.end())
      throw std::runtime_error("coordinates: word outside basis");
    out[it->second] = c;
  }
  return out;
}

}  // namespace genkummer::fock
