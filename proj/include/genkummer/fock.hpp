#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "genkummer/rat.hpp"
#include "genkummer/torus.hpp"

// Nakajima operator calculus on the direct sum of H*(A^[n],Q): creation
// words on the vacuum, vacuum pairings via adjoints, and the multiplication
// operators d, G_k(a) acting through the commutation relations
//   [q_m(a), q_n(b)] = m delta_{m+n} int(ab)
//   [L_m(a), q_n(b)] = -n q_{m+n}(ab)
//   [d, q_m(a)]      = m L_m(a)            (K_A = 0)
//   [G_k(a), q_1(b)] = 1/k! ad(d)^k q_1(ab)
namespace genkummer::fock {

using torus::Mono;

struct CrOp {
  int m;      // weight, >= 1 for stored creation operators
  Mono mono;  // torus monomial argument

  int degree() const { return torus::mono_degree(mono) + 2 * (m - 1); }
  int parity() const { return torus::mono_degree(mono) & 1; }
  auto operator<=>(const CrOp&) const = default;
};

using Word = std::vector<CrOp>;

int word_weight(const Word& w);
int word_degree(const Word& w);

class State {
 public:
  std::map<Word, Rat> terms;

  static State vacuum(const Rat& c = 1);

  void add(Word w, Rat c);  // canonicalizes w, accumulates
  bool is_zero() const { return terms.empty(); }
  // -1 on the zero state or mixed weights/degrees.
  int weight() const;
  int degree() const;

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State operator+(const State& o) const;
  State operator-(const State& o) const;
  State operator*(const Rat& s) const;
  bool operator==(const State& o) const;

  std::string str() const;
};

// Convenience builder: coeff * q_{m1}(c1) ... q_{mk}(ck) |0>.
State make_state(const Rat& coeff, const std::vector<CrOp>& ops);

// q_m(a) for m != 0; m < 0 annihilates via the commutator.
State apply_q(int m, Mono a, const State& s);
// Virasoro-type operator L_m(a) (m != 0).
State apply_L(int m, Mono a, const State& s);
// The boundary operator d = G_1(1).
State apply_D(const State& s);
// Chern component G_k(a), k + |a| > 0; k in {0,1,2} is exercised here.
State apply_G(int k, Mono a, const State& s);

// Verifies (ad q')^m (q_1(a)) = (-1)^m m! q_{m+1}(a) on a state, where
// q' = [d, q_1(1)] evaluated through the d-action. Returns the difference
// (zero iff the identity holds).
State dq1_identity_defect(int m, Mono a, const State& s);

// Multiplication words: cup product with tautological classes.
struct MultTok {
  bool is_d;  // true: the operator d; false: G_k(coeff * mono)
  int k = 0;
  Rat coeff = 1;
  Mono mono = 0;
};
using MultWord = std::vector<MultTok>;
using MultExpr = std::vector<std::pair<Rat, MultWord>>;

MultTok tok_d();
MultTok tok_g(int k, Mono mono, const Rat& coeff = 1);

State apply_word(const MultWord& w, const State& s);
State apply_expr(const MultExpr& e, const State& s);

// Reorders a word into a canonical token order with Koszul signs; the sign
// is returned through the expression coefficient.
MultExpr normalize_word(const MultWord& w, const Rat& coeff = 1);

// Poincare pairing over A^[n]; both states must have the same weight.
Rat vacuum_pairing(const State& x, const State& y);

// Unit class of H^*(A^[n]): q_1(1)^n / n! |0>.
State unit_state(int n);
// Integral over A^[n] (pairing against the unit).
Rat integral(const State& s);

// Multiplication word of the generalized-Kummer class [K_2(A)] on A^[3].
const MultWord& kummer_class_word();

// int_{A^[3]} [K_2(A)] alpha beta for weight-3 states, 0 unless the
// degrees sum to 8.
Rat kummer_pairing(const State& alpha, const State& beta);

// True iff [K_2(A)] * alpha = 0, i.e. alpha dies on the Kummer fourfold.
bool annihilator_test(const State& alpha);

// All canonical creation words of weight n (basis of H^*(A^[n],Q)).
std::vector<Word> weight_basis(int n);
// Betti numbers of A^[n] by direct enumeration, degrees 0..4n.
std::vector<long> goettsche_betti(int n);

// Integral basis of H^*(A^[2],Z) with multiplication words.
struct BasisEntry {
  int degree;
  State cls;
  MultExpr word;
  std::string label;
};
std::vector<BasisEntry> hilb_basis_a2();

// Integral basis of the image of H^*(A^[3],Z) on the Kummer fourfold.
struct ThetaEntry {
  int degree;
  State cls;
  std::string label;
};
std::vector<ThetaEntry> theta_table();

// The 103 independent degree-4 multiplication words on A^[3].
struct GenWord {
  MultExpr expr;
  bool contains_g0a;  // word has a factor G_0(a_i)
  std::string label;
};
std::vector<GenWord> h4_generator_words();

// Coordinates of a state in the weight-n monomial basis of one degree.
std::vector<Rat> coordinates(const State& s, const std::vector<Word>& basis);

}  // namespace genkummer::fock
