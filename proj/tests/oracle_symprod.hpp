#pragma once
// Test-only oracle for classes pulled back from the symmetric product:
// weight-n states built purely from q_1 operators are symmetrizations of
// tensors over H*(A)^{(x) n}. Products are slotwise with Koszul signs and
// the integral is 1/n! times the top coefficient. This path shares no code
// with the operator engine it cross-checks.
#include <array>
#include <map>
#include <vector>

#include "genkummer/rat.hpp"
#include "genkummer/torus.hpp"

namespace oracle {

using genkummer::Rat;
using genkummer::torus::Mono;
using genkummer::torus::mono_degree;
using genkummer::torus::wedge_sign;

using Slots = std::vector<Mono>;

struct Tensor {
  int n;
  std::map<Slots, Rat> terms;

  void add(const Slots& s, const Rat& c) {
    if (c == 0) return;
    Rat& slot = terms[s];
    slot += c;
    if (slot == 0) terms.erase(s);
  }
};

// Product of two pure tensors with the Koszul sign.
inline void mul_term(Tensor& out, const Slots& u, const Rat& cu,
                     const Slots& v, const Rat& cv) {
  int sign_exp = 0;
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j)
      sign_exp += mono_degree(v[i]) * mono_degree(u[j]);
  Rat c = cu * cv * ((sign_exp % 2) ? -1 : 1);
  Slots w(out.n);
  for (int i = 0; i < out.n; ++i) {
    int ws = wedge_sign(u[i], v[i]);
    if (!ws) return;
    c *= ws;
    w[i] = Mono(u[i] | v[i]);
  }
  out.add(w, c);
}

inline Tensor multiply(const Tensor& a, const Tensor& b) {
  Tensor out{a.n, {}};
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) mul_term(out, u, cu, v, cv);
  return out;
}

// Symmetrization of c_1 (x) ... (x) c_n over all permutations with Koszul
// signs; this is the class of q_1(c_1)...q_1(c_n)|0>.
inline Tensor sym_state(const std::vector<std::pair<Rat, Mono>>& slots) {
  int n = int(slots.size());
  Tensor out{n, {}};
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    // Koszul sign of the permutation on the odd-degree slots.
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j] && (mono_degree(slots[perm[i]].second) & 1) &&
            (mono_degree(slots[perm[j]].second) & 1))
          sign = -sign;
    Slots s(n);
    Rat c = sign;
    for (int i = 0; i < n; ++i) {
      s[i] = slots[perm[i]].second;
      c *= slots[perm[i]].first;
    }
    out.add(s, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Class of the operator G_0(c): c inserted into one slot, summed.
inline Tensor slot_class(int n, Mono c, const Rat& coeff = 1) {
  Tensor out{n, {}};
  for (int i = 0; i < n; ++i) {
    Slots s(n, Mono(0));
    s[i] = c;
    out.add(s, coeff);
  }
  return out;
}

inline Rat integral(const Tensor& t) {
  Slots top(t.n, genkummer::torus::kTop);
  auto it = t.terms.find(top);
  Rat c = (it == t.terms.end()) ? Rat(0) : it->second;
  for (int i = 2; i <= t.n; ++i) c /= i;
  return c;
}

}  // namespace oracle
