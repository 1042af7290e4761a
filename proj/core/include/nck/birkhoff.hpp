#pragma once

// Birkhoff factorization of the character sigma_a, the Catalan series C and
// D, the refined idempotents D_lambda, the iterated Rota-Baxter values
// P^I_eps, and the word model for the ribbon expansion.

#include <string>
#include <vector>

#include "nck/hopf.hpp"
#include "nck/nsym.hpp"
#include "nck/polyring.hpp"

namespace nck {

// a(z) = sum_k a_k z^{k-1}, either with symbolic a_k or with a_0 = a and
// a_k = b for k >= 1 (that is a/z + b/(1-z)).
struct ASpec {
  enum class Kind { Symbolic, TwoParameter };
  Kind kind = Kind::Symbolic;

  static ASpec symbolic() { return {Kind::Symbolic}; }
  static ASpec two_parameter() { return {Kind::TwoParameter}; }
  static ASpec parse(std::string_view text);  // "symbolic" or "a,b"

  MultiPoly coeff(int k) const;
  // a(z) known exactly up to z^window.
  LaurentPoly series(int window) const;
  // Commutative product of a_k over the code entries of f.
  MultiPoly monomial(const Forest& f) const;
  std::string str() const;
  bool operator==(const ASpec&) const = default;
};

// phi+ and phi- on forests (multiplicative over trees). Values are computed
// with the Laurent window `window`; callers should use window >= |f|.
const LaurentPoly& phi_plus(const Forest& f, const ASpec& spec, int window);
const LaurentPoly& phi_minus(const Forest& f, const ASpec& spec, int window);
// Sum over G in upset(f) of a_G z^{-r(G)}.
LaurentPoly phi_plus_closed(const Forest& f, const ASpec& spec);

// sigma^+- = sum over forests with at most n nodes of phi^+-(Y_F) X_F.
XElem<LaurentPoly> sigma_plus(int n, const ASpec& spec);
XElem<LaurentPoly> sigma_minus(int n, const ASpec& spec);
// sigma_a = sum_F a^{|F|} X_F.
XElem<LaurentPoly> sigma_a(int n, const ASpec& spec);
// Degree-n part of sigma^- sigma_a, compared with sigma^+ on the exponents
// both sides know exactly. Returns false on any mismatch or window overflow.
bool factorization_holds(int n, const ASpec& spec);

// C = sigma^+ at z = 1 and D = residue of sigma^+, in the C basis, degree n.
LinComb<Forest, MultiPoly> series_C(int n, const ASpec& spec);
LinComb<Forest, MultiPoly> series_D(int n, const ASpec& spec);

using Partition = std::vector<int>;
bool is_partition(const Partition& p);
std::vector<Partition> partitions(int m);
// Multiset of the nonzero code entries, sorted decreasingly.
Partition code_partition(const Forest& f);

// D_lambda = sum of C_T over trees with n nodes whose code partition is lambda.
LinComb<Forest, long> d_lambda_c(int n, const Partition& lambda);
XElem<long> d_lambda_x(int n, const Partition& lambda);
NsymElem<Rational> d_lambda_r(int n, const Partition& lambda);

// P^I_eps = P_{eps_l}(P^{I'}_{eps'} a^{i_l}), P^{()} = 1. eps is a string of
// '+'/'-' of length l(I); P+ is the polar part and P- the regular part.
LaurentPoly p_i_epsilon(const Composition& i, const std::string& eps, const ASpec& spec, int window);

// phi^+-(M_I) from the recursion on the last part.
LaurentPoly phi_m(const Composition& i, bool plus, const ASpec& spec, int window);

enum class Expansion { S, Lambda, SignedRibbon };
// Degree-n component of sigma^+ (plus) or sigma^- on the given basis.
NsymElem<LaurentPoly> sigma_expansion(bool plus, Expansion basis, int n, const ASpec& spec);

// ---------------------------------------------------------------- words

using Word = std::vector<int>;

// All words of length n with entry sum < n.
std::vector<Word> small_words(int n);
// W(I): w_1+...+w_k >= k exactly when k is in D(I), for k = 1..n.
std::vector<Word> words_W(const Composition& i);
// S(I): only the constraints at the descents of I, and total < n.
std::vector<Word> words_S(const Composition& i);
// The unique I with w in W(I).
Composition word_class(const Word& w);
long catalan_block_count(const Composition& i);

// Sum over words with total < n of (-1)^{l(I)-1} a_w z^{|w|-n} R_I.
NsymElem<LaurentPoly> ribbon_from_words(int n, const ASpec& spec);

struct LatticePath {
  std::string letters;       // a^{w_1} b a^{w_2} b ...
  std::vector<int> heights;  // w_1+...+w_i - i after each b
};
LatticePath word_to_path(const Word& w);

}  // namespace nck
