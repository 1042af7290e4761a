#pragma once

// Order polytopes of forest posets: lattice points, the packed-word
// generating series Gamma_P(A), Ehrhart polynomials, reciprocity and q-counts.

#include <set>
#include <utility>
#include <vector>

#include "nck/combinat.hpp"
#include "nck/linear.hpp"
#include "nck/nsym.hpp"

namespace nck {

// Labels 1..n from the canonical labelling; (i, j) means i <_P j, i.e. j is
// an ancestor of i. The relation is transitively closed.
struct ForestPoset {
  Forest forest;
  int n = 0;
  std::set<std::pair<int, int>> less;

  static ForestPoset from_forest(const Forest& f);
};

using Point = std::vector<int>;

// Points of nQ_P: 0 <= x_i <= n and x_i <= x_j when i <_P j. With `interior`
// all inequalities are strict.
std::vector<Point> lattice_points(const ForestPoset& p, int n, bool interior = false);

using WQSymElem = LinComb<PackedWord, long>;

enum class SignedRoute { StrictWords, Refinement };
// Unsigned: packed words with u_i <= u_j for i <_P j. Signed: (-1)^n Gamma_P(-A),
// either as strict words or through M_u(-A) = (-1)^{max u} sum over coarsenings.
WQSymElem gamma_wqsym(const ForestPoset& p, bool is_signed, SignedRoute route = SignedRoute::StrictWords);
// Letter-count image M_u -> M_{evaluation of u}.
QsymElem<long> wqsym_commutative_image(const WQSymElem& e);

// E(x) = Gamma_P(alpha) at alpha = x + 1, polynomial in x.
MultiPoly ehrhart_polynomial(const ForestPoset& p);
MultiPoly eval_at(const MultiPoly& poly, Var v, const Rational& value);

struct ReciprocityReport {
  long interior_points = 0;
  Rational polynomial_value;  // (-1)^{|P|} E(-n)
  long signed_gamma_count = 0;
  bool holds = false;
};
ReciprocityReport reciprocity_check(const ForestPoset& p, int n);

enum class QCountKind { Boundary, Interior };
// Boundary: Gamma_P(X_{q,q^n}), the sum of q^{x_1+...+x_m} over nQ_P.
// Interior: Gamma_P(X_{q,t}) at t = q^{-n}.
MultiPoly q_count(const ForestPoset& p, int n, QCountKind kind);
// Direct enumeration: sum over points of q^{sum}, and for the interior
// (-1)^{|P|} times the sum of q^{-sum}.
MultiPoly q_count_enumerated(const ForestPoset& p, int n, QCountKind kind);

}  // namespace nck
