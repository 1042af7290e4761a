#pragma once

// Lie idempotents of the descent algebra: Dynkin, Solomon, Eulerian and the
// q-interpolation between them, the polynomials chi_T, and a desk-scale
// symmetric group algebra to test quasi-idempotency.

#include <vector>

#include "nck/hopf.hpp"
#include "nck/nsym.hpp"

namespace nck {

struct DynkinPair {
  NsymElem<Rational> psi;     // from the (1-q) transform
  NsymElem<Rational> psibar;  // from the 1+(-q) transform
};
DynkinPair dynkin(int n);
// ((X_. |> X_.) |> ...) |> X_. with n factors.
XElem<long> dynkin_bracketing(int n);

// t at every leaf, discrete integral of the product of the children below
// every internal node. Polynomial in t.
MultiPoly chi_poly(const Forest& tree);

// sum_F [alpha^k] Gamma_F(alpha) X_F over forests with n nodes.
XElem<Rational> eulerian(int n, int k);
// Degree-n part of log(sigma_1), in the S basis.
NsymElem<Rational> solomon(int n);
// (1/n) sum_I (-1)^{l-1} q^{maj(I) - C(l,2)} / [n-1 choose l-1]_q R_I.
NsymElem<RationalFn> q_solomon(int n);

// ---------------------------------------------------------------- group algebra

inline constexpr int kGroupAlgebraMaxN = 6;

// Dense element of Q[S_n], indexed by the lexicographic rank of the
// permutation in one-line notation.
class GroupAlgebra {
 public:
  // Throws std::length_error above kGroupAlgebraMaxN.
  explicit GroupAlgebra(int n);
  int n() const { return n_; }
  const std::vector<Permutation>& permutations() const { return perms_; }

  using Elem = std::vector<Rational>;
  Elem zero() const { return Elem(perms_.size()); }
  // beta(R_I) = sum of permutations with descent set D(I).
  Elem beta(const NsymElem<Rational>& e) const;
  // Product of the images: (u v)(sigma) = sum over sigma = tau o rho of u(tau) v(rho)
  // when `compose_left` is set, with the factors swapped otherwise.
  Elem product(const Elem& u, const Elem& v, bool compose_left) const;

 private:
  int n_;
  std::vector<Permutation> perms_;
  std::vector<std::set<int>> descents_;
  std::vector<std::vector<int>> table_;  // table_[a][b] = rank of perms_[a] o perms_[b]
};

// Cached instance per degree.
const GroupAlgebra& group_algebra(int n);

// Orientation used by quasi_idempotent_check: the one for which
// Psi_3 Psi_3 = 3 Psi_3.
bool pinned_orientation();

struct QuasiIdempotence {
  bool proportional = false;
  Rational scalar;
};
// Whether beta(e)^2 = c beta(e), and c. e must be homogeneous of degree n <= 6.
QuasiIdempotence quasi_idempotent_check(const NsymElem<Rational>& e, int n);
QuasiIdempotence quasi_idempotent_check(const NsymElem<Rational>& e, int n, bool compose_left);

}  // namespace nck
