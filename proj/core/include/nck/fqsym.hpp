#pragma once

// Free quasi-symmetric functions at desk scale: the F basis, the forest
// realization Gamma_F, and the M basis dual to S^sigma used for the 132
// pattern quotient.

#include "nck/combinat.hpp"
#include "nck/hopf.hpp"
#include "nck/linear.hpp"

namespace nck {

using FQSymElem = LinComb<Permutation, long>;

inline constexpr int kFQSymMaxN = 7;

// Gamma_F = sum of F_sigma over the linear extensions of F.
FQSymElem gamma_fqsym(const Forest& f);
// Shifted shuffle product in the F basis.
FQSymElem fqsym_product(const FQSymElem& a, const FQSymElem& b);

// tau <=_L sigma: containment of position inversions.
bool left_weak_leq(const Permutation& tau, const Permutation& sigma);
// tau <=_R sigma: containment of value inversions.
bool right_weak_leq(const Permutation& tau, const Permutation& sigma);

// Product M_a M_b in the basis dual to S^sigma = sum_{tau <=_L sigma} G_tau.
// Throws std::length_error above kFQSymMaxN.
FQSymElem m_product(const Permutation& a, const Permutation& b);
// Drops every M_sigma where sigma contains the pattern 132.
FQSymElem quotient_132(const FQSymElem& e);

struct PatternQuotientResult {
  FQSymElem full;       // M_a M_b
  FQSymElem quotient;   // after discarding 132-patterned terms
  XElem<long> as_x;     // quotient read through M_{sigma_F^{-1}} -> X_F
  XElem<long> x_side;   // X_{F_a} X_{F_b} computed in the X basis
  bool agree = false;
};

// a and b must avoid 132 so that they index forests.
PatternQuotientResult pattern_quotient_check(const Permutation& a, const Permutation& b);
Forest forest_of_m_index(const Permutation& nu);

}  // namespace nck
