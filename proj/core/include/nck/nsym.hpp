#pragma once

// Noncommutative symmetric functions (S, Lambda, ribbon and signed ribbon
// bases), quasi-symmetric functions (M, F), their images in the X basis, and
// the alphabet transforms and specializations used with them.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nck/combinat.hpp"
#include "nck/hopf.hpp"
#include "nck/linear.hpp"
#include "nck/polyring.hpp"

namespace nck {

enum class NBasis { S, Lambda, R, SignedR };
enum class QBasis { M, F };

std::string to_string(NBasis b);
std::string to_string(QBasis b);
NBasis parse_nbasis(std::string_view s);

template <class R>
struct NsymElem {
  NBasis basis = NBasis::R;
  LinComb<Composition, R> terms;
};

template <class R>
struct QsymElem {
  QBasis basis = QBasis::F;
  LinComb<Composition, R> terms;
};

// Integer change of basis for a single basis vector. Conversions all pass
// through S; Lambda_m = sum_{|J|=m} (-1)^{m-l(J)} S^J and the same formula
// gives S_m in terms of Lambda.
const LinComb<Composition, long>& nsym_to_s(NBasis from, const Composition& i);
const LinComb<Composition, long>& nsym_from_s(NBasis to, const Composition& i);

template <class R>
NsymElem<R> convert(const NsymElem<R>& e, NBasis to) {
  if (e.basis == to) return e;
  LinComb<Composition, R> s;
  for (const auto& [i, c] : e.terms.terms())
    for (const auto& [j, k] : nsym_to_s(e.basis, i).terms()) s.add(j, c * from_count<R>(k));
  NsymElem<R> out{to, {}};
  for (const auto& [i, c] : s.terms())
    for (const auto& [j, k] : nsym_from_s(to, i).terms()) out.terms.add(j, c * from_count<R>(k));
  return out;
}

template <class R>
NsymElem<R> nsym_basis(NBasis b, const Composition& i, R c = from_count<R>(1)) {
  return NsymElem<R>{b, LinComb<Composition, R>(i, c)};
}

// Product in Sym: concatenation of S (or Lambda) indices. Result in S.
template <class R>
NsymElem<R> nsym_product(const NsymElem<R>& a, const NsymElem<R>& b) {
  auto sa = convert(a, NBasis::S), sb = convert(b, NBasis::S);
  NsymElem<R> out{NBasis::S, {}};
  for (const auto& [i, c] : sa.terms.terms())
    for (const auto& [j, d] : sb.terms.terms()) out.terms.add(i + j, c * d);
  return out;
}

template <class R>
bool nsym_equal(const NsymElem<R>& a, const NsymElem<R>& b) {
  return convert(a, NBasis::R).terms == convert(b, NBasis::R).terms;
}

// Delta e = e x 1 + 1 x e for Delta S_n = sum S_i x S_j.
template <class R>
bool is_primitive(const NsymElem<R>& e) {
  auto s = convert(e, NBasis::S);
  std::map<std::pair<Composition, Composition>, R> acc;
  for (const auto& [i, c] : s.terms.terms()) {
    const auto& parts = i.parts();
    std::vector<int> left, right;
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == parts.size()) {
        if (left.empty() || right.empty()) return;
        auto key = std::make_pair(Composition(left), Composition(right));
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, c);
        else
          it->second = it->second + c;
        return;
      }
      for (int a = 0; a <= parts[k]; ++a) {
        if (a > 0) left.push_back(a);
        if (parts[k] - a > 0) right.push_back(parts[k] - a);
        rec(k + 1);
        if (a > 0) left.pop_back();
        if (parts[k] - a > 0) right.pop_back();
      }
    };
    rec(0);
  }
  for (const auto& [k, v] : acc)
    if (!is_zero(v)) return false;
  return true;
}

// ---------------------------------------------------------------- X images

// Coefficient of X_F in R_I: linear extensions of F with descent composition I.
const XElem<long>& ribbon_to_x(const Composition& i);
// Labellings u_i <= u_parent(i) with evaluation I.
const XElem<long>& s_to_x(const Composition& i);
// Labellings u_i < u_parent(i) with evaluation I.
const XElem<long>& lambda_to_x(const Composition& i);

template <class R>
XElem<R> embed_x(const NsymElem<R>& e) {
  auto r = convert(e, NBasis::R);
  XElem<R> out;
  for (const auto& [i, c] : r.terms.terms())
    for (const auto& [f, k] : ribbon_to_x(i).terms()) out.add(f, c * from_count<R>(k));
  return out;
}

// Inverse of embed_x on its image at fixed degree n: solves for the ribbon
// coefficients. Throws std::domain_error if x is not in the image.
NsymElem<Rational> x_to_ribbons(const XElem<Rational>& x, int n);

// ---------------------------------------------------------------- QSym

const LinComb<Composition, long>& qsym_change(QBasis from, QBasis to, const Composition& i);

template <class R>
QsymElem<R> qsym_convert(const QsymElem<R>& e, QBasis to) {
  if (e.basis == to) return e;
  QsymElem<R> out{to, {}};
  for (const auto& [i, c] : e.terms.terms())
    for (const auto& [j, k] : qsym_change(e.basis, to, i).terms()) out.terms.add(j, c * from_count<R>(k));
  return out;
}

template <class R>
bool qsym_equal(const QsymElem<R>& a, const QsymElem<R>& b) {
  return qsym_convert(a, QBasis::M).terms == qsym_convert(b, QBasis::M).terms;
}

// M_I(-X) = (-1)^{l(I)} sum over J coarser than or equal to I of M_J.
template <class R>
QsymElem<R> minus_X(const QsymElem<R>& e) {
  auto m = qsym_convert(e, QBasis::M);
  QsymElem<R> out{QBasis::M, {}};
  for (const auto& [i, c] : m.terms.terms()) {
    long sign = i.length() % 2 == 0 ? 1 : -1;
    for (const auto& j : compositions(i.weight()))
      if (finer(i, j)) out.terms.add(j, c * from_count<R>(sign));
  }
  return qsym_convert(out, e.basis);
}

enum class GammaRoute { Extensions, Recursion };
// Commutative image of Gamma_F, in the F basis.
QsymElem<long> gamma_qsym(const Forest& f, GammaRoute route = GammaRoute::Extensions);
// F_I F_J through shuffles of representative permutations.
QsymElem<long> qsym_f_product(const QsymElem<long>& a, const QsymElem<long>& b);

// Binomial alphabet: M_I(alpha) = C(alpha, l(I)).
MultiPoly m_binomial(const Composition& i);
template <class R>
MultiPoly eval_binomial(const QsymElem<R>& e) {
  auto m = qsym_convert(e, QBasis::M);
  MultiPoly out;
  for (const auto& [i, c] : m.terms.terms()) out += m_binomial(i) * MultiPoly(c);
  return out;
}

// M_I(l_1, ..., l_k): sum over strictly increasing index choices.
MultiPoly m_alphabet(const Composition& i, const std::vector<MultiPoly>& letters);
template <class R>
MultiPoly eval_alphabet(const QsymElem<R>& e, const std::vector<MultiPoly>& letters) {
  auto m = qsym_convert(e, QBasis::M);
  MultiPoly out;
  for (const auto& [i, c] : m.terms.terms()) out += m_alphabet(i, letters) * MultiPoly(c);
  return out;
}
// Alphabet {1, q, ..., q^n}.
std::vector<MultiPoly> geometric_letters(int n);
template <class R>
MultiPoly eval_geometric(const QsymElem<R>& e, int n) {
  return eval_alphabet(e, geometric_letters(n));
}

// M_I on X_{q,t}: letters 1, q, q^2, ... in increasing order followed by the
// negative letters q^j t (j >= 1) in decreasing order. Denominators are
// products of factors 1 - q^k.
const RationalFn& m_xqt(const Composition& i);
// M_I on the reversed alphabet, i.e. M_{rev I}(X_{q,t}).
RationalFn m_xqt_mirrored(const Composition& i);

template <class R>
RationalFn eval_Xqt(const QsymElem<R>& e, bool mirrored = false) {
  auto m = qsym_convert(e, QBasis::M);
  RationalFn out;
  for (const auto& [i, c] : m.terms.terms())
    out += (mirrored ? m_xqt_mirrored(i) : m_xqt(i)) * RationalFn(MultiPoly(c));
  return out;
}

RationalFn at_t_affine(const RationalFn& f);      // t = 1 + (q-1)x
RationalFn at_t_power(const RationalFn& f, int n);  // t = q^n, n may be negative
RationalFn at_t_scaled(const RationalFn& f);      // t -> q t

// A/(1-q): the t = 0 alphabet read in decreasing order.
RationalFn m_a_over_1mq(const Composition& i);

// S_m(XA) = sum_{|J|=m} M_J(X) S^J(A), extended multiplicatively. The result
// is in the S basis.
NsymElem<RationalFn> transform_by(const NsymElem<Rational>& e,
                                  const std::function<RationalFn(const Composition&)>& m_value);

enum class OmegaCandidate { Mirror, Conjugate, Complement, ReverseComplement };
// Applies the map to F indices. Mirror is the exported omega.
template <class R>
QsymElem<R> omega(const QsymElem<R>& e, OmegaCandidate which = OmegaCandidate::Mirror) {
  auto f = qsym_convert(e, QBasis::F);
  QsymElem<R> out{QBasis::F, {}};
  for (const auto& [i, c] : f.terms.terms()) {
    Composition j;
    switch (which) {
      case OmegaCandidate::Mirror: j = i.mirror(); break;
      case OmegaCandidate::Conjugate: j = i.conjugate(); break;
      case OmegaCandidate::Complement: j = i.complement(); break;
      case OmegaCandidate::ReverseComplement: j = i.complement().mirror(); break;
    }
    out.terms.add(j, c);
  }
  return qsym_convert(out, e.basis);
}

// (1-q) and 1+(-q) transforms of S_n, in the ribbon basis.
NsymElem<MultiPoly> transform_1mq(int n);
NsymElem<MultiPoly> transform_1pmq(int n);
// Exact division by (1-q) followed by q = 1. Throws if not divisible.
NsymElem<Rational> divide_1mq_at_1(const NsymElem<MultiPoly>& e);

// Compositions 1^k and the hook shapes used by the transforms.
Composition ones(int k);

}  // namespace nck
