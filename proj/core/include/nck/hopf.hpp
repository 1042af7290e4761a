#pragma once

// The noncommutative Connes-Kreimer Hopf algebra (Y basis), its graded dual
// (X basis), the C basis, and the preLie, brace and dendriform operations.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nck/combinat.hpp"
#include "nck/linear.hpp"
#include "nck/tamari.hpp"

namespace nck {

template <class R>
using XElem = LinComb<Forest, R>;
template <class R>
using YElem = LinComb<Forest, R>;
using ForestPair = std::pair<Forest, Forest>;
using ForestTuple = std::vector<Forest>;

// Iterated coproduct of Y_F: sum over words u with u_i <= u_parent(i) of the
// tensor of restrictions F(1) x ... x F(r).
LinComb<ForestTuple, long> y_coproduct(const Forest& f, int r);

// One term of X_a X_b: the forest, its multiplicity, and how many of the
// labellings put the last root of the forest in the left factor.
struct ProductTerm {
  Forest forest;
  long count = 0;
  long prec = 0;
};

// Structure constants of X_a X_b, the transpose of the 2-coproduct.
const std::vector<ProductTerm>& product_terms(const Forest& a, const Forest& b);

namespace detail {

enum class Half { Full, Prec, Succ };

template <class R>
XElem<R> product(const XElem<R>& u, const XElem<R>& v, Half h) {
  XElem<R> out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (h != Half::Full && a.empty() && b.empty())
        throw std::domain_error("dendriform half-product of 1 by 1 is undefined");
      R c = ca * cb;
      for (const auto& t : product_terms(a, b)) {
        long k = h == Half::Full ? t.count : h == Half::Prec ? t.prec : t.count - t.prec;
        if (k != 0) out.add(t.forest, c * from_count<R>(k));
      }
    }
  }
  return out;
}

}  // namespace detail

template <class R>
XElem<R> x_product(const XElem<R>& u, const XElem<R>& v) {
  return detail::product(u, v, detail::Half::Full);
}

// Left half: the last root (canonical label n) lies in the left factor.
template <class R>
XElem<R> x_prec(const XElem<R>& u, const XElem<R>& v) {
  return detail::product(u, v, detail::Half::Prec);
}

template <class R>
XElem<R> x_succ(const XElem<R>& u, const XElem<R>& v) {
  return detail::product(u, v, detail::Half::Succ);
}

template <class R>
XElem<R> x_power(const XElem<R>& u, int k) {
  XElem<R> r(Forest(), from_count<R>(1));
  for (int i = 0; i < k; ++i) r = x_product(r, u);
  return r;
}

// Deconcatenation.
template <class R>
LinComb<ForestPair, R> x_coproduct(const XElem<R>& u) {
  LinComb<ForestPair, R> out;
  for (const auto& [f, c] : u.terms()) {
    auto trees = f.trees();
    for (size_t k = 0; k <= trees.size(); ++k) {
      Forest a, b;
      for (size_t i = 0; i < trees.size(); ++i) (i < k ? a : b) = (i < k ? a : b) * trees[i];
      out.add({a, b}, c);
    }
  }
  return out;
}

// Forests G with F in upset(G), cached per size.
const std::vector<Forest>& cached_downset(const Forest& f);

// C_F = sum over G <= F of X_G.
template <class R>
XElem<R> c_to_x(const LinComb<Forest, R>& c) {
  XElem<R> out;
  for (const auto& [f, k] : c.terms())
    for (const auto& g : cached_downset(f)) out.add(g, k);
  return out;
}

template <class R>
LinComb<Forest, R> x_to_c(const XElem<R>& x) {
  LinComb<Forest, R> out;
  int top = 0;
  for (const auto& [f, k] : x.terms()) top = std::max(top, f.size());
  for (int n = 0; n <= top; ++n) {
    auto order = tamari_linear_order(n);
    std::map<Forest, R> c;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      R v = x.coeff(*it);
      for (const auto& g : upset(*it))
        if (g != *it) {
          auto jt = c.find(g);
          if (jt != c.end()) v = v - jt->second;
        }
      c[*it] = v;
      out.add(*it, v);
    }
  }
  return out;
}

// Sum of trees obtained by grafting the trees of `f`, in order, onto the
// nodes of `tree`. With one tree in `f` this is the right preLie product.
XElem<long> brace_basis(const Forest& f, const Forest& tree);
XElem<long> prelie_basis(const Forest& s, const Forest& t);

template <class R>
XElem<R> brace(const XElem<R>& u, const XElem<R>& v) {
  XElem<R> out;
  for (const auto& [f, cf] : u.terms())
    for (const auto& [t, ct] : v.terms()) {
      if (!t.is_tree()) throw std::invalid_argument("brace: right argument must be tree-supported");
      R c = cf * ct;
      const auto grafts = brace_basis(f, t);
      for (const auto& [g, k] : grafts.terms()) out.add(g, c * from_count<R>(k));
    }
  return out;
}

template <class R>
XElem<R> prelie(const XElem<R>& u, const XElem<R>& v) {
  for (const auto& [f, c] : u.terms())
    if (!f.is_tree()) throw std::invalid_argument("prelie: left argument must be tree-supported");
  return brace(u, v);
}

// B(X_F) = X_{B+(F)}.
template <class R>
XElem<R> x_graft(const XElem<R>& u) {
  return u.map_keys([](const Forest& f) { return Forest::graft(f); });
}

// x_tau = |Aut(tau)| times the sum of plane trees of class tau.
XElem<long> x_tau(const Forest& representative);

}  // namespace nck
