#include "nck/idempotents.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nck {

DynkinPair dynkin(int n) {
  return {divide_1mq_at_1(transform_1mq(n)), divide_1mq_at_1(transform_1pmq(n))};
}

XElem<long> dynkin_bracketing(int n) {
  XElem<long> dot(Forest::point());
  if (n <= 0) return XElem<long>(Forest());
  XElem<long> x = dot;
  for (int k = 1; k < n; ++k) x = prelie(x, dot);
  return x;
}

MultiPoly chi_poly(const Forest& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("chi_poly: argument must be a tree");
  MultiPoly prod(1);
  for (const auto& t : tree.children().trees()) prod *= chi_poly(t);
  return discrete_integral(prod);
}

XElem<Rational> eulerian(int n, int k) {
  XElem<Rational> out;
  for (const auto& f : enumerate_forests(n)) {
    MultiPoly g = eval_binomial(gamma_qsym(f));
    out.add(f, g.coeff(Monomial(Var::alpha(), k)));
  }
  return out;
}

NsymElem<Rational> solomon(int n) {
  NsymElem<Rational> out{NBasis::S, {}};
  for (const auto& i : compositions(n)) {
    int l = i.length();
    out.terms.add(i, Rational(l % 2 == 1 ? 1 : -1, l));
  }
  return out;
}

NsymElem<RationalFn> q_solomon(int n) {
  NsymElem<RationalFn> out{NBasis::R, {}};
  for (const auto& i : compositions(n)) {
    int l = i.length();
    int e = i.maj() - l * (l - 1) / 2;
    MultiPoly num = MultiPoly::var(Var::q(), e) * MultiPoly(Rational(l % 2 == 1 ? 1 : -1, n));
    out.terms.add(i, RationalFn(num, gaussian_binomial(n - 1, l - 1)));
  }
  return out;
}

// ---------------------------------------------------------------- group algebra

GroupAlgebra::GroupAlgebra(int n) : n_(n) {
  if (n > kGroupAlgebraMaxN) throw std::length_error("group algebra above the cost guard");
  if (n < 0) throw std::invalid_argument("negative degree");
  perms_ = all_permutations(n);
  std::sort(perms_.begin(), perms_.end());
  std::map<Permutation, int> rank;
  for (size_t k = 0; k < perms_.size(); ++k) {
    rank[perms_[k]] = static_cast<int>(k);
    descents_.push_back(descent_set(perms_[k]));
  }
  table_.assign(perms_.size(), std::vector<int>(perms_.size()));
  Permutation c(n);
  for (size_t a = 0; a < perms_.size(); ++a)
    for (size_t b = 0; b < perms_.size(); ++b) {
      for (int i = 0; i < n; ++i) c[i] = perms_[a][perms_[b][i] - 1];
      table_[a][b] = rank.at(c);
    }
}

GroupAlgebra::Elem GroupAlgebra::beta(const NsymElem<Rational>& e) const {
  auto r = convert(e, NBasis::R);
  Elem out = zero();
  for (const auto& [i, c] : r.terms.terms()) {
    if (i.weight() != n_) throw std::invalid_argument("beta: element is not of degree n");
    auto d = i.descent_set();
    for (size_t k = 0; k < perms_.size(); ++k)
      if (descents_[k] == d) out[k] += c;
  }
  return out;
}

GroupAlgebra::Elem GroupAlgebra::product(const Elem& u, const Elem& v, bool compose_left) const {
  Elem out = zero();
  for (size_t a = 0; a < u.size(); ++a) {
    if (sgn(u[a]) == 0) continue;
    for (size_t b = 0; b < v.size(); ++b) {
      if (sgn(v[b]) == 0) continue;
      int k = compose_left ? table_[a][b] : table_[b][a];
      out[k] += u[a] * v[b];
    }
  }
  return out;
}

const GroupAlgebra& group_algebra(int n) {
  static std::mutex mu;
  static std::map<int, GroupAlgebra> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GroupAlgebra(n)).first;
  return it->second;
}

QuasiIdempotence quasi_idempotent_check(const NsymElem<Rational>& e, int n, bool compose_left) {
  const GroupAlgebra& g = group_algebra(n);
  auto b = g.beta(e);
  auto sq = g.product(b, b, compose_left);
  QuasiIdempotence r;
  size_t pivot = 0;
  while (pivot < b.size() && sgn(b[pivot]) == 0) ++pivot;
  if (pivot == b.size()) return r;
  r.scalar = sq[pivot] / b[pivot];
  for (size_t k = 0; k < b.size(); ++k)
    if (sq[k] != r.scalar * b[k]) return r;
  r.proportional = sgn(r.scalar) != 0;
  return r;
}

bool pinned_orientation() {
  static const bool value = [] {
    auto psi = dynkin(3).psi;
    for (bool left : {true, false}) {
      auto q = quasi_idempotent_check(psi, 3, left);
      if (q.proportional && q.scalar == 3) return left;
    }
    throw std::logic_error("no product orientation gives Psi_3^2 = 3 Psi_3");
  }();
  return value;
}

QuasiIdempotence quasi_idempotent_check(const NsymElem<Rational>& e, int n) {
  return quasi_idempotent_check(e, n, pinned_orientation());
}

}  // namespace nck
