#include "nck/fqsym.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nck {

FQSymElem gamma_fqsym(const Forest& f) {
  FQSymElem out;
  for (auto& p : linear_extensions(f)) out.add(p, 1);
  return out;
}

namespace {

void shuffles(const Permutation& a, const Permutation& b, const std::function<void(const Permutation&)>& emit) {
  int shift = static_cast<int>(a.size());
  Permutation w;
  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == a.size() && j == b.size()) {
      emit(w);
      return;
    }
    if (i < a.size()) {
      w.push_back(a[i]);
      rec(i + 1, j);
      w.pop_back();
    }
    if (j < b.size()) {
      w.push_back(b[j] + shift);
      rec(i, j + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
}

using Mask = std::uint64_t;

// Bit (i,j) set when positions i<j are inverted.
Mask position_inversions(const Permutation& p) {
  Mask m = 0;
  int bit = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j, ++bit)
      if (p[i] > p[j]) m |= Mask(1) << bit;
  return m;
}

struct PermTable {
  std::vector<Permutation> perms;
  std::vector<Mask> masks;
  std::vector<int> length;
  std::map<Permutation, int> index;
};

const PermTable& perm_table(int n) {
  static std::mutex mu;
  static std::map<int, PermTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PermTable t;
  t.perms = all_permutations(n);
  for (size_t k = 0; k < t.perms.size(); ++k) {
    t.masks.push_back(position_inversions(t.perms[k]));
    t.length.push_back(__builtin_popcountll(t.masks.back()));
    t.index[t.perms[k]] = static_cast<int>(k);
  }
  return cache.emplace(n, std::move(t)).first->second;
}

// Coefficients of G_alpha in the S basis (Moebius function of the left weak order).
std::map<int, long> g_in_s(int n, int alpha) {
  const auto& t = perm_table(n);
  std::map<int, long> residual{{alpha, 1}}, out;
  while (!residual.empty()) {
    auto top = std::max_element(residual.begin(), residual.end(), [&](const auto& x, const auto& y) {
      return t.length[x.first] < t.length[y.first];
    });
    int s = top->first;
    long c = top->second;
    out[s] += c;
    for (size_t k = 0; k < t.perms.size(); ++k) {
      if ((t.masks[k] & ~t.masks[s]) != 0) continue;
      long& r = residual[static_cast<int>(k)];
      r -= c;
      if (r == 0) residual.erase(static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace

FQSymElem fqsym_product(const FQSymElem& a, const FQSymElem& b) {
  FQSymElem out;
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) shuffles(p, q, [&](const Permutation& w) { out.add(w, cp * cq); });
  return out;
}

bool left_weak_leq(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size()) return false;
  Mask a = position_inversions(tau), b = position_inversions(sigma);
  return (a & ~b) == 0;
}

bool right_weak_leq(const Permutation& tau, const Permutation& sigma) {
  return left_weak_leq(inverse(tau), inverse(sigma));
}

FQSymElem m_product(const Permutation& a, const Permutation& b) {
  int n1 = static_cast<int>(a.size()), n2 = static_cast<int>(b.size()), n = n1 + n2;
  if (n > kFQSymMaxN) throw std::length_error("m_product: size above the FQSym cost guard");
  if (!is_permutation(a) || !is_permutation(b)) throw std::invalid_argument("m_product: not a permutation");
  const auto& big = perm_table(n);
  const auto& t1 = perm_table(n1);
  const auto& t2 = perm_table(n2);
  int ia = t1.index.at(a), ib = t2.index.at(b);
  std::map<int, std::map<int, long>> left_cache, right_cache;
  auto coeff_in = [](std::map<int, std::map<int, long>>& cache, int size, int alpha, int target) -> long {
    auto it = cache.find(alpha);
    if (it == cache.end()) it = cache.emplace(alpha, g_in_s(size, alpha)).first;
    auto jt = it->second.find(target);
    return jt == it->second.end() ? 0 : jt->second;
  };
  // f(mu): coefficient of S^a (x) S^b in the (n1,n2) part of Delta G_mu.
  std::vector<long> f(big.perms.size(), 0);
  for (size_t k = 0; k < big.perms.size(); ++k) {
    const auto& mu = big.perms[k];
    Permutation low, high;
    for (int v : mu) (v <= n1 ? low : high).push_back(v);
    int il = t1.index.at(low), ih = t2.index.at(standardize(high));
    long cl = coeff_in(left_cache, n1, il, ia);
    if (cl == 0) continue;
    f[k] = cl * coeff_in(right_cache, n2, ih, ib);
  }
  FQSymElem out;
  for (size_t v = 0; v < big.perms.size(); ++v) {
    long c = 0;
    for (size_t k = 0; k < big.perms.size(); ++k)
      if (f[k] != 0 && (big.masks[k] & ~big.masks[v]) == 0) c += f[k];
    out.add(big.perms[v], c);
  }
  return out;
}

FQSymElem quotient_132(const FQSymElem& e) {
  FQSymElem out;
  for (const auto& [p, c] : e.terms())
    if (!contains_pattern_132(p)) out.add(p, c);
  return out;
}

Forest forest_of_m_index(const Permutation& nu) {
  auto f = forest_from_max_extension(inverse(nu));
  if (!f) throw std::invalid_argument("permutation does not index a forest");
  return *f;
}

PatternQuotientResult pattern_quotient_check(const Permutation& a, const Permutation& b) {
  if (contains_pattern_132(a) || contains_pattern_132(b))
    throw std::invalid_argument("pattern_quotient_check: arguments must avoid 132");
  PatternQuotientResult r;
  r.full = m_product(a, b);
  r.quotient = quotient_132(r.full);
  for (const auto& [p, c] : r.quotient.terms()) r.as_x.add(forest_of_m_index(p), c);
  r.x_side = x_product(XElem<long>(forest_of_m_index(a)), XElem<long>(forest_of_m_index(b)));
  r.agree = r.as_x == r.x_side;
  return r;
}

}  // namespace nck
