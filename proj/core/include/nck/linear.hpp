#pragma once

// Finite formal linear combinations over an ordered basis.

#include <map>
#include <utility>

#include "nck/polyring.hpp"

namespace nck {

template <class K, class R>
class LinComb {
 public:
  using key_type = K;
  using coeff_type = R;

  LinComb() = default;
  explicit LinComb(const K& k, R c = R(1)) { add(k, std::move(c)); }

  void add(const K& k, const R& c) {
    if (is_zero(c)) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }

  R coeff(const K& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? R() : it->second;
  }

  const std::map<K, R>& terms() const { return t_; }
  bool empty() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  LinComb& operator+=(const LinComb& o) {
    for (auto& [k, c] : o.t_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (auto& [k, c] : o.t_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  LinComb operator-() const {
    LinComb r;
    for (auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }

  LinComb scaled(const R& s) const {
    LinComb r;
    for (auto& [k, c] : t_) r.add(k, c * s);
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using R2 = decltype(f(std::declval<const R&>()));
    LinComb<K, R2> r;
    for (auto& [k, c] : t_) r.add(k, f(c));
    return r;
  }

  template <class F>
  LinComb map_keys(F&& f) const {
    LinComb r;
    for (auto& [k, c] : t_) r.add(f(k), c);
    return r;
  }

  bool operator==(const LinComb& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (auto a = t_.begin(), b = o.t_.begin(); a != t_.end(); ++a, ++b) {
      if (a->first < b->first || b->first < a->first) return false;
      if (!(a->second == b->second)) return false;
    }
    return true;
  }

 private:
  std::map<K, R> t_;
};

// Converts integer structure constants into any coefficient ring.
template <class R>
R from_count(long c) {
  return R(c);
}

template <>
inline LaurentPoly from_count<LaurentPoly>(long c) {
  return LaurentPoly::constant(MultiPoly(c), 0);
}

}  // namespace nck
