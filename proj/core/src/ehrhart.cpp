#include "nck/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nck {

ForestPoset ForestPoset::from_forest(const Forest& f) {
  ForestPoset p;
  p.forest = f;
  p.n = f.size();
  Labelled l = label(f);
  for (int i = 1; i <= p.n; ++i)
    for (int j = l.parent[i]; j != 0; j = l.parent[j]) p.less.insert({i, j});
  return p;
}

namespace {

bool respects(const ForestPoset& p, const std::vector<int>& x, bool strict) {
  for (auto [i, j] : p.less) {
    if (strict ? x[i - 1] >= x[j - 1] : x[i - 1] > x[j - 1]) return false;
  }
  return true;
}

void for_each_box_point(int dim, int lo, int hi, const std::function<void(const Point&)>& fn) {
  if (lo > hi && dim > 0) return;
  Point x(dim, lo);
  std::function<void(int)> rec = [&](int k) {
    if (k == dim) {
      fn(x);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      x[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<Point> lattice_points(const ForestPoset& p, int n, bool interior) {
  if (n < 0) throw std::invalid_argument("lattice_points: negative dilation");
  std::vector<Point> out;
  int lo = interior ? 1 : 0, hi = interior ? n - 1 : n;
  for_each_box_point(p.n, lo, hi, [&](const Point& x) {
    if (respects(p, x, interior)) out.push_back(x);
  });
  return out;
}

WQSymElem gamma_wqsym(const ForestPoset& p, bool is_signed, SignedRoute route) {
  WQSymElem out;
  if (!is_signed || route == SignedRoute::StrictWords) {
    for (const auto& u : packed_words(p.n))
      if (respects(p, u, is_signed)) out.add(u, 1);
    return out;
  }
  long global = p.n % 2 == 0 ? 1 : -1;
  for (const auto& u : packed_words(p.n)) {
    if (!respects(p, u, false)) continue;
    int m = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
    long s = global * (m % 2 == 0 ? 1 : -1);
    for (const auto& v : coarsenings(u)) out.add(v, s);
  }
  return out;
}

QsymElem<long> wqsym_commutative_image(const WQSymElem& e) {
  QsymElem<long> out{QBasis::M, {}};
  for (const auto& [u, c] : e.terms()) {
    int m = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
    std::vector<int> parts(m, 0);
    for (int v : u) ++parts[v - 1];
    out.terms.add(Composition(parts), c);
  }
  return out;
}

MultiPoly ehrhart_polynomial(const ForestPoset& p) {
  MultiPoly g = eval_binomial(gamma_qsym(p.forest));
  return g.substitute(Var::alpha(), MultiPoly::var(Var::x()) + MultiPoly(1));
}

MultiPoly eval_at(const MultiPoly& poly, Var v, const Rational& value) { return poly.substitute(v, MultiPoly(value)); }

ReciprocityReport reciprocity_check(const ForestPoset& p, int n) {
  ReciprocityReport r;
  r.interior_points = static_cast<long>(lattice_points(p, n, true).size());
  MultiPoly e = eval_at(ehrhart_polynomial(p), Var::x(), Rational(-n));
  r.polynomial_value = e.constant_term() * (p.n % 2 == 0 ? 1 : -1);
  // Strict words on n-1 equal letters: M_u(1^{n-1}) = C(n-1, max u).
  const auto signed_gamma = gamma_wqsym(p, true);
  for (const auto& [u, c] : signed_gamma.terms()) {
    int m = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
    r.signed_gamma_count += c * binomial(n - 1, m).get_num().get_si();
  }
  r.holds = Rational(r.interior_points) == r.polynomial_value && r.interior_points == r.signed_gamma_count;
  return r;
}

MultiPoly q_count(const ForestPoset& p, int n, QCountKind kind) {
  RationalFn f = eval_Xqt(gamma_qsym(p.forest));
  RationalFn v = at_t_power(f, kind == QCountKind::Boundary ? n : -n);
  const auto& den = v.den().terms();
  if (den.size() != 1) throw std::logic_error("q_count: value is not a Laurent polynomial");
  const auto& [m, c] = *den.begin();
  return v.num() * MultiPoly(m.inverse(), 1 / c);
}

MultiPoly q_count_enumerated(const ForestPoset& p, int n, QCountKind kind) {
  bool interior = kind == QCountKind::Interior;
  MultiPoly out;
  for (const auto& x : lattice_points(p, n, interior)) {
    int s = 0;
    for (int v : x) s += v;
    out += MultiPoly::var(Var::q(), interior ? -s : s);
  }
  if (interior && p.n % 2 == 1) out = -out;
  return out;
}

}  // namespace nck
