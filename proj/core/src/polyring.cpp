#include "nck/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace nck {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
  Rational r;
  if (r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational factorial(long n) {
  Rational r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// ---------------------------------------------------------------- Var

std::optional<Var> Var::from_name(std::string_view name) {
  if (name == "q") return q();
  if (name == "t") return t();
  if (name == "x") return x();
  if (name == "alpha") return alpha();
  if (name == "a") return a();
  if (name == "b") return b();
  if (name.size() >= 2 && name[0] == 'a') {
    int k = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      k = 10 * k + (c - '0');
      if (k > 60000) return std::nullopt;
    }
    return ak(k);
  }
  return std::nullopt;
}

std::string Var::name() const {
  static const char* fixed[] = {"q", "t", "x", "alpha", "a", "b"};
  if (id_ < 6) return fixed[id_];
  if (id_ >= kFirstA) return "a" + std::to_string(id_ - kFirstA);
  return "v" + std::to_string(id_);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int e) {
  if (e != 0) e_.push_back({v.id(), e});
}

int Monomial::degree(Var v) const {
  for (auto& [id, e] : e_)
    if (id == v.id()) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& p : e_) d += p.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      int s = e_[i].second + o.e_[j].second;
      if (s != 0) r.e_.push_back({e_[i].first, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& p : r.e_) p.second = -p.second;
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (auto& p : e_)
    if (p.first != v.id()) r.e_.push_back(p);
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    std::uint16_t ia = i < e_.size() ? e_[i].first : UINT16_MAX;
    std::uint16_t ib = j < o.e_.size() ? o.e_[j].first : UINT16_MAX;
    std::uint16_t v = std::min(ia, ib);
    int ea = ia == v ? e_[i].second : 0;
    int eb = ib == v ? o.e_[j].second : 0;
    if (ea != eb) return ea < eb;
    if (ia == v) ++i;
    if (ib == v) ++j;
  }
  return false;
}

std::string Monomial::str() const {
  std::string s;
  for (auto& [id, e] : e_) {
    if (!s.empty()) s += "*";
    s += Var::from_id(id).name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(m, c);
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coeff(Monomial()); }

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = INT_MIN;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

int MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = INT_MAX;
  for (auto& [m, c] : terms_) d = std::min(d, m.degree(v));
  return d;
}

bool MultiPoly::involves(Var v) const {
  for (auto& [m, c] : terms_)
    if (m.degree(v) != 0) return true;
  return false;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  std::vector<std::uint16_t> ids;
  for (auto& [m, c] : terms_)
    for (auto& p : m.exponents()) ids.push_back(p.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto id : ids) out.push_back(Var::from_id(id));
  return out;
}

MultiPoly MultiPoly::coeff_of(Var v, int e) const {
  MultiPoly r;
  for (auto& [m, c] : terms_)
    if (m.degree(v) == e) r.add_term(m.without(v), c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& p) const {
  if (!involves(v)) return *this;
  MultiPoly r;
  std::map<int, MultiPoly> powers;
  for (auto& [m, c] : terms_) {
    int e = m.degree(v);
    MultiPoly rest(m.without(v), c);
    if (e == 0) {
      r += rest;
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) {
      MultiPoly pe;
      if (e > 0) {
        pe = p.pow(static_cast<unsigned>(e));
      } else {
        if (p.terms_.size() != 1) throw std::domain_error("negative power of a non-monomial substitution");
        auto [pm, pc] = *p.terms_.begin();
        pe = MultiPoly(pm.inverse(), 1 / pc).pow(static_cast<unsigned>(-e));
      }
      it = powers.emplace(e, std::move(pe)).first;
    }
    r += rest * it->second;
  }
  return r;
}

std::pair<Monomial, Rational> MultiPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

namespace {

// Monomial that clears all negative exponents of p.
Monomial clearing_monomial(const MultiPoly& p) {
  Monomial m;
  for (Var v : p.variables()) {
    int lo = p.min_degree(v);
    if (lo < 0) m = m * Monomial(v, -lo);
  }
  return m;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (auto& [id, e] : d.exponents()) {
    int em = 0;
    for (auto& p : m.exponents())
      if (p.first == id) em = p.second;
    if (em < e) return false;
  }
  return true;
}

}  // namespace

std::optional<MultiPoly> MultiPoly::try_div(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return MultiPoly();
  Monomial mf = clearing_monomial(*this), md = clearing_monomial(d);
  MultiPoly r = *this * MultiPoly(mf), dd = d * MultiPoly(md);
  auto [ld, lc] = dd.leading();
  MultiPoly quot;
  while (!r.is_zero()) {
    auto [lr, rc] = r.leading();
    if (!divides(ld, lr)) return std::nullopt;
    MultiPoly term(lr * ld.inverse(), rc / lc);
    quot += term;
    r -= term * dd;
  }
  return quot * MultiPoly(md * mf.inverse());
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
  auto r = try_div(d);
  if (!r) throw std::domain_error("inexact polynomial division");
  return *r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += a.get_str();
    } else if (a == 1) {
      s += m.str();
    } else {
      s += a.get_str() + "*" + m.str();
    }
  }
  return s;
}

namespace {

// Division with remainder for polynomials univariate in v (nonnegative powers).
std::pair<MultiPoly, MultiPoly> divmod_univariate(MultiPoly a, const MultiPoly& b, Var v) {
  int db = b.degree(v);
  Rational lb = b.coeff(Monomial(v, db));
  MultiPoly quot;
  while (!a.is_zero() && a.degree(v) >= db) {
    int da = a.degree(v);
    MultiPoly term(Monomial(v, da - db), a.coeff(Monomial(v, da)) / lb);
    quot += term;
    a -= term * b;
  }
  return {quot, a};
}

MultiPoly monic(const MultiPoly& p, Var v) {
  if (p.is_zero()) return p;
  Rational lc = p.coeff(Monomial(v, p.degree(v)));
  return p * MultiPoly(Rational(1) / lc);
}

bool univariate_in(const MultiPoly& p, Var v) {
  for (auto& [m, c] : p.terms())
    for (auto& e : m.exponents())
      if (e.first != v.id() || e.second < 0) return false;
  return true;
}

}  // namespace

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, Var v) {
  MultiPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod_univariate(x, y, v).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, v);
}

MultiPoly bernoulli_polynomial(int m) {
  std::vector<Rational> B(m + 1);
  B[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational s = 0;
    for (int j = 0; j < k; ++j) s += binomial(k + 1, j) * B[j];
    B[k] = -s / Rational(k + 1);
  }
  MultiPoly r;
  for (int k = 0; k <= m; ++k) r += MultiPoly(Monomial(Var::t(), m - k), binomial(m, k) * B[k]);
  return r;
}

MultiPoly discrete_integral(const MultiPoly& p) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    int e = m.degree(Var::t());
    if (e < 0) throw std::domain_error("discrete_integral: negative power of t");
    MultiPoly b = bernoulli_polynomial(e + 1);
    b -= MultiPoly(b.constant_term());
    r += MultiPoly(m.without(Var::t()), c / Rational(e + 1)) * b;
  }
  return r;
}

MultiPoly q_integer(int n) {
  MultiPoly r;
  for (int i = 0; i < n; ++i) r += MultiPoly::var(Var::q(), i);
  return r;
}

MultiPoly gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return MultiPoly();
  MultiPoly num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= MultiPoly(1) - MultiPoly::var(Var::q(), n - i);
    den *= MultiPoly(1) - MultiPoly::var(Var::q(), i + 1);
  }
  return num.exact_div(den);
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  // Clear negative exponents on both sides.
  Monomial m = clearing_monomial(num_) * clearing_monomial(den_);
  if (!m.is_one()) {
    num_ *= MultiPoly(m);
    den_ *= MultiPoly(m);
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_term();
    num_ *= MultiPoly(1 / c);
    den_ = MultiPoly(1);
    return;
  }
  auto vars = den_.variables();
  if (vars.size() == 1 && univariate_in(den_, vars[0])) {
    Var v = vars[0];
    MultiPoly g = den_;
    // Group numerator terms by their part outside v.
    std::map<Monomial, MultiPoly> groups;
    for (auto& [mm, c] : num_.terms()) {
      int e = mm.degree(v);
      groups[mm.without(v)] += MultiPoly(Monomial(v, e), c);
    }
    for (auto& [k, grp] : groups) {
      if (g.is_constant()) break;
      if (!univariate_in(grp, v)) {
        g = MultiPoly(1);
        break;
      }
      g = gcd_univariate(g, grp, v);
    }
    if (!g.is_constant()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    Rational lc = den_.coeff(Monomial(v, den_.degree(v)));
    num_ *= MultiPoly(1 / lc);
    den_ *= MultiPoly(1 / lc);
    return;
  }
  if (auto qt = num_.try_div(den_)) {
    num_ = *qt;
    den_ = MultiPoly(1);
  }
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.num_.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    auto va = den_.variables(), vb = o.den_.variables();
    if (va.size() == 1 && vb.size() == 1 && va[0] == vb[0] && univariate_in(den_, va[0]) &&
        univariate_in(o.den_, va[0])) {
      MultiPoly g = gcd_univariate(den_, o.den_, va[0]);
      MultiPoly fa = o.den_.exact_div(g);
      MultiPoly fb = den_.exact_div(g);
      num_ = num_ * fa + o.num_ * fb;
      den_ = den_ * fa;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
  }
  reduce();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

bool RationalFn::operator==(const RationalFn& o) const { return num_ * o.den_ == o.num_ * den_; }

bool ratfn_equal(const RationalFn& f, const RationalFn& g) { return f == g; }

RationalFn RationalFn::substitute(Var v, const MultiPoly& p) const {
  MultiPoly d = den_.substitute(v, p);
  if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return RationalFn(num_.substitute(v, p), d);
}

std::optional<MultiPoly> RationalFn::as_polynomial() const { return num_.try_div(den_); }

std::string RationalFn::str() const {
  if (den_ == MultiPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const MultiPoly& c, int window) { return monomial(c, 0, window); }

LaurentPoly LaurentPoly::monomial(const MultiPoly& c, int exp, int window) {
  LaurentPoly r(window);
  r.set_coeff(exp, c);
  return r;
}

MultiPoly LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? MultiPoly() : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (c_.empty()) return std::nullopt;
  return c_.begin()->first;
}

void LaurentPoly::set_coeff(int e, const MultiPoly& c) {
  if (e > prec_) return;
  if (e < -window_) overflow_ = true;
  if (e > window_) {
    prec_ = std::min(prec_, window_);
    return;
  }
  if (c.is_zero())
    c_.erase(e);
  else
    c_[e] = c;
}

void LaurentPoly::set_precision(int p) {
  prec_ = std::min(prec_, p);
  trim();
}

void LaurentPoly::trim() {
  if (prec_ == kExact) return;
  c_.erase(c_.upper_bound(prec_), c_.end());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  window_ = std::max(window_, o.window_);
  overflow_ = overflow_ || o.overflow_;
  prec_ = std::min(prec_, o.prec_);
  for (auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  trim();
  return *this;
}

namespace {

long long low_end(const LaurentPoly& f) {
  if (auto m = f.min_exponent()) return *m;
  if (f.precision() == LaurentPoly::kExact) return LaurentPoly::kExact;
  return static_cast<long long>(f.precision()) + 1;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(std::max(a.window_, b.window_));
  r.overflow_ = a.overflow_ || b.overflow_;
  bool a_zero = a.c_.empty() && a.prec_ == LaurentPoly::kExact;
  bool b_zero = b.c_.empty() && b.prec_ == LaurentPoly::kExact;
  if (a_zero || b_zero) return r;
  long long p = LaurentPoly::kExact;
  if (a.prec_ != LaurentPoly::kExact) p = std::min(p, a.prec_ + low_end(b));
  if (b.prec_ != LaurentPoly::kExact) p = std::min(p, b.prec_ + low_end(a));
  r.prec_ = static_cast<int>(std::min<long long>(p, LaurentPoly::kExact));
  for (auto& [ea, ca] : a.c_) {
    for (auto& [eb, cb] : b.c_) {
      int e = ea + eb;
      if (e > r.prec_) continue;
      if (e > r.window_) {
        r.prec_ = std::min(r.prec_, r.window_);
        continue;
      }
      if (e < -r.window_) r.overflow_ = true;
      auto it = r.c_.find(e);
      MultiPoly prod = ca * cb;
      if (it == r.c_.end()) {
        if (!prod.is_zero()) r.c_.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::scaled(const MultiPoly& s) const {
  LaurentPoly r = *this;
  r.c_.clear();
  for (auto& [e, c] : c_) {
    MultiPoly v = c * s;
    if (!v.is_zero()) r.c_.emplace(e, std::move(v));
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(MultiPoly(1), window_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::polar_part() const {
  LaurentPoly r(window_);
  r.overflow_ = overflow_ || prec_ < -1;
  for (auto& [e, c] : c_)
    if (e < 0) r.c_.emplace(e, c);
  return r;
}

LaurentPoly LaurentPoly::regular_part() const {
  LaurentPoly r(window_);
  r.overflow_ = overflow_;
  r.prec_ = prec_;
  for (auto& [e, c] : c_)
    if (e >= 0) r.c_.emplace(e, c);
  return r;
}

MultiPoly LaurentPoly::residue() const {
  if (prec_ < -1) throw std::domain_error("residue beyond known precision");
  return coeff(-1);
}

MultiPoly LaurentPoly::at_one() const {
  if (prec_ != kExact) throw std::domain_error("evaluation at z=1 of a truncated series");
  MultiPoly s;
  for (auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::substitute(Var v, const MultiPoly& p) const {
  LaurentPoly r = *this;
  r.c_.clear();
  for (auto& [e, c] : c_) {
    MultiPoly s = c.substitute(v, p);
    if (!s.is_zero()) r.c_.emplace(e, std::move(s));
  }
  return r;
}

std::string LaurentPoly::str() const {
  std::string s;
  for (auto& [e, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (e != 0) s += "*z^" + std::to_string(e);
  }
  if (s.empty()) s = "0";
  if (prec_ != kExact) s += " + O(z^" + std::to_string(prec_ + 1) + ")";
  return s;
}

std::pair<LaurentPoly, LaurentPoly> polar_split(const LaurentPoly& f) {
  return {f.polar_part(), f.regular_part()};
}

bool agree_up_to_precision(const LaurentPoly& a, const LaurentPoly& b) {
  int p = std::min(a.precision(), b.precision());
  auto check = [&](const LaurentPoly& x, const LaurentPoly& y) {
    for (auto& [e, c] : x.terms()) {
      if (e > p) break;
      if (!(c == y.coeff(e))) return false;
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

}  // namespace nck
