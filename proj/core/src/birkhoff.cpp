#include "nck/birkhoff.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "nck/tamari.hpp"

namespace nck {

ASpec ASpec::parse(std::string_view text) {
  if (text.empty() || text == "symbolic") return symbolic();
  if (text == "a,b" || text == "ab") return two_parameter();
  throw std::invalid_argument("unknown a(z) choice: " + std::string(text));
}

MultiPoly ASpec::coeff(int k) const {
  if (kind == Kind::Symbolic) return MultiPoly::var(Var::ak(k));
  return MultiPoly::var(k == 0 ? Var::a() : Var::b());
}

LaurentPoly ASpec::series(int window) const {
  LaurentPoly s(window);
  for (int k = 0; k <= window + 2; ++k) s.set_coeff(k - 1, coeff(k));
  return s;
}

MultiPoly ASpec::monomial(const Forest& f) const {
  MultiPoly m(1);
  for (int c : f.code()) m *= coeff(c);
  return m;
}

std::string ASpec::str() const { return kind == Kind::Symbolic ? "symbolic" : "a,b"; }

// ---------------------------------------------------------------- characters

namespace {

struct PhiCache {
  std::mutex mu;
  std::map<std::tuple<int, int, Forest>, LaurentPoly> plus, minus;
};

PhiCache& phi_cache() {
  static PhiCache c;
  return c;
}

LaurentPoly one(int window) { return LaurentPoly::constant(MultiPoly(1), window); }

// phi+(F) a for a tree B+(F).
LaurentPoly graft_argument(const Forest& children, const ASpec& spec, int window) {
  return phi_plus(children, spec, window) * spec.series(window);
}

}  // namespace

const LaurentPoly& phi_plus(const Forest& f, const ASpec& spec, int window) {
  auto& c = phi_cache();
  auto key = std::make_tuple(static_cast<int>(spec.kind), window, f);
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.plus.find(key);
    if (it != c.plus.end()) return it->second;
  }
  LaurentPoly v;
  if (f.empty()) {
    v = one(window);
  } else if (f.is_tree()) {
    v = graft_argument(f.children(), spec, window).polar_part();
  } else {
    v = one(window);
    for (const auto& t : f.trees()) v = v * phi_plus(t, spec, window);
  }
  std::lock_guard<std::mutex> lock(c.mu);
  return c.plus.emplace(key, std::move(v)).first->second;
}

const LaurentPoly& phi_minus(const Forest& f, const ASpec& spec, int window) {
  auto& c = phi_cache();
  auto key = std::make_tuple(static_cast<int>(spec.kind), window, f);
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.minus.find(key);
    if (it != c.minus.end()) return it->second;
  }
  LaurentPoly v;
  if (f.empty()) {
    v = one(window);
  } else if (f.is_tree()) {
    v = -graft_argument(f.children(), spec, window).regular_part();
  } else {
    v = one(window);
    for (const auto& t : f.trees()) v = v * phi_minus(t, spec, window);
  }
  std::lock_guard<std::mutex> lock(c.mu);
  return c.minus.emplace(key, std::move(v)).first->second;
}

LaurentPoly phi_plus_closed(const Forest& f, const ASpec& spec) {
  LaurentPoly out(f.size());
  for (const auto& g : upset(f)) out += LaurentPoly::monomial(spec.monomial(g), -g.roots(), f.size());
  return out;
}

XElem<LaurentPoly> sigma_plus(int n, const ASpec& spec) {
  XElem<LaurentPoly> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& f : enumerate_forests(k)) out.add(f, phi_plus(f, spec, n));
  return out;
}

XElem<LaurentPoly> sigma_minus(int n, const ASpec& spec) {
  XElem<LaurentPoly> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& f : enumerate_forests(k)) out.add(f, phi_minus(f, spec, n));
  return out;
}

XElem<LaurentPoly> sigma_a(int n, const ASpec& spec) {
  XElem<LaurentPoly> out;
  LaurentPoly a = spec.series(n);
  for (int k = 0; k <= n; ++k) {
    LaurentPoly p = a.pow(static_cast<unsigned>(k));
    for (const auto& f : enumerate_forests(k)) out.add(f, p);
  }
  return out;
}

bool factorization_holds(int n, const ASpec& spec) {
  LaurentPoly a = spec.series(n);
  for (const auto& g : enumerate_forests(n)) {
    LaurentPoly rhs(n);
    const auto delta = y_coproduct(g, 2);
    for (const auto& [pair, k] : delta.terms()) {
      const auto& left = pair[0];
      const auto& right = pair[1];
      rhs += (phi_minus(left, spec, n) * a.pow(static_cast<unsigned>(right.size())))
                 .scaled(MultiPoly(k));
    }
    const LaurentPoly& lhs = phi_plus(g, spec, n);
    if (rhs.overflow() || lhs.overflow()) return false;
    if (rhs.precision() < 0) return false;
    if (!agree_up_to_precision(lhs, rhs)) return false;
  }
  return true;
}

LinComb<Forest, MultiPoly> series_C(int n, const ASpec& spec) {
  XElem<MultiPoly> x;
  for (const auto& f : enumerate_forests(n)) x.add(f, phi_plus(f, spec, n).at_one());
  return x_to_c(x);
}

LinComb<Forest, MultiPoly> series_D(int n, const ASpec& spec) {
  XElem<MultiPoly> x;
  for (const auto& f : enumerate_forests(n)) x.add(f, phi_plus(f, spec, n).residue());
  return x_to_c(x);
}

// ---------------------------------------------------------------- D_lambda

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

Partition code_partition(const Forest& f) {
  Partition p;
  for (int c : f.code())
    if (c != 0) p.push_back(c);
  std::sort(p.rbegin(), p.rend());
  return p;
}

LinComb<Forest, long> d_lambda_c(int n, const Partition& lambda) {
  int w = 0;
  for (int p : lambda) w += p;
  if (!is_partition(lambda) || w != n - 1)
    throw std::invalid_argument("d_lambda: lambda must be a partition of n-1");
  LinComb<Forest, long> out;
  for (const auto& t : enumerate_trees(n))
    if (code_partition(t) == lambda) out.add(t, 1);
  return out;
}

XElem<long> d_lambda_x(int n, const Partition& lambda) { return c_to_x(d_lambda_c(n, lambda)); }

NsymElem<Rational> d_lambda_r(int n, const Partition& lambda) {
  auto x = d_lambda_x(n, lambda).map_coeffs([](long c) { return Rational(c); });
  return x_to_ribbons(x, n);
}

// ---------------------------------------------------------------- P^I_eps

LaurentPoly p_i_epsilon(const Composition& i, const std::string& eps, const ASpec& spec, int window) {
  if (static_cast<int>(eps.size()) != i.length())
    throw std::invalid_argument("p_i_epsilon: sign word and composition differ in length");
  LaurentPoly a = spec.series(window);
  LaurentPoly v = one(window);
  for (int k = 0; k < i.length(); ++k) {
    v = v * a.pow(static_cast<unsigned>(i.parts()[k]));
    if (eps[k] == '+')
      v = v.polar_part();
    else if (eps[k] == '-')
      v = v.regular_part();
    else
      throw std::invalid_argument("p_i_epsilon: signs must be '+' or '-'");
  }
  return v;
}

LaurentPoly phi_m(const Composition& i, bool plus, const ASpec& spec, int window) {
  LaurentPoly a = spec.series(window);
  LaurentPoly v = one(window);  // phi^-(M_{()}) = 1
  for (int k = 0; k < i.length(); ++k) {
    LaurentPoly arg = v * a.pow(static_cast<unsigned>(i.parts()[k]));
    bool last = k + 1 == i.length();
    v = (last && plus) ? arg.polar_part() : -arg.regular_part();
  }
  return v;
}

NsymElem<LaurentPoly> sigma_expansion(bool plus, Expansion basis, int n, const ASpec& spec) {
  NsymElem<LaurentPoly> out;
  auto sgn = [](long e) { return MultiPoly(e % 2 == 0 ? 1 : -1); };
  switch (basis) {
    case Expansion::S:
      out.basis = NBasis::S;
      for (const auto& i : compositions(n)) {
        int l = i.length();
        std::string eps = plus ? std::string(l - 1, '-') + "+" : std::string(l, '-');
        out.terms.add(i, p_i_epsilon(i, eps, spec, n).scaled(sgn(plus ? l - 1 : l)));
      }
      break;
    case Expansion::Lambda:
      out.basis = NBasis::Lambda;
      for (const auto& i : compositions(n)) {
        int l = i.length();
        std::string eps = plus ? std::string(l, '+') : std::string(l - 1, '+') + "-";
        out.terms.add(i, p_i_epsilon(i, eps, spec, n).scaled(sgn(n + l + (plus ? 0 : 1))));
      }
      break;
    case Expansion::SignedRibbon:
      out.basis = NBasis::SignedR;
      for (const auto& i : compositions(n)) {
        std::string eps(n, '+');
        for (int d : i.descent_set()) eps[d - 1] = '-';
        eps[n - 1] = plus ? '+' : '-';
        LaurentPoly v = p_i_epsilon(ones(n), eps, spec, n);
        out.terms.add(i, plus ? v : -v);
      }
      break;
  }
  return out;
}

// ---------------------------------------------------------------- words

std::vector<Word> small_words(int n) {
  std::vector<Word> out;
  Word w(n, 0);
  std::function<void(int, int)> rec = [&](int k, int budget) {
    if (k == n) {
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      w[k] = v;
      rec(k + 1, budget - v);
    }
  };
  if (n > 0) rec(0, n - 1);
  return out;
}

Composition word_class(const Word& w) {
  int n = static_cast<int>(w.size());
  std::set<int> d;
  int s = 0;
  for (int k = 1; k <= n; ++k) {
    s += w[k - 1];
    if (k < n && s >= k) d.insert(k);
  }
  if (s >= n) throw std::invalid_argument("word_class: entry sum must be below the length");
  return Composition::from_descent_set(d, n);
}

std::vector<Word> words_W(const Composition& i) {
  std::vector<Word> out;
  for (auto& w : small_words(i.weight()))
    if (word_class(w) == i) out.push_back(w);
  return out;
}

std::vector<Word> words_S(const Composition& i) {
  std::vector<Word> out;
  auto d = i.descent_set();
  for (auto& w : small_words(i.weight())) {
    bool ok = true;
    int s = 0;
    for (int k = 1; k <= i.weight() && ok; ++k) {
      s += w[k - 1];
      if (d.count(k) && s < k) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

long catalan_block_count(const Composition& i) {
  std::string s = i.sign_word();
  long out = 1;
  size_t k = 0;
  while (k < s.size()) {
    size_t j = k;
    while (j < s.size() && s[j] == s[k]) ++j;
    out *= catalan(static_cast<int>(j - k));
    k = j;
  }
  return out;
}

NsymElem<LaurentPoly> ribbon_from_words(int n, const ASpec& spec) {
  NsymElem<LaurentPoly> out{NBasis::R, {}};
  for (const auto& w : small_words(n)) {
    Composition i = word_class(w);
    MultiPoly m(i.length() % 2 == 1 ? 1 : -1);
    int s = 0;
    for (int v : w) {
      m *= spec.coeff(v);
      s += v;
    }
    out.terms.add(i, LaurentPoly::monomial(m, s - n, n));
  }
  return out;
}

LatticePath word_to_path(const Word& w) {
  LatticePath p;
  int h = 0;
  for (int v : w) {
    p.letters.append(static_cast<size_t>(v), 'a');
    p.letters.push_back('b');
    h += v - 1;
    p.heights.push_back(h);
  }
  return p;
}

}  // namespace nck
