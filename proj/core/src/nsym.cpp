#include "nck/nsym.hpp"

#include <mutex>

#include "nck/fqsym.hpp"

namespace nck {

std::string to_string(NBasis b) {
  switch (b) {
    case NBasis::S: return "S";
    case NBasis::Lambda: return "Lambda";
    case NBasis::R: return "R";
    case NBasis::SignedR: return "signedR";
  }
  return "?";
}

std::string to_string(QBasis b) { return b == QBasis::M ? "M" : "F"; }

NBasis parse_nbasis(std::string_view s) {
  if (s == "S") return NBasis::S;
  if (s == "Lambda" || s == "L") return NBasis::Lambda;
  if (s == "R") return NBasis::R;
  if (s == "signedR") return NBasis::SignedR;
  throw std::invalid_argument("unknown Sym basis: " + std::string(s));
}

Composition ones(int k) { return Composition(std::vector<int>(k, 1)); }

namespace {

long sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

using Change = LinComb<Composition, long>;

Change concat_product(const Change& a, const Change& b) {
  Change out;
  for (const auto& [i, c] : a.terms())
    for (const auto& [j, d] : b.terms()) out.add(i + j, c * d);
  return out;
}

// Lambda_m in S, and S_m in Lambda: the same signed sum.
Change elementary(int m) {
  Change out;
  for (const auto& j : compositions(m)) out.add(j, sign_of(m - j.length()));
  return out;
}

Change lambda_s_switch(const Composition& i) {
  Change out{Composition{}, 1};
  for (int p : i.parts()) out = concat_product(out, elementary(p));
  return out;
}

Change compute_to_s(NBasis from, const Composition& i) {
  Change out;
  switch (from) {
    case NBasis::S: out.add(i, 1); break;
    case NBasis::Lambda: out = lambda_s_switch(i); break;
    case NBasis::R:
    case NBasis::SignedR: {
      long s = from == NBasis::SignedR ? sign_of(i.length() - 1) : 1;
      for (const auto& j : compositions(i.weight()))
        if (finer(i, j)) out.add(j, s * sign_of(i.length() - j.length()));
      break;
    }
  }
  return out;
}

Change compute_from_s(NBasis to, const Composition& i) {
  Change out;
  switch (to) {
    case NBasis::S: out.add(i, 1); break;
    case NBasis::Lambda: out = lambda_s_switch(i); break;
    case NBasis::R:
    case NBasis::SignedR:
      for (const auto& j : compositions(i.weight()))
        if (finer(i, j)) out.add(j, to == NBasis::SignedR ? sign_of(j.length() - 1) : 1);
      break;
  }
  return out;
}

template <class Key, class Fn>
const Change& cached(std::map<Key, Change>& cache, std::mutex& mu, const Key& key, Fn&& fn) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, fn()).first;
  return it->second;
}

}  // namespace

const LinComb<Composition, long>& nsym_to_s(NBasis from, const Composition& i) {
  static std::mutex mu;
  static std::map<std::pair<int, Composition>, Change> cache;
  return cached(cache, mu, std::make_pair(static_cast<int>(from), i), [&] { return compute_to_s(from, i); });
}

const LinComb<Composition, long>& nsym_from_s(NBasis to, const Composition& i) {
  static std::mutex mu;
  static std::map<std::pair<int, Composition>, Change> cache;
  return cached(cache, mu, std::make_pair(static_cast<int>(to), i), [&] { return compute_from_s(to, i); });
}

const LinComb<Composition, long>& qsym_change(QBasis from, QBasis to, const Composition& i) {
  static std::mutex mu;
  static std::map<std::pair<int, Composition>, Change> cache;
  auto key = std::make_pair(static_cast<int>(from) * 2 + static_cast<int>(to), i);
  return cached(cache, mu, key, [&] {
    Change out;
    if (from == to) {
      out.add(i, 1);
      return out;
    }
    for (const auto& j : compositions(i.weight())) {
      if (!finer(j, i)) continue;
      out.add(j, from == QBasis::F ? 1 : sign_of(j.length() - i.length()));
    }
    return out;
  });
}

// ---------------------------------------------------------------- X images

namespace {

const XElem<long> kEmptyX;

enum class Labelling { Weak, Strict };

// Number of labellings of f by 1..l with the given evaluation, monotone
// towards the roots.
long count_labellings(const Labelled& lab, const std::vector<int>& eval, Labelling kind) {
  int n = lab.n;
  int l = static_cast<int>(eval.size());
  std::vector<int> u(n + 1, 0), used(l + 1, 0);
  long count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == 0) {
      ++count;
      return;
    }
    int p = lab.parent[v];
    int hi = p == 0 ? l : (kind == Labelling::Weak ? u[p] : u[p] - 1);
    for (int a = 1; a <= hi; ++a) {
      if (used[a] == eval[a - 1]) continue;
      u[v] = a;
      ++used[a];
      rec(v - 1);
      --used[a];
    }
  };
  rec(n);
  return count;
}

const XElem<long>& labelling_image(const Composition& i, Labelling kind) {
  static std::mutex mu;
  static std::map<std::pair<int, Composition>, XElem<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({static_cast<int>(kind), i});
    if (it != cache.end()) return it->second;
  }
  XElem<long> out;
  for (const auto& f : enumerate_forests(i.weight())) {
    long c = count_labellings(label(f), i.parts(), kind);
    if (c != 0) out.add(f, c);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(static_cast<int>(kind), i), std::move(out)).first->second;
}

}  // namespace

const XElem<long>& ribbon_to_x(const Composition& i) {
  static std::mutex mu;
  static std::map<int, std::map<Composition, XElem<long>>> cache;
  int n = i.weight();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::map<Composition, XElem<long>> table;
    for (const auto& f : enumerate_forests(n))
      for (const auto& p : linear_extensions(f)) table[descent_composition(p)].add(f, 1);
    it = cache.emplace(n, std::move(table)).first;
  }
  auto jt = it->second.find(i);
  return jt == it->second.end() ? kEmptyX : jt->second;
}

const XElem<long>& s_to_x(const Composition& i) { return labelling_image(i, Labelling::Weak); }
const XElem<long>& lambda_to_x(const Composition& i) { return labelling_image(i, Labelling::Strict); }

NsymElem<Rational> x_to_ribbons(const XElem<Rational>& x, int n) {
  auto comps = compositions(n);
  const auto& forests = enumerate_forests(n);
  for (const auto& [f, c] : x.terms())
    if (f.size() != n) throw std::domain_error("x_to_ribbons: element is not homogeneous of degree n");
  size_t cols = comps.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forests) {
    std::vector<Rational> row(cols + 1);
    for (size_t k = 0; k < cols; ++k) row[k] = ribbon_to_x(comps[k]).coeff(f);
    row[cols] = x.coeff(f);
    rows.push_back(std::move(row));
  }
  // Gauss-Jordan elimination.
  size_t r = 0;
  std::vector<int> pivot_col;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == r || sgn(rows[k][c]) == 0) continue;
      Rational m = rows[k][c];
      for (size_t j = c; j <= cols; ++j) rows[k][j] -= m * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t k = r; k < rows.size(); ++k)
    if (sgn(rows[k][cols]) != 0) throw std::domain_error("x_to_ribbons: element is not in the image of Sym");
  NsymElem<Rational> out{NBasis::R, {}};
  for (size_t k = 0; k < r; ++k) out.terms.add(comps[pivot_col[k]], rows[k][cols]);
  return out;
}

// ---------------------------------------------------------------- QSym

namespace {

Permutation representative(const Composition& i) {
  Permutation p;
  int top = i.weight();
  for (int part : i.parts()) {
    for (int k = top - part + 1; k <= top; ++k) p.push_back(k);
    top -= part;
  }
  return p;
}

QsymElem<long> graft_qsym(const QsymElem<long>& e) {
  QsymElem<long> out{QBasis::F, {}};
  for (const auto& [i, c] : e.terms.terms()) {
    auto parts = i.parts();
    if (parts.empty())
      parts.push_back(1);
    else
      ++parts.back();
    out.terms.add(Composition(parts), c);
  }
  return out;
}

QsymElem<long> gamma_recursive(const Forest& f) {
  QsymElem<long> acc{QBasis::F, LinComb<Composition, long>(Composition(), 1)};
  for (const auto& t : f.trees()) acc = qsym_f_product(acc, graft_qsym(gamma_recursive(t.children())));
  return acc;
}

}  // namespace

QsymElem<long> qsym_f_product(const QsymElem<long>& a, const QsymElem<long>& b) {
  auto fa = qsym_convert(a, QBasis::F), fb = qsym_convert(b, QBasis::F);
  QsymElem<long> out{QBasis::F, {}};
  for (const auto& [i, c] : fa.terms.terms())
    for (const auto& [j, d] : fb.terms.terms()) {
      auto sh = fqsym_product(FQSymElem(representative(i)), FQSymElem(representative(j)));
      for (const auto& [w, k] : sh.terms()) out.terms.add(descent_composition(w), c * d * k);
    }
  return out;
}

QsymElem<long> gamma_qsym(const Forest& f, GammaRoute route) {
  if (route == GammaRoute::Recursion) return gamma_recursive(f);
  QsymElem<long> out{QBasis::F, {}};
  for (const auto& p : linear_extensions(f)) out.terms.add(descent_composition(p), 1);
  return out;
}

MultiPoly m_binomial(const Composition& i) {
  MultiPoly a = MultiPoly::var(Var::alpha());
  MultiPoly out(1);
  for (int k = 0; k < i.length(); ++k) out *= a - MultiPoly(k);
  return out * MultiPoly(Rational(1) / factorial(i.length()));
}

MultiPoly m_alphabet(const Composition& i, const std::vector<MultiPoly>& letters) {
  const auto& parts = i.parts();
  MultiPoly total;
  std::function<void(size_t, size_t, MultiPoly)> rec = [&](size_t k, size_t from, MultiPoly acc) {
    if (k == parts.size()) {
      total += acc;
      return;
    }
    for (size_t j = from; j + (parts.size() - k) <= letters.size(); ++j)
      rec(k + 1, j + 1, acc * letters[j].pow(static_cast<unsigned>(parts[k])));
  };
  rec(0, 0, MultiPoly(1));
  return total;
}

std::vector<MultiPoly> geometric_letters(int n) {
  std::vector<MultiPoly> out;
  for (int e = 0; e <= n; ++e) out.push_back(MultiPoly::var(Var::q(), e));
  return out;
}

// ---------------------------------------------------------------- X_{q,t}

namespace {

MultiPoly qpow(int e) { return e == 0 ? MultiPoly(1) : MultiPoly::var(Var::q(), e); }
MultiPoly one_minus_qpow(int e) { return MultiPoly(1) - qpow(e); }

RationalFn compute_m_xqt(const Composition& i) {
  const auto& parts = i.parts();
  size_t l = parts.size();
  RationalFn total;
  MultiPoly t = MultiPoly::var(Var::t());
  for (size_t p = 0; p <= l; ++p) {
    // Positive letters 1, q, q^2, ... carry the first p parts.
    RationalFn sigma(1);
    for (size_t m = 0; m < p; ++m) {
      int s = 0;
      for (size_t k = m; k < p; ++k) s += parts[k];
      sigma *= RationalFn(m == 0 ? MultiPoly(1) : qpow(s), one_minus_qpow(s));
    }
    // Negative letters q^j t with j >= 1 carry the rest, grouped in blocks
    // sharing a letter.
    size_t rest = l - p;
    RationalFn lambda;
    if (rest == 0) {
      lambda = RationalFn(1);
    } else {
      for (unsigned mask = 0; mask < (1u << (rest - 1)); ++mask) {
        std::vector<std::pair<int, int>> blocks;  // (length, weight)
        blocks.push_back({1, parts[p]});
        for (size_t k = 1; k < rest; ++k) {
          if (mask & (1u << (k - 1)))
            blocks.push_back({1, parts[p + k]});
          else {
            ++blocks.back().first;
            blocks.back().second += parts[p + k];
          }
        }
        MultiPoly num(1);
        MultiPoly den(1);
        int prefix = 0;
        for (auto [len, w] : blocks) {
          num *= MultiPoly(len % 2 == 0 ? 1 : -1) * t.pow(static_cast<unsigned>(w));
          prefix += w;
          num *= qpow(prefix);
          den *= one_minus_qpow(prefix);
        }
        lambda += RationalFn(num, den);
      }
    }
    total += sigma * lambda;
  }
  return total;
}

}  // namespace

const RationalFn& m_xqt(const Composition& i) {
  static std::mutex mu;
  static std::map<Composition, RationalFn> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(i);
  if (it == cache.end()) it = cache.emplace(i, compute_m_xqt(i)).first;
  return it->second;
}

RationalFn m_xqt_mirrored(const Composition& i) { return m_xqt(i.mirror()); }

RationalFn at_t_affine(const RationalFn& f) {
  MultiPoly q = MultiPoly::var(Var::q()), x = MultiPoly::var(Var::x());
  return f.substitute(Var::t(), MultiPoly(1) + (q - MultiPoly(1)) * x);
}

RationalFn at_t_power(const RationalFn& f, int n) { return f.substitute(Var::t(), qpow(n)); }

RationalFn at_t_scaled(const RationalFn& f) {
  return f.substitute(Var::t(), MultiPoly::var(Var::q()) * MultiPoly::var(Var::t()));
}

RationalFn m_a_over_1mq(const Composition& i) { return m_xqt(i.mirror()).substitute(Var::t(), MultiPoly()); }

NsymElem<RationalFn> transform_by(const NsymElem<Rational>& e,
                                  const std::function<RationalFn(const Composition&)>& m_value) {
  auto s = convert(e, NBasis::S);
  std::map<int, LinComb<Composition, RationalFn>> image;
  auto image_of = [&](int m) -> const LinComb<Composition, RationalFn>& {
    auto it = image.find(m);
    if (it != image.end()) return it->second;
    LinComb<Composition, RationalFn> v;
    for (const auto& j : compositions(m)) v.add(j, m_value(j));
    return image.emplace(m, std::move(v)).first->second;
  };
  NsymElem<RationalFn> out{NBasis::S, {}};
  for (const auto& [i, c] : s.terms.terms()) {
    LinComb<Composition, RationalFn> acc{Composition{}, RationalFn(c)};
    for (int p : i.parts()) {
      LinComb<Composition, RationalFn> next;
      for (const auto& [a, ca] : acc.terms())
        for (const auto& [b, cb] : image_of(p).terms()) next.add(a + b, ca * cb);
      acc = std::move(next);
    }
    out.terms += acc;
  }
  return out;
}

// ---------------------------------------------------------------- (1-q) transforms

namespace {

NsymElem<MultiPoly> hook_transform(int n, bool ones_first) {
  MultiPoly q = MultiPoly::var(Var::q());
  NsymElem<MultiPoly> out{NBasis::R, {}};
  for (int k = 0; k < n; ++k) {
    std::vector<int> parts;
    if (ones_first) {
      parts.assign(k, 1);
      parts.push_back(n - k);
    } else {
      parts.push_back(n - k);
      parts.insert(parts.end(), k, 1);
    }
    out.terms.add(Composition(parts), (MultiPoly(1) - q) * (-q).pow(static_cast<unsigned>(k)));
  }
  return out;
}

}  // namespace

NsymElem<MultiPoly> transform_1mq(int n) { return hook_transform(n, true); }
NsymElem<MultiPoly> transform_1pmq(int n) { return hook_transform(n, false); }

NsymElem<Rational> divide_1mq_at_1(const NsymElem<MultiPoly>& e) {
  MultiPoly d = MultiPoly(1) - MultiPoly::var(Var::q());
  NsymElem<Rational> out{e.basis, {}};
  for (const auto& [i, c] : e.terms.terms()) {
    MultiPoly v = c.exact_div(d).substitute(Var::q(), MultiPoly(1));
    if (!v.is_constant()) throw std::domain_error("divide_1mq_at_1: coefficient involves other variables");
    out.terms.add(i, v.constant_term());
  }
  return out;
}

}  // namespace nck
