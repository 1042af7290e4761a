#include "nck/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nck/birkhoff.hpp"
#include "nck/ehrhart.hpp"
#include "nck/fqsym.hpp"
#include "nck/hopf.hpp"
#include "nck/idempotents.hpp"
#include "nck/nsym.hpp"
#include "nck/tamari.hpp"

namespace nck {

namespace {

constexpr size_t kMaxCounterexamples = 8;

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    ++r_.failed;
    if (r_.counterexamples.size() < kMaxCounterexamples) r_.counterexamples.push_back(what());
  }

 private:
  SuiteReport& r_;
};

using Suite = std::function<void(Checker&, int)>;

std::vector<Forest> forests_upto(int n) {
  std::vector<Forest> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& f : enumerate_forests(k)) out.push_back(f);
  return out;
}

std::vector<Forest> trees_upto(int n) {
  std::vector<Forest> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& t : enumerate_trees(k)) out.push_back(t);
  return out;
}

XElem<long> X(const Forest& f) { return XElem<long>(f); }

std::string pair_str(const Forest& a, const Forest& b) { return a.str() + " | " + b.str(); }

// ---------------------------------------------------------------- Hopf

LinComb<ForestTuple, long> coproduct_bruteforce(const Forest& f, int r) {
  Labelled l = label(f);
  LinComb<ForestTuple, long> out;
  std::vector<int> u(l.n, 1);
  while (true) {
    bool ok = true;
    for (int i = 1; i <= l.n && ok; ++i)
      if (l.parent[i] != 0 && u[i - 1] > u[l.parent[i] - 1]) ok = false;
    if (ok) {
      ForestTuple t;
      for (int v = 1; v <= r; ++v) {
        std::vector<bool> keep(l.n + 1, false);
        for (int i = 1; i <= l.n; ++i) keep[i] = u[i - 1] == v;
        t.push_back(restrict(l, keep));
      }
      out.add(t, 1);
    }
    int k = 0;
    while (k < l.n && u[k] == r) u[k++] = 1;
    if (k == l.n) break;
    ++u[k];
  }
  return out;
}

using Tensor = LinComb<ForestPair, long>;

Tensor y_delta(const Forest& f) {
  Tensor out;
  const auto delta = y_coproduct(f, 2);
  for (const auto& [t, c] : delta.terms()) out.add({t[0], t[1]}, c);
  return out;
}

void suite_coproduct(Checker& ck, int n) {
  for (const auto& f : forests_upto(n)) {
    for (int r = 1; r <= 3; ++r)
      ck.expect(y_coproduct(f, r) == coproduct_bruteforce(f, r),
                [&] { return "labelling words disagree: " + f.str() + " r=" + std::to_string(r); });
    LinComb<ForestTuple, long> left, right;
    const auto delta = y_coproduct(f, 2);
    for (const auto& [ab, c] : delta.terms()) {
      const auto da = y_coproduct(ab[0], 2), db = y_coproduct(ab[1], 2);
      for (const auto& [a12, d] : da.terms()) left.add({a12[0], a12[1], ab[1]}, c * d);
      for (const auto& [b12, d] : db.terms()) right.add({ab[0], b12[0], b12[1]}, c * d);
    }
    ck.expect(left == right, [&] { return "not coassociative at " + f.str(); });
  }
  for (const auto& f : forests_upto(n))
    for (const auto& g : forests_upto(n - f.size())) {
      Tensor prod;
      const auto df = y_delta(f), dg = y_delta(g);
      for (const auto& [p, c] : df.terms())
        for (const auto& [q, d] : dg.terms()) prod.add({p.first * q.first, p.second * q.second}, c * d);
      ck.expect(y_delta(f * g) == prod, [&] { return "not multiplicative: " + pair_str(f, g); });
    }
}

void suite_duality(Checker& ck, int n) {
  std::map<ForestPair, XElem<long>> dual;
  for (int k = 0; k <= n; ++k)
    for (const auto& f : enumerate_forests(k)) {
      const auto delta = y_delta(f);
      for (const auto& [p, c] : delta.terms()) dual[p].add(f, c);
    }
  for (const auto& a : forests_upto(n))
    for (const auto& b : forests_upto(n - a.size())) {
      auto ab = x_product(X(a), X(b));
      ck.expect(ab == dual[{a, b}], [&] { return "product not dual to coproduct: " + pair_str(a, b); });
      Tensor rhs;
      const auto ca = x_coproduct(X(a)), cb = x_coproduct(X(b));
      for (const auto& [p, c] : ca.terms())
        for (const auto& [q, d] : cb.terms()) {
          const auto l = x_product(X(p.first), X(q.first));
          const auto r = x_product(X(p.second), X(q.second));
          for (const auto& [f, k] : l.terms())
            for (const auto& [g, m] : r.terms()) rhs.add({f, g}, c * d * k * m);
        }
      ck.expect(x_coproduct(ab) == rhs, [&] { return "X coproduct not multiplicative: " + pair_str(a, b); });
    }
  auto small = forests_upto(std::min(n, 3));
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (a.size() + b.size() + c.size() > n) continue;
        ck.expect(x_product(x_product(X(a), X(b)), X(c)) == x_product(X(a), x_product(X(b), X(c))),
                  [&] { return "not associative: " + a.str() + " | " + b.str() + " | " + c.str(); });
      }
}

void suite_series_inverse(Checker& ck, int n) {
  XElem<long> truncated;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      for (const auto& f : enumerate_forests(j))
        truncated += x_product(X(Forest::points(i)), X(f)).scaled(i % 2 == 0 ? 1 : -1);
  ck.expect(truncated == X(Forest()), [] { return "lambda_{-1} sigma_1 is not 1 in low degrees"; });
}

void suite_dendriform(Checker& ck, int n) {
  auto fs = forests_upto(std::min(n, 3));
  for (const auto& a : fs)
    for (const auto& b : fs)
      for (const auto& c : fs) {
        if (a.empty() || b.empty() || c.empty() || a.size() + b.size() + c.size() > n) continue;
        auto x = X(a), y = X(b), z = X(c);
        auto where = [&] { return a.str() + " | " + b.str() + " | " + c.str(); };
        ck.expect(x_prec(x_prec(x, y), z) == x_prec(x, x_product(y, z)), [&] { return "(x<y)<z: " + where(); });
        ck.expect(x_prec(x_succ(x, y), z) == x_succ(x, x_prec(y, z)), [&] { return "(x>y)<z: " + where(); });
        ck.expect(x_succ(x_product(x, y), z) == x_succ(x, x_succ(y, z)), [&] { return "(xy)>z: " + where(); });
      }
  for (const auto& a : forests_upto(n))
    for (const auto& b : forests_upto(n - a.size())) {
      if (a.empty() || b.empty()) continue;
      ck.expect(x_prec(X(a), X(b)) + x_succ(X(a), X(b)) == x_product(X(a), X(b)),
                [&] { return "halves do not split the product: " + pair_str(a, b); });
    }
  XElem<long> dot = X(Forest::point());
  for (int k = 2; k <= n; ++k) {
    ck.expect(s_to_x(Composition({k})) == x_succ(s_to_x(Composition({k - 1})), dot),
              [&] { return "S_n != S_{n-1} > X. at n=" + std::to_string(k); });
    ck.expect(lambda_to_x(Composition({k})) == x_prec(dot, lambda_to_x(Composition({k - 1}))),
              [&] { return "Lambda_n != X. < Lambda_{n-1} at n=" + std::to_string(k); });
  }
}

void suite_prelie(Checker& ck, int n) {
  auto ts = trees_upto(n);
  for (const auto& s : ts)
    for (const auto& t : ts) {
      if (s.size() + t.size() > n) continue;
      auto x = X(s), y = X(t);
      ck.expect(prelie(x, y) - prelie(y, x) == x_product(x, y) - x_product(y, x),
                [&] { return "commutator mismatch: " + pair_str(s, t); });
    }
  for (int k = 1; k < n; ++k) {
    std::map<std::string, Forest> classes;
    for (const auto& t : enumerate_trees(k)) classes.emplace(non_plane_class(t).canonical, t);
    for (const auto& [name, rep] : classes) {
      auto g = prelie(X(Forest::point()), x_tau(rep));
      XElem<long> rebuilt;
      std::set<std::string> done;
      bool divisible = true;
      for (const auto& [t, c] : g.terms()) {
        auto cls = non_plane_class(t);
        if (!done.insert(cls.canonical).second) continue;
        if (c % cls.aut_order != 0) divisible = false;
        rebuilt += x_tau(t).scaled(c / cls.aut_order);
      }
      ck.expect(divisible && rebuilt == g, [&] { return "X. |> x_tau leaves the span of x_tau: " + name; });
    }
  }
}

// ---------------------------------------------------------------- Tamari, FQSym

void suite_tamari(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& t : enumerate_trees(k)) {
      std::set<Forest> regenerated, trees;
      for (const auto& g : tree_closure(t)) {
        auto rc = g.reverse_code();
        int r = rc.back();
        for (int i = 0; i <= r; ++i) {
          rc.back() = i;
          regenerated.insert(Forest::from_code({rc.rbegin(), rc.rend()}));
        }
      }
      auto up = upset(t);
      for (const auto& g : up)
        if (g.is_tree()) trees.insert(g);
      ck.expect(regenerated == up, [&] { return "upset differs from the cover process: " + t.str(); });
      ck.expect(trees == tree_closure(t), [&] { return "tree part differs from the cover closure: " + t.str(); });
    }
}

void suite_gamma(Checker& ck, int n) {
  for (const auto& f : forests_upto(n))
    for (const auto& g : forests_upto(n - f.size()))
      ck.expect(fqsym_product(gamma_fqsym(f), gamma_fqsym(g)) == gamma_fqsym(f * g),
                [&] { return "Gamma is not multiplicative: " + pair_str(f, g); });
}

void suite_pattern_quotient(Checker& ck, int n) {
  std::vector<Permutation> ps;
  for (int k = 0; k < n; ++k)
    for (const auto& p : all_permutations(k))
      if (!contains_pattern_132(p)) ps.push_back(p);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      if (static_cast<int>(a.size() + b.size()) > n) continue;
      ck.expect(pattern_quotient_check(a, b).agree, [&] {
        return "132 quotient differs from the X product: " + format_sequence(a) + " | " + format_sequence(b);
      });
    }
}

// ---------------------------------------------------------------- Birkhoff

void suite_phi_plus(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& f : enumerate_forests(k))
      ck.expect(phi_plus(f, ASpec::symbolic(), k).terms() == phi_plus_closed(f, ASpec::symbolic()).terms(),
                [&] { return "phi+ recursion differs from the up-set sum: " + f.str(); });
}

void suite_factorization(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& spec : {ASpec::symbolic(), ASpec::two_parameter()})
      ck.expect(factorization_holds(k, spec),
                [&] { return "sigma+ != sigma- sigma_a at n=" + std::to_string(k) + " spec " + spec.str(); });
}

bool same_series(const XElem<LaurentPoly>& a, const XElem<LaurentPoly>& b) {
  std::set<Forest> keys;
  for (const auto& [f, c] : a.terms()) keys.insert(f);
  for (const auto& [f, c] : b.terms()) keys.insert(f);
  for (const auto& f : keys)
    if (!agree_up_to_precision(a.coeff(f), b.coeff(f))) return false;
  return true;
}

XElem<LaurentPoly> degree_part(const XElem<LaurentPoly>& e, int n) {
  XElem<LaurentPoly> out;
  for (const auto& [f, c] : e.terms())
    if (f.size() == n) out.add(f, c);
  return out;
}

void suite_ribbon_words(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& spec : {ASpec::symbolic(), ASpec::two_parameter()}) {
      auto plus = degree_part(sigma_plus(k, spec), k);
      ck.expect(same_series(embed_x(ribbon_from_words(k, spec)), plus),
                [&] { return "word model differs from sigma+ at n=" + std::to_string(k) + " spec " + spec.str(); });
    }
}

void suite_catalan_blocks(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& i : compositions(k))
      ck.expect(static_cast<long>(words_W(i).size()) == catalan_block_count(i),
                [&] { return "|W(I)| differs from the Catalan block product: " + i.str(); });
}

void suite_expansions(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k) {
    auto plus = degree_part(sigma_plus(k, ASpec::symbolic()), k);
    auto minus = degree_part(sigma_minus(k, ASpec::symbolic()), k);
    for (auto basis : {Expansion::S, Expansion::Lambda, Expansion::SignedRibbon}) {
      ck.expect(same_series(embed_x(sigma_expansion(true, basis, k, ASpec::symbolic())), plus),
                [&] { return "sigma+ expansion mismatch at n=" + std::to_string(k); });
      ck.expect(same_series(embed_x(sigma_expansion(false, basis, k, ASpec::symbolic())), minus),
                [&] { return "sigma- expansion mismatch at n=" + std::to_string(k); });
    }
  }
}

// ---------------------------------------------------------------- idempotents

struct Named {
  std::string name;
  NsymElem<Rational> e;
};

std::vector<Named> lie_idempotents(int k) {
  auto d = dynkin(k);
  std::vector<Named> out{{"Psi_" + std::to_string(k), d.psi},
                         {"Psibar_" + std::to_string(k), d.psibar},
                         {"phi_" + std::to_string(k), solomon(k)},
                         {"e_" + std::to_string(k) + "^(1)", x_to_ribbons(eulerian(k, 1), k)}};
  if (k >= 2)
    for (const auto& lambda : partitions(k - 1))
      out.push_back({"D_" + format_sequence(lambda) + " (n=" + std::to_string(k) + ")", d_lambda_r(k, lambda)});
  return out;
}

void suite_primitive(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& [name, e] : lie_idempotents(k))
      ck.expect(is_primitive(e), [&] { return name + " is not primitive"; });
}

void suite_quasi(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k)
    for (const auto& [name, e] : lie_idempotents(k))
      ck.expect(quasi_idempotent_check(e, k).proportional, [&] { return name + " is not quasi-idempotent"; });
}

void suite_d_lambda(Checker& ck, int n) {
  for (int k = 2; k <= n; ++k)
    for (const auto& lambda : partitions(k - 1)) {
      auto d = d_lambda_r(k, lambda);
      std::string name = "D_" + format_sequence(lambda) + " (n=" + std::to_string(k) + ")";
      ck.expect(is_primitive(d), [&] { return name + " is not primitive"; });
      auto q = quasi_idempotent_check(d, k);
      ck.expect(q.proportional, [&] { return name + " is not quasi-idempotent"; });
    }
}

void suite_dynkin(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k) {
    auto d = dynkin(k);
    XElem<Rational> chain(Forest::chain(k)), trees;
    for (const auto& t : enumerate_trees(k)) trees.add(t, Rational(1));
    ck.expect(embed_x(d.psi) == chain, [&] { return "Psi_n is not X_chain at n=" + std::to_string(k); });
    ck.expect(embed_x(d.psibar) == trees, [&] { return "Psibar_n is not the sum of trees at n=" + std::to_string(k); });
    auto q = quasi_idempotent_check(d.psi, k);
    ck.expect(q.proportional && q.scalar == k, [&] { return "Psi_n^2 != n Psi_n at n=" + std::to_string(k); });
  }
}

void suite_eulerian(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k) {
    XElem<Rational> sum;
    for (int j = 1; j <= k; ++j) sum += eulerian(k, j);
    XElem<Rational> s = s_to_x(Composition({k})).map_coeffs([](long c) { return Rational(c); });
    ck.expect(sum == s, [&] { return "sum of Eulerian idempotents is not S_n at n=" + std::to_string(k); });
  }
}

void suite_solomon_trees(Checker& ck, int n) {
  for (int k = 1; k <= n; ++k) {
    const auto x = embed_x(solomon(k));
    for (const auto& [f, c] : x.terms())
      ck.expect(f.is_tree(), [&] { return "phi_n has the non-tree term " + f.str(); });
    ck.expect(x == eulerian(k, 1), [&] { return "phi_n differs from e_n^(1) at n=" + std::to_string(k); });
  }
}

// ---------------------------------------------------------------- q-series

NsymElem<Rational> at_q(const NsymElem<RationalFn>& e, const Rational& v) {
  NsymElem<Rational> out{e.basis, {}};
  for (const auto& [i, c] : e.terms.terms()) {
    auto p = c.substitute(Var::q(), MultiPoly(v)).as_polynomial();
    if (!p || !p->is_constant()) throw std::domain_error("q-specialization is not a constant");
    out.terms.add(i, p->constant_term());
  }
  return out;
}

void suite_qsolomon(Checker& ck, int n) {
  MultiPoly q = MultiPoly::var(Var::q());
  for (int k = 1; k <= n; ++k) {
    auto qs = q_solomon(k);
    std::string at = " at n=" + std::to_string(k);
    ck.expect(nsym_equal(at_q(qs, 1), solomon(k)), [&] { return "q -> 1 is not the Solomon idempotent" + at; });
    auto psi = convert(dynkin(k).psi, NBasis::R);
    NsymElem<Rational> scaled{NBasis::R, psi.terms.map_coeffs([k](const Rational& c) { return Rational(c / k); })};
    ck.expect(nsym_equal(at_q(qs, 0), scaled), [&] { return "q = 0 is not Psi_n/n" + at; });
    auto lhs = convert(transform_by(dynkin(k).psi, m_a_over_1mq), NBasis::R);
    RationalFn factor(MultiPoly(1) - q.pow(static_cast<unsigned>(k)), MultiPoly(k));
    bool same = true;
    for (const auto& i : compositions(k))
      if (!ratfn_equal(lhs.terms.coeff(i) * factor, qs.terms.coeff(i))) same = false;
    ck.expect(same, [&] { return "(1-q^n)/n Psi_n(A/(1-q)) differs from phi_n(q)" + at; });
    ck.expect(is_primitive(qs), [&] { return "phi_n(q) is not primitive" + at; });
  }
}

void suite_functional_equation(Checker& ck, int n) {
  MultiPoly qt = MultiPoly::var(Var::q()) * MultiPoly::var(Var::t());
  for (int k = 1; k <= n; ++k)
    for (const auto& i : compositions(k)) {
      const auto& parts = i.parts();
      Composition j(std::vector<int>(parts.begin(), parts.end() - 1));
      RationalFn rhs = m_xqt(i) + m_xqt(j) * RationalFn(qt.pow(static_cast<unsigned>(parts.back())));
      ck.expect(ratfn_equal(at_t_scaled(m_xqt(i)), rhs),
                [&] { return "f(qt) != f(t) sigma_qt(A) on S^" + i.str(); });
    }
}

// ---------------------------------------------------------------- Ehrhart

void suite_reciprocity(Checker& ck, int n) {
  for (int m = 1; m <= n; ++m)
    for (const auto& f : enumerate_forests(m)) {
      auto p = ForestPoset::from_forest(f);
      MultiPoly e = ehrhart_polynomial(p);
      for (int k = 0; k <= 4; ++k) {
        std::string at = f.str() + " n=" + std::to_string(k);
        ck.expect(eval_at(e, Var::x(), k) == static_cast<long>(lattice_points(p, k).size()),
                  [&] { return "E(n) differs from the point count: " + at; });
        if (k >= 1) ck.expect(reciprocity_check(p, k).holds, [&] { return "reciprocity fails: " + at; });
      }
      ck.expect(gamma_wqsym(p, true, SignedRoute::StrictWords) == gamma_wqsym(p, true, SignedRoute::Refinement),
                [&] { return "signed gamma routes disagree: " + f.str(); });
    }
}

struct Entry {
  SuiteInfo info;
  Suite run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"coproduct", "Y coproduct: labelling words, coassociativity, multiplicativity", 5, 6}, suite_coproduct},
      {{"duality", "X product dual to the Y coproduct, associative, Hopf compatible", 5, 6}, suite_duality},
      {{"series-inverse", "sum (-1)^n X_{points n} inverts sum X_F up to degree n", 6, 7}, suite_series_inverse},
      {{"dendriform", "dendriform axioms, product splitting, S and Lambda recursions", 6, 6}, suite_dendriform},
      {{"prelie", "preLie commutator identity and closure of the x_tau span", 4, 5}, suite_prelie},
      {{"tamari", "up-sets regenerated from tree covers", 6, 7}, suite_tamari},
      {{"gamma", "Gamma is an algebra morphism to FQSym", 5, 6}, suite_gamma},
      {{"pattern-quotient", "132 quotient of the M product equals the X product", 5, 6}, suite_pattern_quotient},
      {{"phi-plus", "phi+ recursion equals the up-set sum", 6, 7}, suite_phi_plus},
      {{"factorization", "sigma+ = sigma- sigma_a", 5, 6}, suite_factorization},
      {{"expansions", "S, Lambda and signed ribbon expansions of sigma+-", 4, 5}, suite_expansions},
      {{"ribbon-words", "word model reproduces sigma+", 5, 6}, suite_ribbon_words},
      {{"catalan-blocks", "|W(I)| is the Catalan block product", 7, 8}, suite_catalan_blocks},
      {{"primitive", "Lie idempotents are primitive", 5, 6}, suite_primitive},
      {{"quasi", "Lie idempotents are quasi-idempotent in the group algebra", 5, 6}, suite_quasi},
      {{"d-lambda", "D_lambda primitive and quasi-idempotent", 5, 6}, suite_d_lambda},
      {{"dynkin", "Dynkin X-forms and Psi_n^2 = n Psi_n", 5, 6}, suite_dynkin},
      {{"eulerian", "Eulerian idempotents sum to S_n", 5, 6}, suite_eulerian},
      {{"solomon", "Solomon idempotent is tree supported and equals e_n^(1)", 6, 7}, suite_solomon_trees},
      {{"qsolomon", "phi_n(q) limits and the A/(1-q) identity", 4, 5}, suite_qsolomon},
      {{"functional-equation", "f(qt) = f(t) sigma_qt(A) coefficientwise", 3, 5}, suite_functional_equation},
      {{"reciprocity", "Ehrhart counts and reciprocity on forest posets, dilations up to 4", 5, 6},
       suite_reciprocity},
  };
  return r;
}

const Entry& find(std::string_view name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const SuiteInfo& suite_info(std::string_view name) { return find(name).info; }

SuiteReport run_suite(std::string_view name, std::optional<int> n, std::optional<int> max_n) {
  const Entry& e = find(name);
  int size = n.value_or(e.info.default_n);
  int cap = max_n.value_or(e.info.max_n);
  if (size > cap) throw std::length_error("suite " + e.info.name + " is capped at n=" + std::to_string(cap));
  if (size < 0) throw std::invalid_argument("n must be nonnegative");
  SuiteReport r;
  r.name = e.info.name;
  r.n = size;
  Checker ck(r);
  e.run(ck, size);
  return r;
}

}  // namespace nck
