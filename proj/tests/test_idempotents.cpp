#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "printers.hpp"
#include "nck/idempotents.hpp"

using namespace nck;

namespace {

MultiPoly q() { return MultiPoly::var(Var::q()); }

XElem<long> all_trees(int n) {
  XElem<long> out;
  for (const auto& t : enumerate_trees(n)) out.add(t, 1);
  return out;
}

XElem<Rational> to_rational(const XElem<long>& x) {
  return x.map_coeffs([](long c) { return Rational(c); });
}

// Ribbon coefficients compared as rational functions, degree n.
bool same_rationalfn(const NsymElem<RationalFn>& a, const NsymElem<RationalFn>& b, int n) {
  auto ra = convert(a, NBasis::R), rb = convert(b, NBasis::R);
  for (const auto& i : compositions(n))
    if (!ratfn_equal(ra.terms.coeff(i), rb.terms.coeff(i))) return false;
  return true;
}

NsymElem<Rational> at_q(const NsymElem<RationalFn>& e, const Rational& v) {
  NsymElem<Rational> out{e.basis, {}};
  for (const auto& [i, c] : e.terms.terms()) {
    auto p = c.substitute(Var::q(), MultiPoly(v)).as_polynomial();
    if (!p || !p->is_constant()) throw std::domain_error("not a constant");
    out.terms.add(i, p->constant_term());
  }
  return out;
}

}  // namespace

TEST(Dynkin, XForms) {
  for (int n = 1; n <= 5; ++n) {
    auto d = dynkin(n);
    EXPECT_EQ(embed_x(d.psi), to_rational(XElem<long>(Forest::chain(n)))) << n;
    EXPECT_EQ(embed_x(d.psibar), to_rational(all_trees(n))) << n;
    EXPECT_EQ(dynkin_bracketing(n), XElem<long>(Forest::chain(n))) << n;
  }
}

TEST(Dynkin, ClassicalRibbonForm) {
  // Psi_n = sum_k (-1)^k R_{(1^k, n-k)}.
  for (int n = 1; n <= 5; ++n) {
    NsymElem<Rational> expected{NBasis::R, {}};
    for (int k = 0; k < n; ++k) {
      std::vector<int> parts(k, 1);
      parts.push_back(n - k);
      expected.terms.add(Composition(parts), Rational(k % 2 == 0 ? 1 : -1));
    }
    EXPECT_TRUE(nsym_equal(dynkin(n).psi, expected)) << n;
  }
}

TEST(Dynkin, QuasiIdempotentWithScalarN) {
  for (int n = 1; n <= 5; ++n) {
    auto d = dynkin(n);
    EXPECT_TRUE(is_primitive(d.psi));
    EXPECT_TRUE(is_primitive(d.psibar));
    auto qi = quasi_idempotent_check(d.psi, n);
    EXPECT_TRUE(qi.proportional) << n;
    EXPECT_EQ(qi.scalar, n) << n;
    EXPECT_TRUE(quasi_idempotent_check(d.psibar, n).proportional) << n;
  }
}

TEST(GroupAlgebra, OrientationPinnedByDynkin) {
  bool left = pinned_orientation();
  auto qi = quasi_idempotent_check(dynkin(3).psi, 3, left);
  EXPECT_TRUE(qi.proportional);
  EXPECT_EQ(qi.scalar, 3);
}

TEST(GroupAlgebra, BetaAndProduct) {
  const GroupAlgebra& g = group_algebra(3);
  ASSERT_EQ(g.permutations().size(), 6u);
  auto id = g.beta(nsym_basis<Rational>(NBasis::R, Composition({3})));
  EXPECT_EQ(id[0], 1);
  for (size_t k = 1; k < id.size(); ++k) EXPECT_EQ(id[k], 0);
  // The ribbons partition S_n by descent set.
  auto total = g.zero();
  for (const auto& i : compositions(3)) {
    auto b = g.beta(nsym_basis<Rational>(NBasis::R, i));
    for (size_t k = 0; k < b.size(); ++k) total[k] += b[k];
  }
  for (const auto& v : total) EXPECT_EQ(v, 1);

  const auto& ps = g.permutations();
  auto delta = [&](const Permutation& p) {
    auto e = g.zero();
    e[std::find(ps.begin(), ps.end(), p) - ps.begin()] = 1;
    return e;
  };
  // (213 o 132)(i) = 213(132(i)) = 231.
  EXPECT_EQ(g.product(delta({2, 1, 3}), delta({1, 3, 2}), true), delta({2, 3, 1}));
  EXPECT_EQ(g.product(delta({2, 1, 3}), delta({1, 3, 2}), false), delta({3, 1, 2}));
  EXPECT_THROW(GroupAlgebra(kGroupAlgebraMaxN + 1), std::length_error);
}

TEST(Eulerian, TablesAtFour) {
  auto table = fixtures::eulerian_4();
  for (int k = 1; k <= 4; ++k) {
    auto expected = to_rational(table[k - 1]).map_coeffs([](const Rational& c) { return Rational(c / 24); });
    EXPECT_EQ(eulerian(4, k), expected) << k;
  }
}

TEST(Eulerian, SumIsCompleteFunction) {
  for (int n = 1; n <= 5; ++n) {
    XElem<Rational> sum;
    for (int k = 1; k <= n; ++k) sum += eulerian(n, k);
    EXPECT_EQ(sum, to_rational(s_to_x(Composition({n})))) << n;
    EXPECT_TRUE(eulerian(n, n + 1).empty());
  }
}

TEST(Eulerian, FirstIsSolomon) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(embed_x(solomon(n)), eulerian(n, 1)) << n;
  NsymElem<Rational> phi2{NBasis::S, {}};
  phi2.terms.add(Composition({2}), Rational(1));
  phi2.terms.add(Composition({1, 1}), Rational(-1, 2));
  EXPECT_TRUE(nsym_equal(solomon(2), phi2));
}

TEST(Eulerian, SolomonIsTreeSupportedAndIdempotent) {
  for (int n = 1; n <= 6; ++n) {
    const auto x = embed_x(solomon(n));
    for (const auto& [f, c] : x.terms()) EXPECT_TRUE(f.is_tree()) << f.str();
  }
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(is_primitive(solomon(n)));
    auto e1 = x_to_ribbons(eulerian(n, 1), n);
    EXPECT_TRUE(is_primitive(e1));
    auto qi = quasi_idempotent_check(e1, n);
    EXPECT_TRUE(qi.proportional) << n;
    EXPECT_EQ(qi.scalar, 1) << n;
  }
}

TEST(Eulerian, ChiIsSignedBinomialEvaluation) {
  MultiPoly t = MultiPoly::var(Var::t());
  EXPECT_EQ(chi_poly(Forest::point()), t);
  for (int n = 1; n <= 5; ++n)
    for (const auto& tree : enumerate_trees(n)) {
      MultiPoly g = eval_binomial(gamma_qsym(tree)).substitute(Var::alpha(), MultiPoly(-1) * t);
      if (n % 2 == 1) g = -g;
      EXPECT_EQ(chi_poly(tree), g) << tree.str();
    }
  EXPECT_THROW(chi_poly(Forest::points(2)), std::invalid_argument);
}

TEST(QSolomon, Limits) {
  for (int n = 1; n <= 4; ++n) {
    auto qs = q_solomon(n);
    EXPECT_TRUE(nsym_equal(at_q(qs, 1), solomon(n))) << n;
    auto psi = convert(dynkin(n).psi, NBasis::R);
    NsymElem<Rational> scaled{NBasis::R, psi.terms.map_coeffs([n](const Rational& c) { return Rational(c / n); })};
    EXPECT_TRUE(nsym_equal(at_q(qs, 0), scaled)) << n;
  }
}

TEST(QSolomon, DynkinOnGeometricAlphabet) {
  for (int n = 1; n <= 4; ++n) {
    auto lhs = transform_by(dynkin(n).psi, m_a_over_1mq);
    RationalFn factor(MultiPoly(1) - q().pow(static_cast<unsigned>(n)), MultiPoly(n));
    lhs.terms = lhs.terms.map_coeffs([&](const RationalFn& c) { return c * factor; });
    EXPECT_TRUE(same_rationalfn(lhs, q_solomon(n), n)) << n;
  }
}

TEST(QSolomon, Primitive) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_primitive(q_solomon(n))) << n;
}
