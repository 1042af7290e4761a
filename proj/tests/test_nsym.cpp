#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "printers.hpp"
#include "nck/nsym.hpp"

using namespace nck;

namespace {

MultiPoly q() { return MultiPoly::var(Var::q()); }
MultiPoly t() { return MultiPoly::var(Var::t()); }
MultiPoly alpha() { return MultiPoly::var(Var::alpha()); }

// C(alpha + s, n) as a polynomial in alpha.
MultiPoly binom_shift(int s, int n) {
  MultiPoly out(1);
  for (int k = 0; k < n; ++k) out *= alpha() + MultiPoly(s - k);
  return out * MultiPoly(Rational(1) / factorial(n));
}

QsymElem<long> f_terms(const std::vector<std::pair<std::string, long>>& terms) {
  QsymElem<long> out{QBasis::F, {}};
  for (const auto& [c, k] : terms) out.terms.add(Composition::parse(c), k);
  return out;
}

const NBasis kBases[] = {NBasis::S, NBasis::Lambda, NBasis::R, NBasis::SignedR};

}  // namespace

TEST(Nsym, ConversionsRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& i : compositions(n))
      for (NBasis a : kBases)
        for (NBasis b : kBases) {
          auto e = nsym_basis<long>(a, i);
          EXPECT_EQ(convert(convert(e, b), a).terms, e.terms) << to_string(a) << "->" << to_string(b) << " " << i.str();
        }
}

TEST(Nsym, SmallConversions) {
  EXPECT_EQ(convert(nsym_basis<long>(NBasis::R, Composition::parse("2")), NBasis::S).terms,
            nsym_basis<long>(NBasis::S, Composition::parse("2")).terms);
  auto s11 = convert(nsym_basis<long>(NBasis::S, Composition::parse("11")), NBasis::R);
  LinComb<Composition, long> expected;
  expected.add(Composition::parse("11"), 1);
  expected.add(Composition::parse("2"), 1);
  EXPECT_EQ(s11.terms, expected);
  // The signed ribbon of the word (-) is -R_11.
  EXPECT_EQ(convert(nsym_basis<long>(NBasis::SignedR, Composition::parse("11")), NBasis::R).terms,
            (LinComb<Composition, long>(Composition::parse("11"), -1)));
  auto e = nsym_basis<long>(NBasis::Lambda, Composition::parse("21"));
  EXPECT_EQ(convert(e, NBasis::Lambda).terms, e.terms);
}

TEST(Nsym, LambdaByElementaryFormula) {
  // Lambda_n = sum_{|J|=n} (-1)^{n-l(J)} S^J, written out at n = 3.
  auto l3 = convert(nsym_basis<long>(NBasis::Lambda, Composition::parse("3")), NBasis::S);
  LinComb<Composition, long> expected;
  expected.add(Composition::parse("111"), 1);
  expected.add(Composition::parse("12"), -1);
  expected.add(Composition::parse("21"), -1);
  expected.add(Composition::parse("3"), 1);
  EXPECT_EQ(l3.terms, expected);
}

TEST(Embedding, RibbonTable) {
  for (const auto& [c, x] : fixtures::ribbon_table()) EXPECT_EQ(ribbon_to_x(Composition::parse(c)), x) << c;
  EXPECT_EQ(embed_x(nsym_basis<long>(NBasis::S, Composition::parse("1"))), XElem<long>(Forest::point()));
}

TEST(Embedding, ThreeRoutesAgree) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& i : compositions(n)) {
      EXPECT_EQ(embed_x(nsym_basis<long>(NBasis::S, i)), s_to_x(i)) << i.str();
      EXPECT_EQ(embed_x(nsym_basis<long>(NBasis::Lambda, i)), lambda_to_x(i)) << i.str();
    }
}

TEST(Embedding, CompleteAndElementary) {
  for (int n = 1; n <= 6; ++n) {
    XElem<long> all;
    for (const auto& f : enumerate_forests(n)) all.add(f, 1);
    EXPECT_EQ(s_to_x(Composition({n})), all);
    EXPECT_EQ(lambda_to_x(Composition({n})), XElem<long>(Forest::points(n)));
  }
}

TEST(Embedding, AlgebraMorphism) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 4; ++b)
      for (const auto& i : compositions(a))
        for (const auto& j : compositions(b)) {
          auto ri = nsym_basis<long>(NBasis::R, i), rj = nsym_basis<long>(NBasis::R, j);
          EXPECT_EQ(embed_x(nsym_product(ri, rj)), x_product(embed_x(ri), embed_x(rj)));
        }
}

TEST(Embedding, InverseOnTheImage) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& i : compositions(n)) {
      auto r = nsym_basis<Rational>(NBasis::R, i);
      EXPECT_EQ(x_to_ribbons(embed_x(r), n).terms, r.terms);
    }
  // Sym has 4 dimensions in degree 3, the forests 5.
  int outside = 0;
  for (const auto& f : enumerate_forests(3)) {
    XElem<Rational> x(f);
    try {
      EXPECT_EQ(embed_x(x_to_ribbons(x, 3)), x);
    } catch (const std::domain_error&) {
      ++outside;
    }
  }
  EXPECT_GE(outside, 1);
}

TEST(Qsym, ConversionsRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& i : compositions(n)) {
      auto m = QsymElem<long>{QBasis::M, LinComb<Composition, long>(i)};
      EXPECT_EQ(qsym_convert(qsym_convert(m, QBasis::F), QBasis::M).terms, m.terms);
    }
}

TEST(Qsym, MinusXIsAnInvolution) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& i : compositions(n)) {
      QsymElem<long> f{QBasis::F, LinComb<Composition, long>(i)};
      EXPECT_TRUE(qsym_equal(minus_X(minus_X(f)), f));
      // F_I(-X) = (-1)^{|I|} F_{complement of I}(X).
      QsymElem<long> expected{QBasis::F, LinComb<Composition, long>(i.complement(), n % 2 == 0 ? 1 : -1)};
      EXPECT_TRUE(qsym_equal(minus_X(f), expected)) << i.str();
    }
}

// The coefficient of M_I in (-1)^{|F|} Gamma_F(-X) counts strict labellings
// of evaluation I, i.e. the coefficient of X_F in Lambda^I.
TEST(Qsym, SignedGammaCountsStrictLabellings) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(n)) {
      auto g = qsym_convert(minus_X(gamma_qsym(f)), QBasis::M);
      for (const auto& i : compositions(n)) {
        long sign = n % 2 == 0 ? 1 : -1;
        EXPECT_EQ(sign * g.terms.coeff(i), lambda_to_x(i).coeff(f)) << f.str() << " " << i.str();
      }
    }
}

TEST(Qsym, GammaTable) {
  for (const auto& [code, terms] : fixtures::gamma_table()) {
    Forest f = Forest::parse(code);
    EXPECT_TRUE(qsym_equal(gamma_qsym(f), f_terms(terms))) << code;
    EXPECT_TRUE(qsym_equal(gamma_qsym(f, GammaRoute::Recursion), f_terms(terms))) << code;
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(qsym_equal(gamma_qsym(Forest::chain(n)), f_terms({{std::to_string(n), 1}})));
    for (const auto& f : enumerate_forests(n))
      EXPECT_TRUE(qsym_equal(gamma_qsym(f), gamma_qsym(f, GammaRoute::Recursion))) << f.str();
  }
}

TEST(Qsym, FProductIsGammaMorphism) {
  for (int a = 1; a <= 3; ++a)
    for (const auto& f : enumerate_forests(a))
      for (int b = 1; a + b <= 5; ++b)
        for (const auto& g : enumerate_forests(b))
          EXPECT_TRUE(qsym_equal(qsym_f_product(gamma_qsym(f), gamma_qsym(g)), gamma_qsym(f * g)));
}

TEST(Binomial, FBasisFormula) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& i : compositions(n)) {
      QsymElem<long> f{QBasis::F, LinComb<Composition, long>(i)};
      EXPECT_EQ(eval_binomial(f), binom_shift(n - i.length(), n)) << i.str();
    }
  EXPECT_EQ(eval_binomial(QsymElem<long>{QBasis::F, LinComb<Composition, long>(Composition())}), MultiPoly(1));
}

TEST(Binomial, TableValues) {
  EXPECT_EQ(eval_binomial(gamma_qsym(Forest::parse("10"))), binom_shift(1, 2));
  EXPECT_EQ(eval_binomial(gamma_qsym(Forest::parse("2100"))), binom_shift(3, 4) + MultiPoly(2) * binom_shift(2, 4));
  EXPECT_EQ(eval_binomial(gamma_qsym(Forest::parse("3000"))),
            binom_shift(3, 4) + MultiPoly(4) * binom_shift(2, 4) + binom_shift(1, 4));
}

TEST(Alphabets, Geometric) {
  EXPECT_EQ(m_alphabet(Composition::parse("1"), geometric_letters(2)), MultiPoly(1) + q() + q().pow(2));
  EXPECT_EQ(m_alphabet(Composition::parse("11"), geometric_letters(1)), q());
  EXPECT_EQ(eval_geometric(gamma_qsym(Forest::parse("200")), 2),
            MultiPoly(1) + q() + MultiPoly(3) * q().pow(2) + MultiPoly(3) * q().pow(3) + MultiPoly(3) * q().pow(4) +
                MultiPoly(2) * q().pow(5) + q().pow(6));
}

TEST(Xqt, CompleteOfDegreeTwo) {
  QsymElem<long> h2{QBasis::M, {}};
  h2.terms.add(Composition::parse("2"), 1);
  h2.terms.add(Composition::parse("11"), 1);
  EXPECT_TRUE(ratfn_equal(eval_Xqt(h2), fixtures::h2_xqt()));
  EXPECT_TRUE(ratfn_equal(eval_Xqt(QsymElem<long>{QBasis::M, LinComb<Composition, long>(Composition())}),
                          RationalFn(1)));
}

TEST(Xqt, DenominatorsAreCyclotomicProducts) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& i : compositions(n)) {
      const RationalFn& f = m_xqt(i);
      EXPECT_FALSE(f.den().involves(Var::t())) << i.str();
      EXPECT_FALSE(f.den().involves(Var::x())) << i.str();
    }
}

TEST(Xqt, PowerSpecializationIsTheGeometricAlphabet) {
  for (int n = 0; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& i : compositions(d)) {
        auto v = at_t_power(m_xqt(i), n).as_polynomial();
        ASSERT_TRUE(v.has_value()) << i.str() << " " << n;
        EXPECT_EQ(*v, m_alphabet(i, geometric_letters(n))) << i.str() << " " << n;
      }
}

TEST(Xqt, ChapotonCoefficientOfX10) {
  RationalFn g = at_t_affine(eval_Xqt(gamma_qsym(Forest::parse("10"))));
  MultiPoly x = MultiPoly::var(Var::x());
  RationalFn divided(g.num().exact_div(MultiPoly(1) + q() * x), g.den());
  RationalFn at = divided.substitute(Var::x(), MultiPoly(-1) * MultiPoly::var(Var::q(), -1));
  EXPECT_TRUE(ratfn_equal(at, RationalFn(MultiPoly(1), MultiPoly(1) + q())));
}

TEST(Xqt, PrimedGammaTable) {
  for (const auto& [code, value] : fixtures::gamma_prime_table()) {
    auto g = gamma_qsym(Forest::parse(code));
    EXPECT_TRUE(ratfn_equal(at_t_affine(eval_Xqt(g)), value)) << code;
    EXPECT_TRUE(ratfn_equal(at_t_affine(eval_Xqt(omega(g), true)), value)) << code;
  }
}

TEST(Xqt, OtherOmegaCandidatesMissTheTable) {
  for (auto which : {OmegaCandidate::Conjugate, OmegaCandidate::Complement, OmegaCandidate::ReverseComplement}) {
    bool all = true;
    for (const auto& [code, value] : fixtures::gamma_prime_table())
      if (!ratfn_equal(at_t_affine(eval_Xqt(omega(gamma_qsym(Forest::parse(code)), which))), value)) all = false;
    EXPECT_FALSE(all);
  }
}

TEST(Xqt, OmegaIsAnInvolution) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& i : compositions(n)) {
      QsymElem<long> f{QBasis::F, LinComb<Composition, long>(i)};
      EXPECT_TRUE(qsym_equal(omega(omega(f)), f));
    }
}

// f(qt) = f(t) sigma_{qt}(A), read on the coefficient of S^I.
TEST(Xqt, FunctionalEquation) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& i : compositions(n)) {
      RationalFn rhs = m_xqt(i);
      const auto& parts = i.parts();
      Composition j(std::vector<int>(parts.begin(), parts.end() - 1));
      int m = parts.back();
      rhs += m_xqt(j) * RationalFn((q() * t()).pow(m));
      EXPECT_TRUE(ratfn_equal(at_t_scaled(m_xqt(i)), rhs)) << i.str();
    }
}

TEST(Xqt, InteriorSpecialization) {
  // t = q^{-n} gives Gamma(-A) on the letters q^{-1}, ..., q^{-(n-1)}.
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d)
      for (const auto& i : compositions(d)) {
        QsymElem<long> m{QBasis::M, LinComb<Composition, long>(i)};
        std::vector<MultiPoly> letters;
        for (int k = 1; k <= n - 1; ++k) letters.push_back(MultiPoly::var(Var::q(), -k));
        EXPECT_TRUE(ratfn_equal(at_t_power(m_xqt(i), -n), RationalFn(eval_alphabet(minus_X(m), letters))))
            << i.str() << " " << n;
      }
}
