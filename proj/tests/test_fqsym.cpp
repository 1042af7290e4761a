#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "printers.hpp"
#include "nck/fqsym.hpp"

using namespace nck;

namespace {

FQSymElem F(std::initializer_list<Permutation> ps) {
  FQSymElem out;
  for (const auto& p : ps) out.add(p, 1);
  return out;
}

std::vector<Permutation> avoiders_upto(int n) {
  std::vector<Permutation> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : all_permutations(k))
      if (!contains_pattern_132(p)) out.push_back(p);
  return out;
}

// Shuffles of u with v shifted by |u|, built by explicit interleaving masks.
FQSymElem shuffle_bruteforce(const Permutation& u, const Permutation& v) {
  int n = static_cast<int>(u.size() + v.size());
  FQSymElem out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != static_cast<int>(u.size())) continue;
    Permutation w;
    size_t i = 0, j = 0;
    for (int k = 0; k < n; ++k)
      w.push_back(mask >> k & 1 ? u[i++] : v[j++] + static_cast<int>(u.size()));
    out.add(w, 1);
  }
  return out;
}

}  // namespace

TEST(Gamma, Example2100) {
  EXPECT_EQ(gamma_fqsym(Forest::parse("2100")), F({{3, 1, 2, 4}, {1, 3, 2, 4}, {1, 2, 3, 4}}));
  EXPECT_EQ(gamma_fqsym(Forest()), F({{}}));
}

TEST(Gamma, ShiftedShuffle) {
  EXPECT_EQ(fqsym_product(gamma_fqsym(Forest::parse("10")), gamma_fqsym(Forest::parse("0"))),
            gamma_fqsym(Forest::parse("100")));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& u : all_permutations(a))
        for (const auto& v : all_permutations(b))
          EXPECT_EQ(fqsym_product(F({u}), F({v})), shuffle_bruteforce(u, v));
}

TEST(Gamma, AlgebraMorphism) {
  for (int a = 0; a <= 5; ++a)
    for (const auto& f : enumerate_forests(a))
      for (int b = 0; a + b <= 5; ++b)
        for (const auto& g : enumerate_forests(b))
          EXPECT_EQ(fqsym_product(gamma_fqsym(f), gamma_fqsym(g)), gamma_fqsym(f * g)) << f.str() << " " << g.str();
}

TEST(WeakOrders, InversionContainment) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& s : all_permutations(n))
      for (const auto& t : all_permutations(n)) {
        auto is = inversion_set(s), it = inversion_set(t);
        bool values = std::includes(is.begin(), is.end(), it.begin(), it.end());
        EXPECT_EQ(right_weak_leq(t, s), values);
        auto js = inversion_set(inverse(s)), jt = inversion_set(inverse(t));
        EXPECT_EQ(left_weak_leq(t, s), std::includes(js.begin(), js.end(), jt.begin(), jt.end()));
      }
  EXPECT_TRUE(left_weak_leq({1, 2, 3}, {3, 2, 1}));
  EXPECT_FALSE(left_weak_leq({2, 1, 3}, {1, 3, 2}));
}

TEST(MBasis, UnitAndGuard) {
  EXPECT_EQ(m_product({}, {1, 2}), F({{1, 2}}));
  EXPECT_EQ(m_product({2, 1}, {}), F({{2, 1}}));
  EXPECT_THROW(m_product({1, 2, 3, 4}, {1, 2, 3, 4}), std::length_error);
}

TEST(MBasis, Associative) {
  auto mul = [](const FQSymElem& a, const FQSymElem& b) {
    FQSymElem out;
    for (const auto& [p, c] : a.terms())
      for (const auto& [q, d] : b.terms()) out += m_product(p, q).scaled(c * d);
    return out;
  };
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; a + b + c <= 5; ++c)
        for (const auto& p : all_permutations(a))
          for (const auto& q : all_permutations(b))
            for (const auto& r : all_permutations(c))
              EXPECT_EQ(mul(mul(F({p}), F({q})), F({r})), mul(F({p}), mul(F({q}), F({r}))));
}

TEST(PatternQuotient, Example) {
  FQSymElem expected;
  for (const auto& [p, c] : fixtures::quotient_12_12()) expected.add(p, c);
  auto r = pattern_quotient_check({1, 2}, {1, 2});
  EXPECT_EQ(r.quotient, expected);
  EXPECT_EQ(r.x_side, fixtures::x10_squared());
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(forest_of_m_index({1, 2}).str(), "10");
  EXPECT_THROW(pattern_quotient_check({1, 3, 2}, {1}), std::invalid_argument);
}

TEST(PatternQuotient, AgreesWithForestProduct) {
  auto ps = avoiders_upto(3);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      if (a.size() + b.size() > 5) continue;
      auto r = pattern_quotient_check(a, b);
      EXPECT_TRUE(r.agree) << ::testing::PrintToString(a) << " " << ::testing::PrintToString(b);
    }
}

TEST(PatternQuotient, ForestIndexing) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& f : enumerate_forests(n))
      EXPECT_EQ(forest_of_m_index(inverse(max_linear_extension(f))), f);
}
