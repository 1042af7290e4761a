#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "nck/combinat.hpp"
#include "printers.hpp"

using namespace nck;

namespace {

long catalan_formula(int n) {
  // C(2n, n) / (n + 1) with exact integer steps.
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// Ancestor test straight from the parent array.
bool is_extension(const Labelled& l, const Permutation& w) {
  std::vector<int> pos(l.n + 1);
  for (int k = 0; k < l.n; ++k) pos[w[k]] = k;
  for (int i = 1; i <= l.n; ++i)
    if (l.parent[i] != 0 && pos[i] > pos[l.parent[i]]) return false;
  return true;
}

}  // namespace

TEST(Forest, ParsesAndPrintsCodes) {
  auto f = Forest::parse("2100");
  EXPECT_TRUE(f.is_tree());
  EXPECT_EQ(f.size(), 4);
  EXPECT_EQ(f.children().str(), "100");
  EXPECT_EQ(f.children().trees().size(), 2u);
  EXPECT_TRUE(Forest::parse("").empty());
  EXPECT_EQ(Forest::parse("").str(), "");
  EXPECT_THROW(Forest::parse("21"), std::invalid_argument);
  EXPECT_THROW(Forest::parse("1"), std::invalid_argument);
  EXPECT_EQ(Forest::parse("10,0,0,0,0,0,0,0,0,0,0").size(), 11);
  EXPECT_EQ(Forest::parse("10,0,0,0,0,0,0,0,0,0,0").str(), "10,0,0,0,0,0,0,0,0,0,0");
}

TEST(Forest, Constructors) {
  EXPECT_EQ(Forest::chain(3).str(), "110");
  EXPECT_EQ(Forest::corolla(4).str(), "3000");
  EXPECT_EQ(Forest::points(3).str(), "000");
  EXPECT_EQ(Forest::graft(Forest::parse("100")).str(), "2100");
  EXPECT_EQ((Forest::parse("10") * Forest::point()).str(), "100");
}

TEST(Forest, EnumerationCountsAreCatalan) {
  EXPECT_EQ(enumerate_forests(0).size(), 1u);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate_forests(n).size()), catalan_formula(n)) << n;
    EXPECT_EQ(static_cast<long>(enumerate_trees(n).size()), catalan_formula(n - 1)) << n;
    EXPECT_EQ(catalan(n), catalan_formula(n));
  }
  EXPECT_EQ(enumerate_forests(5).size(), 42u);
}

TEST(Forest, EnumerationIsDistinctAndValid) {
  for (int n = 0; n <= 7; ++n) {
    const auto& fs = enumerate_forests(n);
    std::set<Forest> seen(fs.begin(), fs.end());
    EXPECT_EQ(seen.size(), fs.size());
    for (const auto& f : fs) EXPECT_EQ(Forest::from_code(f.code()), f);
  }
}

TEST(Labelling, PostorderWithRootMaximal) {
  auto l = label(Forest::parse("2100"));
  // leaf 1 under 2, leaf 3 and node 2 under the root 4
  EXPECT_EQ(l.parent[1], 2);
  EXPECT_EQ(l.parent[2], 4);
  EXPECT_EQ(l.parent[3], 4);
  EXPECT_EQ(l.parent[4], 0);
  EXPECT_TRUE(below(l, 1, 4));
  EXPECT_FALSE(below(l, 3, 2));
}

TEST(Labelling, RestrictionKeepsInducedForest) {
  auto l = label(Forest::parse("2100"));
  EXPECT_EQ(restrict(l, {false, true, false, true, true}).str(), "200");
  EXPECT_EQ(restrict(l, {false, true, true, false, true}).str(), "110");
  EXPECT_EQ(restrict(l, {false, true, true, true, false}).str(), "100");
  EXPECT_EQ(restrict(l, {false, false, false, false, false}).str(), "");
}

TEST(Extensions, MatchBruteForce) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& f : enumerate_forests(n)) {
      auto l = label(f);
      std::vector<Permutation> brute;
      for (const auto& p : all_permutations(n))
        if (is_extension(l, p)) brute.push_back(p);
      auto got = linear_extensions(f);
      std::sort(got.begin(), got.end());
      std::sort(brute.begin(), brute.end());
      EXPECT_EQ(got, brute) << f.str();
    }
}

TEST(Extensions, Examples) {
  auto ext = linear_extensions(Forest::parse("2100"));
  std::set<Permutation> s(ext.begin(), ext.end());
  EXPECT_EQ(s, (std::set<Permutation>{{3, 1, 2, 4}, {1, 3, 2, 4}, {1, 2, 3, 4}}));
  EXPECT_EQ(linear_extensions(Forest::chain(5)), std::vector<Permutation>{identity_permutation(5)});
  auto two = linear_extensions(Forest::points(2));
  EXPECT_EQ(std::set<Permutation>(two.begin(), two.end()), (std::set<Permutation>{{1, 2}, {2, 1}}));
}

TEST(Extensions, MaximalExtensionAndReconstruction) {
  EXPECT_EQ(max_linear_extension(Forest::parse("3100200")), (Permutation{5, 4, 6, 3, 1, 2, 7}));
  EXPECT_EQ(forest_from_max_extension({5, 4, 6, 3, 1, 2, 7})->str(), "3100200");
  EXPECT_EQ(max_linear_extension(Forest::chain(4)), identity_permutation(4));
  for (int n = 0; n <= 7; ++n)
    for (const auto& f : enumerate_forests(n)) {
      auto ext = linear_extensions(f);
      Permutation m = max_linear_extension(f);
      EXPECT_EQ(m, *std::max_element(ext.begin(), ext.end())) << f.str();
      auto back = forest_from_max_extension(m);
      ASSERT_TRUE(back.has_value()) << f.str();
      EXPECT_EQ(*back, f);
    }
}

TEST(Extensions, MaximalExtensionsAreThe132AvoidingInverses) {
  for (int n = 0; n <= 7; ++n) {
    std::set<Permutation> from_forests;
    for (const auto& f : enumerate_forests(n)) from_forests.insert(inverse(max_linear_extension(f)));
    std::set<Permutation> avoiders;
    for (const auto& p : all_permutations(n))
      if (!contains_pattern_132(p)) avoiders.insert(p);
    EXPECT_EQ(from_forests, avoiders) << n;
  }
}

TEST(Extensions, NonMaximalWordsAreRejected) {
  EXPECT_FALSE(forest_from_max_extension({1, 3, 2}).has_value());
  int rejected = 0;
  for (const auto& p : all_permutations(5))
    if (!forest_from_max_extension(p)) ++rejected;
  EXPECT_EQ(rejected, 120 - 42);
}

TEST(Permutations, Basics) {
  Permutation p{3, 1, 2};
  EXPECT_EQ(inverse(p), (Permutation{2, 3, 1}));
  EXPECT_EQ(descent_set(p), (std::set<int>{1}));
  EXPECT_EQ(standardize({2, 1, 2, 1}), (Permutation{3, 1, 4, 2}));
  EXPECT_TRUE(contains_pattern_132({1, 3, 2}));
  EXPECT_FALSE(contains_pattern_132({3, 1, 2}));
  EXPECT_EQ(inversion_set({2, 1}), (std::set<std::pair<int, int>>{{1, 2}}));
  EXPECT_FALSE(is_permutation({1, 1}));
  EXPECT_EQ(all_permutations(5).size(), 120u);
}

TEST(Compositions, Calculus) {
  auto i = Composition::parse("13");
  EXPECT_EQ(i.descent_set(), (std::set<int>{1}));
  EXPECT_EQ(i.maj(), 1);
  EXPECT_EQ(Composition::parse("312").sign_word(), "++--++");
  EXPECT_EQ(Composition::parse("31").complement(), Composition::parse("112"));
  EXPECT_EQ(Composition::parse("31").mirror(), Composition::parse("13"));
  EXPECT_EQ(Composition::from_descent_set({1, 3}, 4), Composition::parse("121"));
  EXPECT_EQ((Composition::parse("1") + Composition::parse("2")), Composition::parse("12"));
  EXPECT_THROW(Composition({0, 1}), std::invalid_argument);
}

TEST(Compositions, EnumerationAndRefinement) {
  for (int n = 1; n <= 7; ++n) {
    auto cs = compositions(n);
    EXPECT_EQ(static_cast<long>(cs.size()), 1L << (n - 1));
    for (const auto& i : cs) {
      EXPECT_EQ(Composition::from_descent_set(i.descent_set(), n), i);
      EXPECT_EQ(i.complement().complement(), i);
      EXPECT_TRUE(finer(Composition(std::vector<int>(n, 1)), i));
      EXPECT_TRUE(finer(i, Composition({n})));
      for (const auto& j : cs) {
        auto dj = j.descent_set(), di = i.descent_set();
        bool contains = std::includes(dj.begin(), dj.end(), di.begin(), di.end());
        EXPECT_EQ(finer(j, i), contains);
      }
    }
  }
}

TEST(PackedWords, CountsAreFubiniNumbers) {
  const long fubini[] = {1, 1, 3, 13, 75, 541};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(static_cast<long>(packed_words(n).size()), fubini[n]) << n;
    for (const auto& u : packed_words(n)) EXPECT_TRUE(is_packed(u));
  }
  EXPECT_FALSE(is_packed({1, 3}));
  auto c = coarsenings({2, 1, 3});
  std::set<PackedWord> s(c.begin(), c.end());
  EXPECT_EQ(s, (std::set<PackedWord>{{2, 1, 3}, {1, 1, 2}, {2, 1, 2}, {1, 1, 1}}));
}

TEST(NonPlane, AutomorphismOrders) {
  EXPECT_EQ(non_plane_class(Forest::parse("200")).aut_order, 2);
  EXPECT_EQ(non_plane_class(Forest::chain(4)).aut_order, 1);
  EXPECT_EQ(non_plane_class(Forest::corolla(4)).aut_order, 6);
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n))
      EXPECT_EQ(non_plane_class(t).aut_order, aut_order_bruteforce(t)) << t.str();
  EXPECT_EQ(non_plane_class(Forest::parse("2100")), non_plane_class(Forest::parse("2010")));
}
