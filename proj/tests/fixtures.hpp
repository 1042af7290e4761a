#pragma once

// Worked examples shared by the unit tests and the acceptance runner.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nck/birkhoff.hpp"
#include "nck/hopf.hpp"
#include "nck/nsym.hpp"

namespace nck::fixtures {

inline XElem<long> x_terms(std::initializer_list<std::pair<const char*, long>> terms) {
  XElem<long> out;
  for (auto& [code, c] : terms) out.add(Forest::parse(code), c);
  return out;
}

// Ribbons in the X basis, degrees 2 to 4.
inline std::vector<std::pair<std::string, XElem<long>>> ribbon_table() {
  return {
      {"11", x_terms({{"00", 1}})},
      {"2", x_terms({{"00", 1}, {"10", 1}})},
      {"3", x_terms({{"000", 1}, {"100", 1}, {"010", 1}, {"200", 1}, {"110", 1}})},
      {"21", x_terms({{"000", 2}, {"100", 1}, {"010", 1}})},
      {"12", x_terms({{"000", 2}, {"100", 1}, {"010", 1}, {"200", 1}})},
      {"111", x_terms({{"000", 1}})},
      {"4", x_terms({{"0000", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}, {"1010", 1}, {"0200", 1}, {"2000", 1},
                     {"1100", 1}, {"0110", 1}, {"1110", 1}, {"1200", 1}, {"2100", 1}, {"2010", 1}, {"3000", 1}})},
      {"31", x_terms({{"1100", 1}, {"0110", 1}, {"1000", 2}, {"0100", 2}, {"0010", 2}, {"2000", 1}, {"0200", 1},
                      {"1010", 1}, {"0000", 3}})},
      {"22", x_terms({{"1100", 1}, {"0110", 1}, {"1000", 3}, {"0100", 3}, {"0010", 3}, {"2000", 2}, {"0200", 2},
                      {"1010", 2}, {"3000", 2}, {"2100", 1}, {"2010", 1}, {"0000", 5}})},
      {"13", x_terms({{"1100", 1}, {"0110", 1}, {"1000", 2}, {"0100", 2}, {"0010", 2}, {"2000", 2}, {"0200", 2},
                      {"1010", 1}, {"3000", 2}, {"2100", 1}, {"2010", 1}, {"1200", 1}, {"0000", 3}})},
      {"211", x_terms({{"1000", 1}, {"0100", 1}, {"0010", 1}, {"0000", 3}})},
      {"121", x_terms({{"1000", 2}, {"0100", 2}, {"0010", 2}, {"2000", 1}, {"0200", 1}, {"1010", 1}, {"0000", 5}})},
      {"112", x_terms({{"1000", 1}, {"0100", 1}, {"0010", 1}, {"2000", 1}, {"0200", 1}, {"3000", 1}, {"0000", 3}})},
      {"1111", x_terms({{"0000", 1}})},
  };
}

// Delta Y_2100, as (left, right) codes.
inline std::vector<std::pair<std::string, std::string>> coproduct_2100() {
  return {{"", "2100"}, {"0", "110"}, {"0", "200"}, {"10", "10"}, {"00", "10"}, {"100", "0"}, {"2100", ""}};
}

inline MultiPoly a_word(const std::vector<int>& idx) {
  MultiPoly m(1);
  for (int i : idx) m *= MultiPoly::var(Var::ak(i));
  return m;
}

// phi+ on small trees: (code, [(indices, exponent of z)]).
struct PhiFixture {
  std::string code;
  std::vector<std::pair<std::vector<int>, int>> terms;
};

inline std::vector<PhiFixture> phi_plus_table() {
  return {
      {"0", {{{0}, -1}}},
      {"00", {{{0, 0}, -2}}},
      {"10", {{{0, 0}, -2}, {{0, 1}, -1}}},
      {"200", {{{0, 0, 0}, -3}, {{0, 1, 0}, -2}, {{0, 0, 2}, -1}}},
      {"110", {{{0, 0, 0}, -3}, {{0, 1, 0}, -2}, {{0, 0, 1}, -2}, {{0, 1, 1}, -1}, {{0, 0, 2}, -1}}},
  };
}

inline LaurentPoly phi_value(const PhiFixture& f, int window) {
  LaurentPoly v(window);
  for (auto& [idx, e] : f.terms) v += LaurentPoly::monomial(a_word(idx), e, window);
  return v;
}

// Up-set of the tree with reverse Polish code 0021, as reverse Polish codes.
inline std::vector<std::string> upset_0021_reverse() {
  return {"0021", "0020", "0102", "0101", "0100", "0003", "0002", "0001", "0000"};
}

inline Forest from_reverse_code(const std::string& rev) {
  auto c = parse_sequence(rev);
  return Forest::from_code({c.rbegin(), c.rend()});
}

// n = 4 word blocks.
inline std::map<std::string, std::vector<std::string>> word_blocks_4() {
  return {
      {"4", {"0000", "0100", "0010", "0001", "0110", "0101", "0020", "0011", "0002", "0111", "0102", "0021", "0012",
             "0003"}},
      {"31", {"0120", "0030"}},
      {"22", {"0200", "0201"}},
      {"13", {"1000", "1010", "1001", "1011", "1002"}},
      {"211", {"0300", "0210"}},
      {"121", {"1020"}},
      {"112", {"2000", "1100", "2001", "1101"}},
      {"1111", {"3000", "2100", "2010", "1200", "1110"}},
  };
}

inline std::map<std::string, std::vector<std::string>> word_blocks_3() {
  return {{"3", {"000", "001", "010", "002", "011"}}, {"12", {"100", "101"}}, {"21", {"020"}}, {"111", {"200", "110"}}};
}

// W(4,1,1,1), row by row; the fifth row of the source misprints 0103110 as 0103100.
inline std::vector<std::string> words_4111() {
  return {"0006000", "0015000", "0105000", "0024000", "0114000", "0005100", "0014100", "0104100", "0023100",
          "0113100", "0005010", "0014010", "0104010", "0023010", "0113010", "0004200", "0013200", "0103200",
          "0022200", "0112200", "0004110", "0013110", "0103110", "0022110", "0112110"};
}

// Eulerian idempotents e_4^(k), numerators over 4! = 24.
inline std::vector<XElem<long>> eulerian_4() {
  return {
      x_terms({{"1110", 6}, {"1200", 4}, {"2010", 2}, {"2100", 2}}),
      x_terms({{"2100", 9}, {"1010", 6}, {"3000", 6}, {"1200", 10}, {"2010", 9}, {"2000", 4}, {"0200", 4},
               {"1100", 8}, {"1110", 11}, {"0110", 8}}),
      x_terms({{"2010", 10}, {"0200", 12}, {"1110", 6}, {"0010", 12}, {"1200", 8}, {"0110", 12}, {"3000", 12},
               {"1100", 12}, {"2000", 12}, {"1010", 12}, {"0100", 12}, {"2100", 10}, {"1000", 12}}),
      x_terms({{"2100", 3}, {"0200", 8}, {"2000", 8}, {"1200", 2}, {"0110", 4}, {"1100", 4}, {"2010", 3},
               {"1000", 12}, {"0100", 12}, {"1010", 6}, {"3000", 6}, {"0000", 24}, {"0010", 12}, {"1110", 1}}),
  };
}

// Gamma_T(X) in the F basis.
inline std::vector<std::pair<std::string, std::vector<std::pair<std::string, long>>>> gamma_table() {
  return {
      {"10", {{"2", 1}}},
      {"110", {{"3", 1}}},
      {"200", {{"12", 1}, {"3", 1}}},
      {"1110", {{"4", 1}}},
      {"1200", {{"13", 1}, {"4", 1}}},
      {"2010", {{"22", 1}, {"13", 1}, {"4", 1}}},
      {"2100", {{"22", 1}, {"13", 1}, {"4", 1}}},
      {"3000", {{"112", 1}, {"22", 2}, {"13", 2}, {"4", 1}}},
  };
}

// Gamma'_T(X_{q,t}) at t = 1 + (q-1)x.
inline std::vector<std::pair<std::string, RationalFn>> gamma_prime_table() {
  MultiPoly q = MultiPoly::var(Var::q()), x = MultiPoly::var(Var::x());
  auto Q = [&](unsigned e) { return q.pow(e); };
  MultiPoly one(1);
  MultiPoly f1 = q * x + one;
  MultiPoly f2 = Q(2) * x + q + one;
  MultiPoly f3 = Q(3) * x + Q(2) + q + one;
  MultiPoly d2 = q + one, d3 = Q(2) + q + one, d4 = Q(2) + one;
  return {
      {"10", RationalFn(f2 * f1, d2)},
      {"110", RationalFn(f3 * f2 * f1, d3 * d2)},
      {"200", RationalFn((Q(3) * x + Q(2) * x + Q(2) + q + one) * f2 * f1, d3 * d2)},
      {"1110", RationalFn((Q(4) * x + Q(3) + Q(2) + q + one) * f3 * f2 * f1, d3 * d4 * d2 * d2)},
      {"1200", RationalFn(f3 * (Q(3) * x + Q(2) + one) * f2 * f1, d3 * d4 * d2)},
      {"2010", RationalFn((Q(4) * x + Q(3) * x + Q(3) + Q(2) * x + Q(2) + q + one) * f3 * f2 * f1, d3 * d4 * d2 * d2)},
      {"2100", RationalFn((Q(4) * x + Q(3) * x + Q(3) + Q(2) * x + Q(2) + q + one) * f3 * f2 * f1, d3 * d4 * d2 * d2)},
      {"3000", RationalFn((Q(6) * x * x + Q(5) * x * x + MultiPoly(2) * Q(5) * x + Q(4) * x * x +
                           MultiPoly(2) * Q(4) * x + Q(4) + MultiPoly(3) * Q(3) * x + Q(3) + MultiPoly(2) * Q(2) * x +
                           MultiPoly(2) * Q(2) + q + one) *
                              f2 * f1,
                          d3 * d4 * d2)},
  };
}

// D_lambda at n = 4 in the ribbon basis (R_1111 in place of the misprinted R_111).
inline NsymElem<Rational> ribbons(std::initializer_list<std::pair<const char*, long>> terms) {
  NsymElem<Rational> out{NBasis::R, {}};
  for (auto& [c, k] : terms) out.terms.add(Composition::parse(c), Rational(k));
  return out;
}

// M_12 M_12 modulo 132-patterned terms, and the matching X_10 X_10.
inline std::vector<std::pair<Permutation, long>> quotient_12_12() {
  return {{{3, 4, 1, 2}, 2}, {{3, 1, 2, 4}, 1}, {{2, 3, 1, 4}, 1}, {{1, 2, 3, 4}, 1}};
}

inline XElem<long> x10_squared() { return x_terms({{"1010", 2}, {"2100", 1}, {"2010", 1}, {"1110", 1}}); }

// h_2 on X_{q,t}.
inline RationalFn h2_xqt() {
  MultiPoly q = MultiPoly::var(Var::q()), t = MultiPoly::var(Var::t()), one(1);
  return RationalFn((one - q * t) * (one - q.pow(2) * t), (one - q) * (one - q.pow(2)));
}

// Integral points of 2Q for the cherry poset {x1, x2 <= x3}, with 002 in
// place of the repeated 022 of the printed list.
inline std::vector<std::string> cherry_points_2() {
  return {"000", "001", "011", "101", "002", "111", "012", "102", "112", "022", "202", "122", "212", "222"};
}

// Coefficients of q^0..q^6 in the q-count of 2Q.
inline std::vector<long> cherry_qcount_2() { return {1, 1, 3, 3, 3, 2, 1}; }

}  // namespace nck::fixtures
