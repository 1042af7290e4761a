#pragma once

// Exact coefficient rings: rationals (GMP), sparse multivariate Laurent
// polynomials over a fixed variable set, unnormalized rational functions,
// and truncated Laurent series in z with a polar-part splitting.

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nck {

using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);
Rational binomial(long n, long k);
Rational factorial(long n);

// Variables are identified by a small integer. The fixed ids below give a
// deterministic order for printing and for the lex monomial order.
class Var {
 public:
  static Var q() { return Var(0); }
  static Var t() { return Var(1); }
  static Var x() { return Var(2); }
  static Var alpha() { return Var(3); }
  static Var a() { return Var(4); }
  static Var b() { return Var(5); }
  static Var ak(int k) { return Var(static_cast<std::uint16_t>(kFirstA + k)); }
  static std::optional<Var> from_name(std::string_view name);
  static Var from_id(std::uint16_t id) { return Var(id); }

  std::string name() const;
  std::uint16_t id() const { return id_; }
  auto operator<=>(const Var&) const = default;

 private:
  static constexpr std::uint16_t kFirstA = 16;
  explicit Var(std::uint16_t id) : id_(id) {}
  std::uint16_t id_;
};

class Monomial {
 public:
  Monomial() = default;
  Monomial(Var v, int e);

  int degree(Var v) const;
  int total_degree() const;
  bool is_one() const { return e_.empty(); }
  const std::vector<std::pair<std::uint16_t, int>>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial without(Var v) const;
  std::string str() const;

  bool operator==(const Monomial&) const = default;
  // Lex order, smaller variable id most significant.
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<std::uint16_t, int>> e_;  // sorted by id, exponents != 0
};

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(const Rational& c);                 // NOLINT
  MultiPoly(const Monomial& m, const Rational& c = 1);
  static MultiPoly var(Var v, int e = 1) { return MultiPoly(Monomial(v, e)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  int degree(Var v) const;      // max exponent; 0 for zero polynomial
  int min_degree(Var v) const;  // min exponent; 0 for zero polynomial
  bool involves(Var v) const;
  std::vector<Var> variables() const;
  MultiPoly coeff_of(Var v, int e) const;  // coefficient of v^e, v removed

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Replace v by p. Negative exponents of v require p to be a single monomial.
  MultiPoly substitute(Var v, const MultiPoly& p) const;
  // Exact quotient; throws std::domain_error if d does not divide *this.
  MultiPoly exact_div(const MultiPoly& d) const;
  std::optional<MultiPoly> try_div(const MultiPoly& d) const;

  // Leading term for the lex order (largest monomial).
  std::pair<Monomial, Rational> leading() const;
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// Univariate gcd over Q (monic), for polynomials in the single variable v.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, Var v);

MultiPoly bernoulli_polynomial(int m);
MultiPoly discrete_integral(const MultiPoly& p);
MultiPoly gaussian_binomial(int n, int k);
MultiPoly q_integer(int n);  // 1 + q + ... + q^{n-1}

class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}            // NOLINT
  RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFn(const MultiPoly& p) : num_(p), den_(1) {} // NOLINT
  RationalFn(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const { return RationalFn(-num_, den_); }
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o) { return *this += -o; }
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  // Cross-multiplication equality.
  bool operator==(const RationalFn& o) const;

  RationalFn substitute(Var v, const MultiPoly& p) const;
  // Polynomial value if the denominator divides the numerator.
  std::optional<MultiPoly> as_polynomial() const;
  std::string str() const;

 private:
  void reduce();
  MultiPoly num_, den_;
};

bool ratfn_equal(const RationalFn& f, const RationalFn& g);

// Truncated Laurent series in z. Coefficients of exponents <= precision()
// are exact; kExact means the value is a Laurent polynomial. Exponents are
// kept within [-window, window]; writing below -window or asking for a
// projection beyond the known precision sets the sticky overflow flag.
class LaurentPoly {
 public:
  static constexpr int kExact = INT_MAX;

  LaurentPoly() = default;
  explicit LaurentPoly(int window) : window_(window) {}
  static LaurentPoly constant(const MultiPoly& c, int window);
  static LaurentPoly monomial(const MultiPoly& c, int exp, int window);

  int window() const { return window_; }
  int precision() const { return prec_; }
  bool overflow() const { return overflow_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, MultiPoly>& terms() const { return c_; }
  MultiPoly coeff(int e) const;
  std::optional<int> min_exponent() const;

  void set_coeff(int e, const MultiPoly& c);
  void set_precision(int p);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const MultiPoly& s) const;
  LaurentPoly pow(unsigned e) const;
  // Compares the stored terms (precision is not part of the value).
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  LaurentPoly polar_part() const;    // P+: strictly negative exponents
  LaurentPoly regular_part() const;  // P-: the rest
  MultiPoly residue() const;         // coefficient of z^{-1}
  MultiPoly at_one() const;          // z = 1, requires an exact value
  LaurentPoly substitute(Var v, const MultiPoly& p) const;
  std::string str() const;

 private:
  void trim();
  std::map<int, MultiPoly> c_;
  int window_ = 0;
  int prec_ = kExact;
  bool overflow_ = false;
};

std::pair<LaurentPoly, LaurentPoly> polar_split(const LaurentPoly& f);

// Equality of the coefficients both operands know exactly.
bool agree_up_to_precision(const LaurentPoly& a, const LaurentPoly& b);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(long r) { return r == 0; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_zero(const RationalFn& f) { return f.is_zero(); }
inline bool is_zero(const LaurentPoly& f) { return f.is_zero(); }

inline std::string to_string(long v) { return std::to_string(v); }
inline std::string to_string(const MultiPoly& p) { return p.str(); }
inline std::string to_string(const RationalFn& f) { return f.str(); }
inline std::string to_string(const LaurentPoly& f) { return f.str(); }

}  // namespace nck
