#pragma once

// Exact sparse Laurent polynomials over Z in the fixed variable set {x, s, t}.
// Exponents may be negative; coefficients are arbitrary precision.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>

namespace braidalex {

using Coeff = boost::multiprecision::cpp_int;

// Exponent lattice point of a monomial x^ex * s^es * t^et.
struct ExponentVector {
  std::int64_t ex = 0;
  std::int64_t es = 0;
  std::int64_t et = 0;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    return {a.ex + b.ex, a.es + b.es, a.et + b.et};
  }
  friend ExponentVector operator-(const ExponentVector& a) { return {-a.ex, -a.es, -a.et}; }
  friend ExponentVector operator*(std::int64_t c, const ExponentVector& e) {
    return {c * e.ex, c * e.es, c * e.et};
  }
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.ex == b.ex && a.es == b.es && a.et == b.et;
  }

  std::int64_t degree() const { return ex + es + et; }
};

// Graded-lexicographic order on (ex, es, et); also the canonical term order
// for rendering and JSON output.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.ex != b.ex) return a.ex < b.ex;
    if (a.es != b.es) return a.es < b.es;
    return a.et < b.et;
  }
};

// Variable names used when rendering; the exponent lattice itself is nameless,
// which is what lets the same ring serve {x,s,t} and the renamed {xi,tau,zeta}.
struct VarNames {
  std::string x = "x";
  std::string s = "s";
  std::string t = "t";
};

// Per-variable replacement by a unit-coefficient monomial. The identity map
// by default; the two uses in practice are the x<->s swap and variable squaring.
struct Substitution {
  ExponentVector x_image{1, 0, 0};
  ExponentVector s_image{0, 1, 0};
  ExponentVector t_image{0, 0, 1};

  static Substitution swap_xs() { return {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}; }
  static Substitution square() { return {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}; }

  ExponentVector apply(const ExponentVector& e) const {
    return e.ex * x_image + e.es * s_image + e.et * t_image;
  }
};

class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Coeff, GrlexLess>;

  LaurentPolynomial() = default;
  LaurentPolynomial(int c) { insert_term(Coeff(c), {}); }          // NOLINT: implicit by design
  LaurentPolynomial(const Coeff& c) { insert_term(c, {}); }        // NOLINT

  static LaurentPolynomial monomial(Coeff c, ExponentVector e) {
    LaurentPolynomial p;
    p.insert_term(std::move(c), e);
    return p;
  }
  static LaurentPolynomial variable_x(std::int64_t n = 1) { return monomial(1, {n, 0, 0}); }
  static LaurentPolynomial variable_s(std::int64_t n = 1) { return monomial(1, {0, n, 0}); }
  static LaurentPolynomial variable_t(std::int64_t n = 1) { return monomial(1, {0, 0, n}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::string render(const VarNames& names = {}) const;
  std::string to_json(const VarNames& names = {}) const;
  static LaurentPolynomial from_json(const std::string& text, const VarNames& names = {});

 private:
  void insert_term(Coeff c, const ExponentVector& e);

  TermMap terms_;
};

using Laurent = LaurentPolynomial;

LaurentPolynomial pow(const LaurentPolynomial& p, std::uint64_t n);

// Sum_{i=0}^{n-1} base^i; the division-free reading of (base^n - 1)/(base - 1).
LaurentPolynomial geometric_sum(const LaurentPolynomial& base, std::uint64_t n);

LaurentPolynomial substitute(const LaurentPolynomial& p, const Substitution& sub);

// Negates every exponent vector; a ring involution.
LaurentPolynomial invert_variables(const LaurentPolynomial& p);

}  // namespace braidalex
