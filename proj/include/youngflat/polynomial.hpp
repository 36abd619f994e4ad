#pragma once

// Homogeneous polynomials over the rationals and their text syntax.
//
// Grammar (whitespace is ignored):
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := coef | [coef ['*']] factor ('*' factor)*
//   coef   := integer | integer '/' integer
//   factor := var ['^' integer]
//   var    := a..w (a is variable 1) | 'x' digits (x0 is variable 1) | 'x'

#include "youngflat/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace youngflat {

using Exponent = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int n = 1);

  /// c * x^alpha.
  static Polynomial monomial(const Exponent& alpha, const Rational& c = Rational(1));
  /// x_i^d for a 1-based variable index.
  static Polynomial power(int n, int variable, int d);

  int n() const { return n_; }
  /// Common degree of all terms; 0 for the zero polynomial.
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& alpha) const;

  /// Throws NotHomogeneous when alpha has a different degree than the terms
  /// already present.
  void add_term(const Exponent& alpha, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int n_;
  int degree_ = 0;
  std::map<Exponent, Rational> terms_;
};

Polynomial parse_polynomial(int n, std::string_view src);

/// Canonical text in the zero-based x scheme, terms in decreasing
/// lexicographic exponent order; parse_polynomial reads it back exactly.
std::string to_string(const Polynomial& p);

}  // namespace youngflat
