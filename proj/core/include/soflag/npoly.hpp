#pragma once

#include <map>
#include <string>

#include "soflag/rational.hpp"

namespace soflag {

/// Univariate polynomial in the dimension symbol N with rational coefficients.
///
/// Zero coefficients are never stored, so two NPoly values compare equal
/// exactly when they are the same polynomial.
class NPoly {
 public:
  NPoly() = default;
  NPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  NPoly(long constant) : NPoly(Rational(constant)) {}  // NOLINT
  NPoly(int constant) : NPoly(Rational(constant)) {}   // NOLINT

  /// The symbol N itself.
  static NPoly symbol();
  /// slope * N + offset
  static NPoly affine(const Rational& slope, const Rational& offset);
  static NPoly from_coefficients(std::map<unsigned, Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  /// Coefficient of N^e (zero when absent).
  Rational coefficient(unsigned e) const;
  /// Value when the polynomial is constant; throws std::logic_error otherwise.
  Rational constant_value() const;
  unsigned degree() const;
  const std::map<unsigned, Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& n) const;
  double eval(double n) const;

  /// Exact quotient by N; throws std::domain_error if the constant term is nonzero.
  NPoly divide_by_symbol() const;

  NPoly& operator+=(const NPoly& o);
  NPoly& operator-=(const NPoly& o);
  NPoly& operator*=(const NPoly& o);
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(NPoly a, const NPoly& b) { return a *= b; }
  NPoly operator-() const;
  friend bool operator==(const NPoly& a, const NPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest power first, e.g. "-3/2*N + 3/2".
  std::string to_string() const;

 private:
  void add_term(unsigned e, const Rational& c);

  std::map<unsigned, Rational> coeffs_;
};

}  // namespace soflag
