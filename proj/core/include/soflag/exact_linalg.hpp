#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "soflag/rational.hpp"

namespace soflag {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Dense univariate polynomial, coefficients[i] multiplies x^i. Trailing zeros trimmed.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational eval(const Rational& x) const;

  /// Divides by (x - root). Returns false and leaves *this untouched when root is not a root.
  bool deflate(const Rational& root);

  std::string to_string() const;
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// det(x I - A) by Berkowitz's division-free algorithm.
RationalPolynomial characteristic_polynomial(const RationalMatrix& a);

/// Basis of ker(A) from the reduced row echelon form; each vector has a 1 at its free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// Rational roots of p (with multiplicity) by the rational-root theorem.
/// Whatever does not split into linear factors is returned in `residual`.
std::vector<Rational> rational_roots(const RationalPolynomial& p, RationalPolynomial* residual = nullptr);

}  // namespace soflag
