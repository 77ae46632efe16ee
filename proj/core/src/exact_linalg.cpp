#include "soflag/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace soflag {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  RationalMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(r, k) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += (*this)(r, k) * o(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference size mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool RationalPolynomial::deflate(const Rational& root) {
  if (coeffs_.empty() || eval(root) != 0) return false;
  // Synthetic division by (x - root).
  std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  coeffs_ = std::move(q);
  trim();
  return true;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] < 0 ? " - " : " + ";
    else if (coeffs_[i] < 0) out += "-";
    Rational mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) out += soflag::to_string(mag);
    if (i > 0) out += (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out;
}

RationalPolynomial characteristic_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  if (n == 0) return RationalPolynomial({Rational(1)});
  // Berkowitz: build the Toeplitz-vector product for successive leading principal submatrices.
  // v holds coefficients of det(x I - A_r), highest degree first.
  std::vector<Rational> v{Rational(1), Rational(-a(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Partition A_{r+1} = [[A_r, S], [R, a_rr]].
    std::vector<Rational> col(r);  // S
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    std::vector<Rational> t(r + 2, Rational(0));  // first column of the Toeplitz matrix
    t[0] = 1;
    t[1] = -a(r, r);
    std::vector<Rational> power = col;  // A_r^k S
    for (std::size_t k = 0; k < r; ++k) {
      Rational rs(0);
      for (std::size_t i = 0; i < r; ++i) rs += a(r, i) * power[i];
      t[k + 2] = -rs;
      std::vector<Rational> next(r, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (a(i, j) != 0) next[i] += a(i, j) * power[j];
      power = std::move(next);
    }
    std::vector<Rational> w(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] += t[i - j] * v[j];
    v = std::move(w);
  }
  std::reverse(v.begin(), v.end());
  return RationalPolynomial(std::move(v));
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return rref(m).size();
}

std::vector<Rational> rational_roots(const RationalPolynomial& p, RationalPolynomial* residual) {
  RationalPolynomial work = p;
  std::vector<Rational> roots;
  while (work.degree() >= 1 && work.coefficients()[0] == 0) {
    work.deflate(Rational(0));
    roots.emplace_back(0);
  }
  if (work.degree() >= 1) {
    // Clear denominators to get integer coefficients.
    mpz_class lcm_den = 1;
    for (auto& c : work.coefficients()) lcm_den = lcm(lcm_den, c.get_den());
    mpz_class lead = Rational(work.coefficients().back() * lcm_den).get_num();
    mpz_class tail = Rational(work.coefficients().front() * lcm_den).get_num();
    auto nums = divisors(tail);
    auto dens = divisors(lead);
    std::vector<Rational> candidates;
    for (auto& a : nums)
      for (auto& b : dens) {
        Rational c(a, b);
        c.canonicalize();
        candidates.push_back(c);
        candidates.push_back(-c);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto& c : candidates)
      while (work.degree() >= 1 && work.deflate(c)) roots.push_back(c);
  }
  if (residual) *residual = work;
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace soflag
