#include "soflag/numeric.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "soflag/laplacian.hpp"

namespace soflag::numeric {

void check_rotation(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) throw std::domain_error("rotation must be square");
  double orth = (u.transpose() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  double det = u.determinant();
  if (orth > tol || std::abs(det - 1.0) > tol)
    throw std::domain_error("not in SO(n): |U^T U - I| = " + std::to_string(orth) + ", det = " + std::to_string(det));
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RotationSample random_son(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_son needs n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix z(n, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) z(r, c) = gauss(rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    if (r.diagonal().cwiseAbs().minCoeff() < 1e-10) continue;
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    // Q diag(sign(R_ii)) is Haar on O(n).
    for (int c = 0; c < n; ++c)
      if (r(c, c) < 0) q.col(c) *= -1.0;
    if (q.determinant() < 0) q.col(n - 1) *= -1.0;
    return {n, q, "haar seed=" + std::to_string(seed)};
  }
  throw std::runtime_error("random_son: degenerate Gaussian draws for seed " + std::to_string(seed));
}

RotationSample rotation_from_angles(int n, std::span<const double> angles) {
  auto plane = [](Matrix& u, int at, double a) {
    u(at, at) = std::cos(a);
    u(at, at + 1) = -std::sin(a);
    u(at + 1, at) = std::sin(a);
    u(at + 1, at + 1) = std::cos(a);
  };
  Matrix u = Matrix::Identity(n, n);
  if (n == 3 && angles.size() == 1) {
    plane(u, 0, angles[0]);
  } else if (n == 4 && angles.size() == 2) {
    plane(u, 0, angles[0]);
    plane(u, 2, angles[1]);
  } else {
    throw std::invalid_argument("rotation_from_angles takes one angle for n=3 and two for n=4");
  }
  std::string prov = "angles";
  for (double a : angles) prov += " " + std::to_string(a);
  return {n, u, prov};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector vec(const Matrix& a) { return Eigen::Map<const Vector>(a.data(), a.size()); }

Matrix commutation_matrix(int n) {
  Matrix k = Matrix::Zero(n * n, n * n);
  // Block (i, j) is J_{ji}: a single 1 at (j, i) inside the block.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i * n + j, j * n + i) = 1.0;
  return k;
}

Matrix lambda_matrix(const Matrix& u) {
  const Eigen::Index n = u.rows();
  Matrix l(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) l.block(i * n, j * n, n, n) = u.col(j) * u.col(i).transpose();
  return l;
}

StructureMatrices structure_matrices(const Matrix& u) {
  return {commutation_matrix(static_cast<int>(u.rows())), lambda_matrix(u)};
}

namespace {

std::vector<Matrix> powers(const Matrix& u, unsigned upto) {
  std::vector<Matrix> p{Matrix::Identity(u.rows(), u.cols())};
  for (unsigned i = 1; i <= upto; ++i) p.push_back(p.back() * u);
  return p;
}

}  // namespace

DerivativeBundle euclid_derivatives(const Partition& lambda, const Matrix& u) {
  const int n = static_cast<int>(u.rows());
  const unsigned top = lambda.empty() ? 1 : lambda.parts()[0];
  auto up = powers(u, top);
  std::vector<Matrix> upt;
  for (auto& m : up) upt.push_back(m.transpose());
  const Matrix k = commutation_matrix(n);

  auto parts = lambda.parts();
  const std::size_t s = parts.size();
  std::vector<double> value(s);
  std::vector<Matrix> grad(s);
  std::vector<Matrix> hess(s);
  for (std::size_t i = 0; i < s; ++i) {
    const unsigned m = parts[i];
    value[i] = up[m].trace();
    grad[i] = m * upt[m - 1];  // grad p_m = m (U^T)^{m-1}
    Matrix h = Matrix::Zero(n * n, n * n);
    if (m >= 2) {
      Matrix sum = Matrix::Zero(n * n, n * n);
      for (unsigned r = 0; r + 2 <= m; ++r) sum += kron(upt[r], up[m - r - 2]);
      h = m * (k * sum);
    }
    hess[i] = std::move(h);
  }
  auto product_except = [&](std::size_t a, std::size_t b) {
    double p = 1.0;
    for (std::size_t i = 0; i < s; ++i)
      if (i != a && i != b) p *= value[i];
    return p;
  };

  DerivativeBundle out;
  out.value = product_except(s, s);
  out.grad = Matrix::Zero(n, n);
  out.hess = Matrix::Zero(n * n, n * n);
  for (std::size_t i = 0; i < s; ++i) {
    double rest = product_except(i, s);
    out.grad += rest * grad[i];
    out.hess += rest * hess[i];
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      out.hess += product_except(i, j) * (vec(grad[i]) * vec(grad[j]).transpose());
    }
  }
  return out;
}

double lap_numeric(const DerivativeBundle& f, const Matrix& u) {
  const double n = static_cast<double>(u.rows());
  const Matrix l = lambda_matrix(u);
  return 0.5 * f.hess.trace() - 0.5 * (n - 1.0) * (u.transpose() * f.grad).trace() - 0.5 * (l * f.hess).trace();
}

double lap_numeric(const Partition& lambda, const Matrix& u) {
  if (lambda.empty()) return 0.0;
  return lap_numeric(euclid_derivatives(lambda, u), u);
}

namespace {

void check_mode_dimension(const TracePoly& f, const Matrix& u) {
  const int n = f.mode().numeric_n;
  if (n != 0 && n != u.rows())
    throw std::invalid_argument("polynomial fixed at N=" + std::to_string(n) + " evaluated on a " +
                                std::to_string(u.rows()) + "x" + std::to_string(u.rows()) + " matrix");
}

}  // namespace

double lap_numeric(const TracePoly& f, const Matrix& u) {
  check_mode_dimension(f, u);
  const double n = static_cast<double>(u.rows());
  double acc = 0.0;
  for (auto& [lambda, c] : f.terms())
    if (!lambda.empty()) acc += c.eval(n) * lap_numeric(lambda, u);
  return acc;
}

double evaluate(const TracePoly& f, const Matrix& u) {
  check_mode_dimension(f, u);
  const double n = static_cast<double>(u.rows());
  unsigned top = 0;
  for (auto& [lambda, c] : f.terms())
    if (!lambda.empty()) top = std::max(top, lambda.parts()[0]);
  auto up = powers(u, top);
  std::vector<double> tr;
  for (auto& m : up) tr.push_back(m.trace());
  double acc = 0.0;
  for (auto& [lambda, c] : f.terms()) {
    double term = c.eval(n);
    for (unsigned m : lambda.parts()) term *= tr[m];
    acc += term;
  }
  return acc;
}

Matrix tangential_gradient(const Matrix& euclid_grad, const Matrix& u) {
  return 0.5 * (euclid_grad - u * euclid_grad.transpose() * u);
}

double sphere_lap_numeric(const Vector& grad, const Matrix& hess, const Vector& x, double radius) {
  if (std::abs(x.norm() - radius) > 1e-10)
    throw std::domain_error("point is not on the sphere of radius " + std::to_string(radius));
  const double n = static_cast<double>(x.size());
  const double r2 = radius * radius;
  return hess.trace() - (x * x.transpose() * hess).trace() / r2 - (n - 1.0) / r2 * x.dot(grad);
}

GegenbauerValue gegenbauer(unsigned k, double alpha, double x) {
  GegenbauerValue prev{1.0, 0.0, 0.0};
  if (k == 0) return prev;
  GegenbauerValue cur{2.0 * alpha * x, 2.0 * alpha, 0.0};
  for (unsigned i = 2; i <= k; ++i) {
    const double a = 2.0 * (i + alpha - 1.0);
    const double b = i + 2.0 * alpha - 2.0;
    GegenbauerValue next{(a * x * cur.value - b * prev.value) / i, (a * (cur.value + x * cur.d1) - b * prev.d1) / i,
                         (a * (2.0 * cur.d1 + x * cur.d2) - b * prev.d2) / i};
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

struct SampleError {
  double abs_err = 0.0;
  double rel_err = 0.0;
};

// Evaluates every sample, split over `threads` workers; the reduction runs in index order.
VerificationReport run_samples(VerificationReport report, unsigned threads,
                               const std::function<SampleError(std::uint64_t)>& one) {
  std::vector<SampleError> errors(report.samples);
  threads = std::max(1u, std::min(threads, report.samples));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (unsigned s = w; s < report.samples; s += threads) errors[s] = one(sample_seed(report.seed, s));
      });
    }
  }
  for (auto& e : errors) {
    report.max_abs_err = std::max(report.max_abs_err, e.abs_err);
    report.max_rel_err = std::max(report.max_rel_err, e.rel_err);
  }
  report.pass = report.max_rel_err <= report.tol;
  return report;
}

SampleError compare(double numeric, double symbolic) {
  double abs_err = std::abs(numeric - symbolic);
  return {abs_err, abs_err / std::max(1.0, std::abs(symbolic))};
}

}  // namespace

VerificationReport verify_partition(int n, const Partition& lambda, unsigned samples, std::uint64_t seed, double tol,
                                    unsigned threads) {
  VerificationReport report{"laplacian", n, {{"partition", lambda.to_string()}}, samples, seed, tol};
  const TracePoly symbolic = substitute_n(lap_partition(lambda), n);
  return run_samples(report, threads, [&](std::uint64_t s) {
    Matrix u = random_son(n, s).u;
    return compare(lap_numeric(lambda, u), evaluate(symbolic, u));
  });
}

VerificationReport verify_gegenbauer(int n, unsigned k, int i, int j, unsigned samples, std::uint64_t seed,
                                     double tol, unsigned threads) {
  if (n < 3) throw std::invalid_argument("verify_gegenbauer needs n >= 3");
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("entry position outside 1..n");
  VerificationReport report{"gegenbauer", n, {{"k", k}, {"i", i}, {"j", j}}, samples, seed, tol};
  const double alpha = (n - 2) / 2.0;
  const double eigenvalue = -0.5 * k * (k + n - 2.0);
  return run_samples(report, threads, [&](std::uint64_t s) {
    Matrix u = random_son(n, s).u;
    const int r = i - 1, c = j - 1;
    GegenbauerValue g = gegenbauer(k, alpha, u(r, c));
    DerivativeBundle f;
    f.value = g.value;
    f.grad = Matrix::Zero(n, n);
    f.grad(r, c) = g.d1;
    f.hess = Matrix::Zero(n * n, n * n);
    f.hess(r + c * n, r + c * n) = g.d2;
    return compare(lap_numeric(f, u), eigenvalue * g.value);
  });
}

}  // namespace soflag::numeric

namespace soflag::numeric {

namespace {

double max_abs(const Matrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

SampleError compare(const Matrix& numeric, const Matrix& symbolic) {
  double abs_err = max_abs(numeric - symbolic);
  return {abs_err, abs_err / std::max(1.0, max_abs(symbolic))};
}

SampleError worse(SampleError a, SampleError b) {
  return {std::max(a.abs_err, b.abs_err), std::max(a.rel_err, b.rel_err)};
}

Matrix gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) a(r, c) = g(rng);
  return a;
}

Matrix mpow(const Matrix& u, unsigned e) {
  Matrix out = Matrix::Identity(u.rows(), u.cols());
  for (unsigned i = 0; i < e; ++i) out = out * u;
  return out;
}

SampleError commutation_trace(int n, std::uint64_t s) {
  std::mt19937_64 rng(s);
  Matrix a = gaussian(n, n, rng), b = gaussian(n, n, rng);
  Matrix lhs(1, 1), rhs(1, 1);
  lhs(0, 0) = (commutation_matrix(n) * kron(a, b)).trace();
  rhs(0, 0) = (a * b).trace();
  return compare(lhs, rhs);
}

SampleError lambda_commutation(int n, std::uint64_t s) {
  Matrix u = random_son(n, s).u;
  auto [k, l] = structure_matrices(u);
  return worse(compare(l * k, kron(u.transpose(), u)), compare(k * l, kron(u, u.transpose())));
}

SampleError hessian_fd(int n, std::uint64_t s) {
  const double h = 1e-5;
  Matrix u = random_son(n, s).u;
  SampleError err;
  for (const Partition& lambda : enumerate_upto(4)) {
    Matrix exact = euclid_derivatives(lambda, u).hess;
    Matrix fd(n * n, n * n);
    for (int b = 0; b < n * n; ++b) {
      Matrix up = u, down = u;
      up.data()[b] += h;
      down.data()[b] -= h;
      fd.col(b) = (vec(euclid_derivatives(lambda, up).grad) - vec(euclid_derivatives(lambda, down).grad)) / (2 * h);
    }
    err = worse(err, compare(fd, exact));
  }
  return err;
}

SampleError tangential_gradient_forms(int n, std::uint64_t s) {
  Matrix u = random_son(n, s).u;
  const Matrix id = Matrix::Identity(n, n);
  const double p1 = u.trace();
  SampleError err;
  for (unsigned q = 0; q <= 5; ++q) {
    Matrix g = tangential_gradient(euclid_derivatives(Partition::repeated(1, q), u).grad, u);
    Matrix closed = (q == 0 ? 0.0 : 0.5 * q * std::pow(p1, q - 1)) * (id - u * u);
    err = worse(err, compare(g, closed));
  }
  for (unsigned m = 1; m <= 5; ++m) {
    Matrix g = tangential_gradient(euclid_derivatives(Partition{m}, u).grad, u);
    Matrix closed = 0.5 * m * (mpow(u.transpose(), m - 1) - mpow(u, m + 1));
    err = worse(err, compare(g, closed));
  }
  return err;
}

SampleError gradient_inner_product(int n, std::uint64_t s) {
  Matrix u = random_son(n, s).u;
  SampleError err;
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned mp = 1; mp <= m; ++mp) {
      Matrix gm = tangential_gradient(euclid_derivatives(Partition{m}, u).grad, u);
      Matrix gmp = tangential_gradient(euclid_derivatives(Partition{mp}, u).grad, u);
      Matrix lhs(1, 1), rhs(1, 1);
      lhs(0, 0) = 2.0 * (gm.transpose() * gmp).trace();
      rhs(0, 0) = double(m) * mp * (mpow(u, m - mp).trace() - mpow(u, m + mp).trace());
      err = worse(err, compare(lhs, rhs));
    }
  return err;
}

// h(x) = a.x + x^T B x + c x_1^3 with seeded coefficients.
SampleError sphere_group(int n, std::uint64_t s) {
  Matrix u = random_son(n, s).u;
  std::mt19937_64 rng(sample_seed(s, 1));
  const Vector a = gaussian(n, 1, rng);
  const Matrix b = gaussian(n, n, rng);
  const double c = gaussian(1, 1, rng)(0, 0);
  const double r = std::sqrt(2.0);
  const Vector x = r * u.col(n - 1);

  Vector grad = a + (b + b.transpose()) * x;
  grad(0) += 3.0 * c * x(0) * x(0);
  Matrix hess = b + b.transpose();
  hess(0, 0) += 6.0 * c * x(0);

  DerivativeBundle f;
  f.value = a.dot(x) + x.dot(b * x) + c * x(0) * x(0) * x(0);
  f.grad = Matrix::Zero(n, n);
  f.grad.col(n - 1) = r * grad;
  f.hess = Matrix::Zero(n * n, n * n);
  f.hess.block((n - 1) * n, (n - 1) * n, n, n) = 2.0 * hess;

  Matrix lhs(1, 1), rhs(1, 1);
  lhs(0, 0) = lap_numeric(f, u);
  rhs(0, 0) = sphere_lap_numeric(grad, hess, x, r);
  return compare(lhs, rhs);
}

}  // namespace

std::vector<VerificationReport> verify_identities(int n, unsigned samples, std::uint64_t seed, double tol) {
  if (n < 2) throw std::invalid_argument("verify_identities needs n >= 2");
  struct Identity {
    const char* name;
    double tol;
    SampleError (*one)(int, std::uint64_t);
  };
  const Identity identities[] = {
      {"commutation_trace", 1e-12, commutation_trace},
      {"lambda_commutation", 1e-12, lambda_commutation},
      {"hessian_fd", 1e-6, hessian_fd},
      {"tangential_gradient", 1e-12, tangential_gradient_forms},
      {"gradient_inner_product", 1e-10, gradient_inner_product},
      {"sphere_group", 1e-9, sphere_group},
  };
  std::vector<VerificationReport> out;
  for (const auto& id : identities) {
    VerificationReport report{id.name, n, nlohmann::json::object(), samples, seed, tol > 0 ? tol : id.tol};
    out.push_back(run_samples(report, 1, [&](std::uint64_t s) { return id.one(n, s); }));
  }
  return out;
}

}  // namespace soflag::numeric
