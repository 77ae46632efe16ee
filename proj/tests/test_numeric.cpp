#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "soflag/laplacian.hpp"
#include "soflag/numeric.hpp"

using namespace soflag;
using namespace soflag::numeric;

namespace {

double trace_power(const Matrix& u, unsigned m) {
  Matrix p = Matrix::Identity(u.rows(), u.cols());
  for (unsigned i = 0; i < m; ++i) p = p * u;
  return p.trace();
}

}  // namespace

TEST_CASE("Haar samples are special orthogonal and reproducible") {
  for (int n = 2; n <= 8; ++n) {
    auto s = random_son(n, 42 + n);
    CHECK_NOTHROW(check_rotation(s.u));
    CHECK(s.u == random_son(n, 42 + n).u);
    CHECK(s.u != random_son(n, 43 + n).u);
  }
  // n = 2: p_1 = 2 cos(theta) with theta read off the matrix
  Matrix u = random_son(2, 9).u;
  CHECK(u.trace() == doctest::Approx(2 * std::cos(std::atan2(u(1, 0), u(0, 0)))));
  CHECK_THROWS_AS(random_son(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_rotation(-Matrix::Identity(3, 3)), std::domain_error);
}

TEST_CASE("Haar mean of p_1 on SO(3) vanishes") {
  double sum = 0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) sum += random_son(3, sample_seed(77, s)).u.trace();
  // p_1 has unit variance under Haar measure, so the mean is within ~0.01
  CHECK(std::abs(sum / samples) < 0.05);
}

TEST_CASE("canonical rotations") {
  double zero[] = {0.0};
  Matrix id = rotation_from_angles(3, zero).u;
  CHECK(id.isApprox(Matrix::Identity(3, 3)));
  double pi[] = {std::numbers::pi};
  Matrix r = rotation_from_angles(3, pi).u;
  CHECK(r.trace() == doctest::Approx(-1));
  CHECK(trace_power(r, 3) == doctest::Approx(-1));
  double ab[] = {std::numbers::pi / 2, std::numbers::pi};
  Matrix r4 = rotation_from_angles(4, ab).u;
  CHECK(r4.trace() == doctest::Approx(-2));
  CHECK(trace_power(r4, 2) == doctest::Approx(0).epsilon(1e-12));
  CHECK_NOTHROW(check_rotation(r4));
  double one[] = {1.0};
  CHECK_THROWS_AS(rotation_from_angles(4, one), std::invalid_argument);
  CHECK_THROWS_AS(rotation_from_angles(5, one), std::invalid_argument);
}

TEST_CASE("structure matrices") {
  std::mt19937 rng(8);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 8; ++n) {
    Matrix a(n, n), b(n, n);
    for (int i = 0; i < n * n; ++i) {
      a.data()[i] = g(rng);
      b.data()[i] = g(rng);
    }
    Matrix k = commutation_matrix(n);
    CHECK((k * vec(a) - vec(a.transpose())).cwiseAbs().maxCoeff() == 0.0);
    CHECK((k * kron(a, b)).trace() == doctest::Approx((a * b).trace()).epsilon(1e-12));
  }
  Matrix u = random_son(4, 3).u;
  auto [k, l] = structure_matrices(u);
  CHECK((l * k - kron(u.transpose(), u)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((k * l - kron(u, u.transpose())).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(lambda_matrix(Matrix::Identity(3, 3)) == commutation_matrix(3));
}

TEST_CASE("Euclidean derivatives of trace monomials") {
  const int n = 3;
  const Matrix id = Matrix::Identity(n, n);
  auto d2 = euclid_derivatives(Partition{2}, id);
  CHECK(d2.hess.isApprox(2 * commutation_matrix(n)));
  auto d1 = euclid_derivatives(Partition{1}, random_son(n, 1).u);
  CHECK(d1.grad.isApprox(id));
  CHECK(d1.hess.cwiseAbs().maxCoeff() == 0.0);
  auto d11 = euclid_derivatives(Partition({1, 1}), random_son(n, 1).u);
  CHECK(d11.hess.isApprox(2 * vec(id) * vec(id).transpose()));

  for (int dim : {2, 4, 6}) {
    Matrix u = random_son(dim, 5).u;
    for (auto& lambda : enumerate_upto(4)) {
      auto d = euclid_derivatives(lambda, u);
      CHECK((d.hess - d.hess.transpose()).cwiseAbs().maxCoeff() < 1e-10);
      double value = 1;
      for (unsigned m : lambda.parts()) value *= trace_power(u, m);
      CHECK(d.value == doctest::Approx(value));
      // gradient against central differences of the value
      const double h = 1e-6;
      for (int b = 0; b < dim * dim; b += 5) {
        Matrix up = u, down = u;
        up.data()[b] += h;
        down.data()[b] -= h;
        double fd = (euclid_derivatives(lambda, up).value - euclid_derivatives(lambda, down).value) / (2 * h);
        CHECK(d.grad.data()[b] == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
      }
    }
  }
}

TEST_CASE("ambient Laplacian formula") {
  Matrix u = random_son(5, 12).u;
  CHECK(lap_numeric(Partition{1}, u) == doctest::Approx(-2 * u.trace()).epsilon(1e-9));
  CHECK(lap_numeric(Partition(), u) == 0.0);
  CHECK(lap_numeric(TracePoly::constant(NPoly(7)), u) == 0.0);
  Matrix u4 = random_son(4, 13).u;
  double symbolic = evaluate(substitute_n(lap_partition(Partition({2, 1})), 4), u4);
  CHECK(lap_numeric(Partition({2, 1}), u4) == doctest::Approx(symbolic).epsilon(1e-8));
  // reduced polynomials are evaluated through their p_1, p_2 monomials
  TracePoly chi = th::S4(2, 0) * NPoly(th::q(1, 2)) - th::S4(0, 1) * NPoly(th::q(1, 2));
  CHECK(lap_numeric(chi, u4) == doctest::Approx(-2 * evaluate(chi, u4)).epsilon(1e-9));
  CHECK_THROWS_AS(evaluate(chi, u), std::invalid_argument);
}

TEST_CASE("sphere Laplacian") {
  const int n = 4;
  Vector x = random_son(n, 2).u.col(0);
  // h = x_1 x_2 is harmonic of degree 2
  Vector grad = Vector::Zero(n);
  grad(0) = x(1);
  grad(1) = x(0);
  Matrix hess = Matrix::Zero(n, n);
  hess(0, 1) = hess(1, 0) = 1;
  CHECK(sphere_lap_numeric(grad, hess, x, 1.0) == doctest::Approx(-2.0 * n * x(0) * x(1)).epsilon(1e-10));
  CHECK(sphere_lap_numeric(Vector::Zero(n), Matrix::Zero(n, n), x, 1.0) == 0.0);
  Vector y = random_son(3, 4).u.col(2);
  Vector e1 = Vector::Unit(3, 0);
  CHECK(sphere_lap_numeric(e1, Matrix::Zero(3, 3), y, 1.0) == doctest::Approx(-2 * y(0)));
  CHECK_THROWS_AS(sphere_lap_numeric(grad, hess, 2 * x, 1.0), std::domain_error);
}

TEST_CASE("Gegenbauer polynomials") {
  auto g0 = gegenbauer(0, 1.5, 0.3);
  CHECK(g0.value == 1.0);
  CHECK(g0.d1 == 0.0);
  CHECK(g0.d2 == 0.0);
  CHECK(gegenbauer(1, 0.5, 0.3).value == doctest::Approx(0.3));
  CHECK(gegenbauer(2, 0.5, 0.3).value == doctest::Approx((3 * 0.09 - 1) / 2));
  for (int n = 3; n <= 7; ++n) {
    const double alpha = (n - 2) / 2.0;
    for (unsigned k = 0; k <= 10; ++k)
      for (double x : {-0.9, -0.2, 0.0, 0.55, 1.0}) {
        auto g = gegenbauer(k, alpha, x);
        double residual = (1 - x * x) * g.d2 - (n - 1) * x * g.d1 + k * (k + n - 2.0) * g.value;
        CHECK(std::abs(residual) <= 1e-9 * std::max(1.0, std::abs(g.value)));
      }
  }
}

TEST_CASE("verification reports") {
  auto r = verify_partition(3, Partition{2}, 50, 1);
  CHECK(r.pass);
  CHECK(r.max_rel_err <= 1e-8);
  CHECK(verify_partition(6, Partition({3, 2}), 50, 2).pass);
  auto empty = verify_partition(4, Partition(), 5, 3);
  CHECK(empty.pass);
  CHECK(empty.max_abs_err == 0.0);
  CHECK(verify_gegenbauer(3, 2, 1, 3, 20, 4).pass);
  CHECK(verify_gegenbauer(5, 1, 2, 4, 20, 4).pass);
  CHECK(verify_gegenbauer(4, 0, 1, 1, 5, 4).max_abs_err == 0.0);
  CHECK_THROWS_AS(verify_gegenbauer(3, 1, 0, 1, 5, 4), std::invalid_argument);
  for (auto& id : verify_identities(3, 3, 5)) {
    CAPTURE(id.target);
    CHECK(id.pass);
  }
}

TEST_CASE("reports do not depend on the thread count") {
  auto one = verify_partition(5, Partition({2, 2, 1}), 16, 99, 1e-8, 1);
  auto four = verify_partition(5, Partition({2, 2, 1}), 16, 99, 1e-8, 4);
  CHECK(one.max_abs_err == four.max_abs_err);
  CHECK(one.max_rel_err == four.max_rel_err);
  auto g1 = verify_gegenbauer(4, 5, 2, 3, 10, 7, 1e-8, 1);
  auto g3 = verify_gegenbauer(4, 5, 2, 3, 10, 7, 1e-8, 3);
  CHECK(g1.max_abs_err == g3.max_abs_err);
}
