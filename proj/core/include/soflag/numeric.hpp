#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "soflag/partitions.hpp"
#include "soflag/tracepoly.hpp"

/// Floating-point oracle: ambient-space formulas for the Laplacians of SO(N)
/// and of spheres, evaluated on concrete matrices.
///
/// All N^2 x N^2 objects use column-major vectorization: entry (a, i) of an
/// N x N matrix sits at index a + i*N, and Hessian block (i, j) holds the
/// second derivatives with respect to columns i and j.
namespace soflag::numeric {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct RotationSample {
  int n = 0;
  Matrix u;
  std::string provenance;
};

/// Throws std::domain_error unless |U^T U - I|_max <= tol and |det U - 1| <= tol.
void check_rotation(const Matrix& u, double tol = 1e-12);

/// Haar-distributed element of SO(n), deterministic in (n, seed).
RotationSample random_son(int n, std::uint64_t seed);

/// Block-diagonal rotation: angle alpha for n = 3 (eigenvalues 1, e^{+-i alpha}),
/// angles (alpha, beta) for n = 4.
RotationSample rotation_from_angles(int n, std::span<const double> angles);

/// Seed of the i-th sample in a run started from `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

Matrix kron(const Matrix& a, const Matrix& b);
Vector vec(const Matrix& a);

/// K with K vec(A) = vec(A^T); block (i, j) is the single-entry matrix J_{ji}.
Matrix commutation_matrix(int n);
/// Block (i, j) is u_j u_i^T.
Matrix lambda_matrix(const Matrix& u);

struct StructureMatrices {
  Matrix commutation;
  Matrix lambda;
};
StructureMatrices structure_matrices(const Matrix& u);

struct DerivativeBundle {
  double value = 0.0;
  Matrix grad;  // N x N, matrix form
  Matrix hess;  // N^2 x N^2
};

/// Euclidean value, gradient and Hessian of p_lambda at U (product rule over the factors).
DerivativeBundle euclid_derivatives(const Partition& lambda, const Matrix& u);

/// Delta_SO(N) f = 1/2 Delta f - (N-1)/2 tr(U^T grad f) - 1/2 tr(Lambda(U) Hess f).
double lap_numeric(const DerivativeBundle& f, const Matrix& u);
double lap_numeric(const Partition& lambda, const Matrix& u);
/// Linear extension; N-dependent coefficients are evaluated at N = rows(U).
double lap_numeric(const TracePoly& f, const Matrix& u);

/// Value of a trace polynomial at U.
double evaluate(const TracePoly& f, const Matrix& u);

/// Tangential gradient on SO(N): (grad h - U (grad h)^T U) / 2.
Matrix tangential_gradient(const Matrix& euclid_grad, const Matrix& u);

/// Laplacian on the sphere of radius R from an ambient prolongation's gradient and
/// Hessian at x. Throws std::domain_error if |x| differs from R by more than 1e-10.
double sphere_lap_numeric(const Vector& grad, const Matrix& hess, const Vector& x, double radius);

struct GegenbauerValue {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// C_k^{(alpha)}(x) and its first two derivatives by the three-term recurrence.
GegenbauerValue gegenbauer(unsigned k, double alpha, double x);

struct VerificationReport {
  std::string target;
  int n = 0;
  nlohmann::json params;
  unsigned samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double max_abs_err = 0.0;
  /// max |numeric - symbolic| / max(1, |symbolic|)
  double max_rel_err = 0.0;
  bool pass = false;
};

/// Compares lap_numeric(p_lambda) with the symbolic Laplacian at N = n on Haar samples.
/// The report does not depend on `threads`.
VerificationReport verify_partition(int n, const Partition& lambda, unsigned samples, std::uint64_t seed,
                                    double tol = 1e-8, unsigned threads = 1);

/// Checks f(U) = C_k^{((n-2)/2)}(u_ij) against eigenvalue -k(k+n-2)/2. i and j are 1-based.
VerificationReport verify_gegenbauer(int n, unsigned k, int i, int j, unsigned samples, std::uint64_t seed,
                                     double tol = 1e-8, unsigned threads = 1);

/// Appendix matrix-calculus identities on Haar samples, one report each:
///   commutation_trace      tr(K (A x B)) = tr(AB)                    1e-12
///   lambda_commutation     Lambda K = U^T x U and K Lambda = U x U^T  1e-12
///   hessian_fd             Hessian vs central differences of the gradient, degree <= 4   1e-6
///   tangential_gradient    closed forms of grad_SO p_1^q and grad_SO p_m                1e-12
///   gradient_inner_product 2<grad_SO p_m, grad_SO p_m'> = m m' (p_{m-m'} - p_{m+m'})    1e-10
///   sphere_group           Delta_SO f = Delta_S h for f(U) = h(sqrt2 u_N)              1e-9
/// A positive `tol` replaces every default.
std::vector<VerificationReport> verify_identities(int n, unsigned samples, std::uint64_t seed, double tol = 0.0);

}  // namespace soflag::numeric
