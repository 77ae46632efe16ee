#include <doctest.h>

#include "helpers.hpp"
#include "soflag/laplacian.hpp"
#include "soflag/numeric.hpp"
#include "worked_list.hpp"

using namespace soflag;
using th::N;
using th::P;
using th::q;

TEST_CASE("worked list for degrees 0 to 4") {
  for (auto& [f, expected] : th::worked_list()) {
    CAPTURE(f.pretty());
    CHECK(lap(f, GroupMode::general()) == expected);
  }
}

TEST_CASE("single power sums") {
  CHECK(lap_pm(1) == P("1") * NPoly::affine(q(-1, 2), q(1, 2)));
  // Delta p_2 = p_0 + 2 p_2 - (N+1) p_2 - p_1^2
  CHECK(lap_pm(2) == th::p0() + P("2") * NPoly(2) - P("2") * (N + 1) - P("1,1"));
  CHECK(lap_pm(0).is_zero());
  CHECK(lap_p1_pow(0).is_zero());
  CHECK(lap_p1_pow(1) == lap_pm(1));
  // -1/2((N-1) q p_1^q + q(q-1)(p_2 - N) p_1^{q-2}) at q = 3
  CHECK(lap_p1_pow(3) == P("1,1,1") * NPoly::affine(q(-3, 2), q(3, 2)) - P("2,1") * NPoly(3) + P("1") * (N * 3));
}

TEST_CASE("gradient inner products") {
  CHECK(grad_inner_pm(2, 1) == P("1") - P("3"));
  CHECK(grad_inner_pm(3, 3) == (th::p0() - P("6")) * NPoly(q(9, 2)));
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned mp = 1; mp <= 5; ++mp) CHECK(grad_inner_pm(m, mp) == grad_inner_pm(mp, m));
}

TEST_CASE("case split agrees with the plain product rule") {
  for (auto& lambda : enumerate_upto(7)) {
    CAPTURE(lambda.to_string());
    CHECK(lap_partition(lambda) == lap_partition_product_rule(lambda));
    CHECK(lap_partition(lambda).degree() <= lambda.degree());
  }
  for (unsigned q = 0; q <= 8; ++q) CHECK(lap_p1_pow(q) == lap_partition(Partition::repeated(1, q)));
}

TEST_CASE("lap is linear") {
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    TracePoly a = th::random_poly(rng, 4, 4), b = th::random_poly(rng, 4, 4);
    CHECK(lap(a + b, GroupMode::general()) == lap(a, GroupMode::general()) + lap(b, GroupMode::general()));
    CHECK(lap(a * NPoly(3), GroupMode::general()) == lap(a, GroupMode::general()) * NPoly(3));
  }
  CHECK(substitute_n(lap(P("2,1"), GroupMode::general()), 5) == lap(substitute_n(P("2,1"), 5), GroupMode::general_at(5)));
}

TEST_CASE("SO(3) closed forms agree with the general route") {
  const auto so3 = GroupMode::so3();
  for (unsigned j = 0; j <= 12; ++j) {
    CAPTURE(j);
    TracePoly f = th::S3(j);
    TracePoly expected = f * NPoly(q(-static_cast<long>(j * (j + 1)), 2));
    if (j >= 2) {
      expected += th::S3(j - 1) * NPoly(q(j * (j - 1)));
      expected += th::S3(j - 2) * NPoly(q(3 * j * (j - 1), 2));
    }
    CHECK(lap_so3_closed(f) == expected);
    CHECK(lap(f, so3) == expected);
  }
  const auto at3 = GroupMode::general_at(3);
  for (unsigned m = 2; m <= 12; ++m) {
    CAPTURE(m);
    TracePoly expected = TracePoly::power_sum(0, at3) * NPoly(q(m * (m - 1), 2)) -
                         TracePoly::power_sum(m, at3) * NPoly(q(m * (m + 1), 2));
    for (unsigned j = 1; j < m; ++j) expected -= TracePoly::power_sum(j, at3) * NPoly(q(m));
    CHECK(lap_so3_pm_closed(m) == expected);
    CHECK(reduce(expected, so3) == lap(so3_pm_in_p1(m), so3));
  }
}

TEST_CASE("SO(4) closed form agrees with the general route") {
  for (unsigned l = 0; l <= 10; ++l)
    for (unsigned m = 0; l + 2 * m <= 10; ++m) {
      CAPTURE(l);
      CAPTURE(m);
      TracePoly f = th::S4(l, m);
      CHECK(lap_so4_closed(f) == lap(f, GroupMode::so4()));
    }
  // Delta p_1^2 = -3 p_1^2 - p_2 + p_0 on SO(4)
  CHECK(lap(th::S4(2, 0), GroupMode::so4()) ==
        th::S4(2, 0) * NPoly(-3) - th::S4(0, 1) + TracePoly::power_sum(0, GroupMode::so4()));
}

TEST_CASE("symbolic Laplacian evaluated at N = n matches the ambient formula") {
  for (int n : {2, 3, 7}) {
    for (auto& lambda : enumerate_upto(4)) {
      auto u = numeric::random_son(n, 31 * n + lambda.degree()).u;
      double symbolic = numeric::evaluate(substitute_n(lap_partition(lambda), n), u);
      CHECK(numeric::lap_numeric(lambda, u) == doctest::Approx(symbolic).epsilon(1e-9));
    }
  }
}
