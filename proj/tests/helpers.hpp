#pragma once

#include <random>
#include <string>

#include "soflag/npoly.hpp"
#include "soflag/partitions.hpp"
#include "soflag/rational.hpp"
#include "soflag/tracepoly.hpp"

namespace th {

using namespace soflag;

inline Rational q(long num, long den = 1) { return make_rational(num, den); }
inline const NPoly N = NPoly::symbol();

/// Symbolic-N monomial p_lambda from "2,1".
inline TracePoly P(const char* parts) { return TracePoly::monomial(Partition::parse(parts)); }
inline TracePoly p0() { return TracePoly::power_sum(0); }

/// p_1^l p_2^m in a reduced mode.
inline TracePoly S4(unsigned l, unsigned m) { return TracePoly::p1_p2(l, m, GroupMode::so4()); }
inline TracePoly S3(unsigned j) { return TracePoly::p1_p2(j, 0, GroupMode::so3()); }
inline TracePoly constant(const Rational& c, GroupMode mode) { return TracePoly::constant(NPoly(c), mode); }

/// Random symbolic-N trace polynomial of degree <= max_degree with small integer coefficients.
inline TracePoly random_poly(std::mt19937& rng, unsigned max_degree, unsigned terms) {
  auto parts = enumerate_upto(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  TracePoly f;
  for (unsigned t = 0; t < terms; ++t)
    f.add_term(parts[pick(rng)], NPoly::affine(coef(rng), make_rational(coef(rng), 1 + (t % 3))));
  return f;
}

}  // namespace th
