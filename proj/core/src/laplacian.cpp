#include "soflag/laplacian.hpp"

#include <stdexcept>

namespace soflag {

namespace {

const GroupMode kGeneral = GroupMode::general();

TracePoly p(unsigned m) { return TracePoly::power_sum(m, kGeneral); }

TracePoly p1_pow(unsigned q) { return TracePoly::monomial(Partition::repeated(1, q), NPoly(1), kGeneral); }

TracePoly product_of(const Partition& lambda) { return TracePoly::monomial(lambda, NPoly(1), kGeneral); }

NPoly q(long num, long den = 1) { return NPoly(make_rational(num, den)); }

const NPoly kN = NPoly::symbol();

}  // namespace

TracePoly lap_pm(unsigned m) {
  if (m == 0) return TracePoly(kGeneral);
  if (m == 1) return p(1) * (NPoly::affine(make_rational(-1, 2), make_rational(1, 2)));
  const long mm = m;
  TracePoly r(kGeneral);
  if (m % 2 == 0) r += p(0) * q(mm, 2);  // m(1 + (-1)^m)/4 p_0
  for (unsigned i = 0; 2 * i <= m - 1; ++i) r += p(m - 2 * i) * q(mm);
  r -= p(m) * (NPoly::affine(make_rational(mm, 2), make_rational(mm, 2)));
  TracePoly pairs(kGeneral);
  for (unsigned j = 1; j < m; ++j) pairs += p(j) * p(m - j);
  r -= pairs * q(mm, 2);
  return r;
}

TracePoly lap_p1_pow(unsigned qq) {
  if (qq == 0) return TracePoly(kGeneral);
  if (qq == 1) return lap_pm(1);
  const long qn = qq;
  // -1/2 ((N-1) q p_1^q + q(q-1)(p_2 - N) p_1^{q-2})
  TracePoly r = p1_pow(qq) * (NPoly::affine(make_rational(qn), make_rational(-qn)));
  r += (p(2) - TracePoly::constant(kN, kGeneral)) * p1_pow(qq - 2) * q(qn * (qn - 1));
  return r * q(-1, 2);
}

TracePoly grad_inner_pm(unsigned m, unsigned m_prime) {
  if (m < m_prime) std::swap(m, m_prime);
  if (m_prime == 0) return TracePoly(kGeneral);
  return (p(m - m_prime) - p(m + m_prime)) * q(static_cast<long>(m) * m_prime, 2);
}

namespace {

// Parts >= 2 only.
TracePoly lap_no_ones(const Partition& lambda) {
  auto parts = lambda.parts();
  TracePoly r(kGeneral);
  for (std::size_t i = 0; i < parts.size(); ++i) r += product_of(lambda.without(i)) * lap_pm(parts[i]);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      Partition rest = lambda.without(j).without(i);
      // 2 <grad p_a, grad p_b> = a b (p_{a-b} - p_{a+b})
      r += product_of(rest) * grad_inner_pm(parts[i], parts[j]) * q(2);
    }
  }
  return r;
}

}  // namespace

TracePoly lap_partition(const Partition& lambda) {
  const unsigned ones = lambda.multiplicity(1);
  std::vector<unsigned> big;
  for (unsigned m : lambda.parts())
    if (m >= 2) big.push_back(m);
  const Partition head(big);

  if (ones == 0) return lap_no_ones(head);
  if (head.empty()) return lap_p1_pow(ones);

  // Mixed case: p_lambda = p_head * p_1^t.
  TracePoly r = lap_no_ones(head) * p1_pow(ones);
  r += product_of(head) * lap_p1_pow(ones);
  const long t = ones;
  auto parts = head.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    TracePoly cross = product_of(head.without(i)) * p1_pow(ones - 1) * (p(parts[i] - 1) - p(parts[i] + 1));
    r += cross * q(t * parts[i]);
  }
  return r;
}

TracePoly lap_partition_product_rule(const Partition& lambda) {
  auto parts = lambda.parts();
  TracePoly r(kGeneral);
  for (std::size_t i = 0; i < parts.size(); ++i) r += product_of(lambda.without(i)) * lap_pm(parts[i]);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      r += product_of(lambda.without(j).without(i)) * grad_inner_pm(parts[i], parts[j]) * q(2);
  return r;
}

TracePoly lap(const TracePoly& a, GroupMode mode) {
  if (!(a.mode() == mode)) throw std::invalid_argument("lap: mode mismatch " + a.mode().name() + " vs " + mode.name());
  TracePoly general(kGeneral);
  for (auto& [lambda, c] : a.terms()) general += lap_partition(lambda) * c;
  if (mode.symbolic()) return general;
  TracePoly fixed = substitute_n(general, mode.numeric_n);
  if (mode.tag == GroupTag::GeneralN) return fixed;
  return reduce(fixed, mode);
}

TracePoly lap_so3_closed(const TracePoly& a) {
  if (!(a.mode() == GroupMode::so3())) throw std::invalid_argument("lap_so3_closed expects an SO3 polynomial");
  const GroupMode mode = GroupMode::so3();
  TracePoly r(mode);
  for (auto& [lambda, c] : a.terms()) {
    const long j = lambda.degree();
    if (j == 0) continue;
    // -j(j+1)/2 p_1^j + j(j-1) p_1^{j-1} + 3/2 j(j-1) p_1^{j-2}
    TracePoly term(mode);
    term.add_term(Partition::repeated(1, j), q(-j * (j + 1), 2));
    if (j >= 2) {
      term.add_term(Partition::repeated(1, j - 1), q(j * (j - 1)));
      term.add_term(Partition::repeated(1, j - 2), q(3 * j * (j - 1), 2));
    }
    r += term * c;
  }
  return r;
}

TracePoly lap_so3_pm_closed(unsigned m) {
  const GroupMode mode = GroupMode::general_at(3);
  TracePoly r(mode);
  if (m == 0) return r;
  const long mm = m;
  r += TracePoly::power_sum(0, mode) * q(mm * (mm - 1), 2);
  for (unsigned j = 1; j < m; ++j) r -= TracePoly::power_sum(j, mode) * q(mm);
  r -= TracePoly::power_sum(m, mode) * q(mm * (mm + 1), 2);
  return r;
}

TracePoly lap_so4_closed(const TracePoly& a) {
  const GroupMode mode = GroupMode::so4();
  if (!(a.mode() == mode)) throw std::invalid_argument("lap_so4_closed expects an SO4 polynomial");
  TracePoly p1 = TracePoly::power_sum(1, mode);
  TracePoly p2 = TracePoly::power_sum(2, mode);
  TracePoly four = TracePoly::constant(NPoly(4), mode);
  TracePoly r(mode);
  for (auto& [lambda, c] : a.terms()) {
    const long l = lambda.multiplicity(1);
    const long m = lambda.multiplicity(2);
    if (lambda.length() != static_cast<std::size_t>(l + m))
      throw std::invalid_argument("lap_so4_closed: key " + lambda.to_string() + " is not of the form p_1^l p_2^m");
    TracePoly term(mode);
    if (m >= 2) {
      TracePoly f = p1 * p1 - four;
      term += TracePoly::p1_p2(l, m - 2, mode) * f * f * q(m * (m - 1));
    }
    if (m >= 1) {
      TracePoly g = p1 * p1 * q(l - 2 * m + 1) - TracePoly::constant(q(4 * l - 4), mode);
      term += TracePoly::p1_p2(l, m - 1, mode) * g * q(m);
    }
    if (l >= 2) term -= TracePoly::p1_p2(l - 2, m, mode) * (p2 - four) * q(l * (l - 1), 2);
    term -= TracePoly::p1_p2(l, m, mode) * q(6 * m * l + 2 * m * m + 3 * l + 4 * m, 2);
    r += term * c;
  }
  return r;
}

}  // namespace soflag
