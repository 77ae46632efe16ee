#include "soflag/characters.hpp"

#include <stdexcept>

#include "soflag/laplacian.hpp"

namespace soflag {

namespace {

void verify_eigenfunction(const Character& c) {
  TracePoly lhs = lap(c.poly, c.poly.mode());
  TracePoly rhs = c.poly * NPoly(c.eigenvalue);
  if (!(lhs == rhs))
    throw std::logic_error("character " + c.label.to_string() + " is not an eigenfunction: Delta = " + lhs.pretty());
}

}  // namespace

Character character_so3(unsigned k) {
  const GroupMode so3 = GroupMode::so3();
  const long kk = k;
  Character c;
  c.group = GroupTag::SO3;
  c.label = {{k}};
  c.eigenvalue = make_rational(-kk * (kk + 1), 2);

  // sum_j ( sum_{l=j}^k (-1)^{k-l} C(k+l, 2l) C(l, j) ) p_1^j
  c.poly = TracePoly(so3);
  for (unsigned j = 0; j <= k; ++j) {
    Rational coeff(0);
    for (unsigned l = j; l <= k; ++l) {
      Rational term = binomial(k + l, 2 * l) * binomial(l, j);
      coeff += ((k - l) % 2 == 0) ? term : Rational(-term);
    }
    c.poly.add_term(Partition::repeated(1, j), NPoly(coeff));
  }

  const GroupMode at3 = GroupMode::general_at(3);
  TracePoly trace = TracePoly::power_sum(0, at3) * NPoly(make_rational(1 - kk, 3));
  for (unsigned j = 1; j <= k; ++j) trace += TracePoly::power_sum(j, at3);
  if (!(reduce(trace, so3) == c.poly))
    throw std::logic_error("SO(3) character forms disagree at k=" + std::to_string(k));
  c.trace_form = std::move(trace);

  verify_eigenfunction(c);
  return c;
}

Character character_so4(unsigned k1, unsigned k2) {
  if ((k1 + k2) % 2 != 0)
    throw std::invalid_argument("SO(4) character (j1,j2)=(" + to_string(make_rational(k1, 2)) + "," +
                                to_string(make_rational(k2, 2)) +
                                ") does not factor through SO(4): j1 + j2 must be an integer");
  if (k1 < k2) std::swap(k1, k2);
  const GroupMode so4 = GroupMode::so4();
  Character c;
  c.group = GroupTag::SO4;
  c.label = {{k1, k2}};
  const long a1 = k1, a2 = k2;
  c.eigenvalue = make_rational(-(a1 * (a1 + 2) + a2 * (a2 + 2)), 4);

  if (k1 == 0) {
    // The trivial label is reported as p_0, the first vector of the flag basis.
    c.poly = TracePoly::power_sum(0, so4);
    verify_eigenfunction(c);
    return c;
  }

  TracePoly p1 = TracePoly::power_sum(1, so4);
  TracePoly p2 = TracePoly::power_sum(2, so4);
  TracePoly one = TracePoly::constant(NPoly(1), so4);
  // X = cos((a+b)/2), Y = cos((a-b)/2):  XY = p_1/4, X^2+Y^2 = (p_1^2 - p_2 + 4)/8, X^2 Y^2 = p_1^2/16.
  TracePoly xy = p1 * NPoly(make_rational(1, 4));
  TracePoly s = (p1 * p1 - p2 + one * NPoly(4)) * NPoly(make_rational(1, 8));
  TracePoly t = p1 * p1 * NPoly(make_rational(1, 16));

  // X^{2d} + Y^{2d} by Newton's identity on the roots X^2, Y^2.
  std::vector<TracePoly> power_sums{one * NPoly(2), s};
  auto power_sum_sq = [&](unsigned d) -> const TracePoly& {
    while (power_sums.size() <= d) {
      std::size_t n = power_sums.size();
      power_sums.push_back(s * power_sums[n - 1] - t * power_sums[n - 2]);
    }
    return power_sums[d];
  };
  // A(m, n) = (-1)^n C(m-n, n) 2^{m-2n}
  auto chebyshev_u_coeff = [](unsigned m, unsigned n) {
    Rational v = binomial(m - n, n);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, m - 2 * n);
    v *= pow2;
    return n % 2 ? Rational(-v) : v;
  };

  c.poly = TracePoly(so4);
  for (unsigned qi = 0; 2 * qi <= k1; ++qi) {
    for (unsigned ri = 0; 2 * ri <= k2; ++ri) {
      Rational coeff = chebyshev_u_coeff(k1, qi) * chebyshev_u_coeff(k2, ri);
      unsigned a = k1 - 2 * qi, b = k2 - 2 * ri;
      unsigned lo = std::min(a, b), d = (std::max(a, b) - lo) / 2;
      // X^a Y^b + X^b Y^a = (XY)^min (X^{2d} + Y^{2d})
      c.poly += xy.pow(lo) * power_sum_sq(d) * NPoly(coeff);
    }
  }
  verify_eigenfunction(c);
  return c;
}

Character character_so4(const Rational& j1, const Rational& j2) {
  auto twice = [](const Rational& j) -> unsigned {
    Rational d = j * 2;
    if (d.get_den() != 1 || d < 0)
      throw std::invalid_argument("SO(4) label " + to_string(j) + " is not a non-negative half-integer");
    return static_cast<unsigned>(d.get_num().get_ui());
  };
  return character_so4(twice(j1), twice(j2));
}

std::vector<CharacterMatch> match_characters(const FlagMatrix& m) {
  const GroupTag group = m.basis.mode.tag;
  if (group == GroupTag::GeneralN) throw std::invalid_argument("match_characters needs an SO3 or SO4 flag matrix");
  std::vector<CharacterMatch> out;
  for (auto& entry : eigenvalues_exact(m)) {
    CharacterMatch match;
    match.entry = entry;
    match.eigenspace = eigenspace_exact(m, entry.eigenvalue);
    for (auto& label : entry.labels) {
      unsigned degree = label.params[0];  // k for SO(3), max(k1,k2) for SO(4)
      if (degree > m.basis.k) continue;
      Character c = group == GroupTag::SO3 ? character_so3(label.params[0])
                                           : character_so4(label.params[0], label.params[1]);
      auto coords = coordinates(m.basis, c.poly);
      auto image = m.entries * coords;
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (image[i] != entry.eigenvalue * coords[i])
          throw std::logic_error("character " + label.to_string() + " is not in the eigenspace of " +
                                 to_string(entry.eigenvalue));
      match.characters.push_back(std::move(c));
      match.coordinates.push_back(std::move(coords));
    }
    std::size_t independent = 0;
    if (!match.coordinates.empty()) {
      RationalMatrix stack(match.coordinates.size(), m.basis.size());
      for (std::size_t r = 0; r < match.coordinates.size(); ++r)
        for (std::size_t c = 0; c < m.basis.size(); ++c) stack(r, c) = match.coordinates[r][c];
      independent = rank(stack);
    }
    match.unexplained_multiplicity = entry.geometric_multiplicity > independent;
    out.push_back(std::move(match));
  }
  return out;
}

}  // namespace soflag
