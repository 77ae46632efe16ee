#pragma once

#include <optional>
#include <vector>

#include "soflag/flagmatrix.hpp"
#include "soflag/tracepoly.hpp"

namespace soflag {

/// An irreducible character written as a trace polynomial.
/// Construction checks Delta(poly) == eigenvalue * poly exactly.
struct Character {
  GroupTag group = GroupTag::SO3;
  SpectrumLabel label;
  Rational eigenvalue;
  TracePoly poly;  // reduced form (SO3 or SO4 mode)
  /// SO(3) only: -(k-1)/3 p_0 + p_1 + ... + p_k as a GeneralN@3 polynomial.
  std::optional<TracePoly> trace_form;
};

/// chi_k of SO(3). `poly` is the p_1-power expansion with double-binomial
/// coefficients; `trace_form` is the sum of p_j. Both are checked equal.
Character character_so3(unsigned k);

/// chi_{j1,j2} of SO(4) from the product of second-kind Chebyshev polynomials,
/// with j1 = k1/2 and j2 = k2/2. Throws std::invalid_argument unless k1 and k2
/// have the same parity. (k1,k2) and (k2,k1) give the same character.
Character character_so4(unsigned k1, unsigned k2);

/// Half-integer overload: j1, j2 in {0, 1/2, 1, ...} with j1 + j2 an integer.
Character character_so4(const Rational& j1, const Rational& j2);

/// Eigenvalue of a flag matrix paired with the characters found inside its eigenspace.
struct CharacterMatch {
  SpectrumEntry entry;
  std::vector<Character> characters;
  /// Coordinates of each matched character in the matrix basis (the reported eigenvectors).
  std::vector<std::vector<Rational>> coordinates;
  /// Eigenspace basis as returned by eigenspace_exact.
  std::vector<std::vector<Rational>> eigenspace;
  /// Geometric multiplicity exceeds the number of independent matched characters.
  bool unexplained_multiplicity = false;
};

/// For every eigenvalue, constructs the characters whose label produces it and
/// whose degree fits the flag order, and checks each lies in the eigenspace.
/// Throws std::logic_error if one does not.
std::vector<CharacterMatch> match_characters(const FlagMatrix& m);

}  // namespace soflag
