#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "soflag/exact_linalg.hpp"
#include "soflag/tracepoly.hpp"

namespace soflag {

enum class BasisId {
  Partitions,        // GeneralN spanning set {p_0} + {p_lambda}
  So3PowersOfTrace,  // B' = {p_0, p_1, ..., p_1^k}
  So3TracesOfPowers, // B'' = {p_0, p_1, ..., p_k}
  So4,               // {p_0} + {p_1^l p_2^m : 0 < l + 2m <= k}
};

/// CLI spelling: partitions, bprime, btrace, so4.
std::string_view basis_id_name(BasisId id);
BasisId parse_basis_id(std::string_view name);

struct BasisElement {
  std::string label;   // "p_0", "p_1^2 p_2", "p_{(2,1,0)}", ...
  unsigned weight = 0; // the flag degree j with element in V_{<=j}
  TracePoly function;  // the element as a polynomial in the basis mode
};

/// Ordered basis of V_{<=k}; weight-j elements precede weight j+1.
struct FlagBasis {
  GroupMode mode;
  BasisId id = BasisId::Partitions;
  unsigned k = 0;
  std::vector<BasisElement> elements;
  /// Index where each weight block starts; block_starts[j] for weight j, plus a final sentinel.
  std::vector<std::size_t> block_starts;

  std::size_t size() const { return elements.size(); }
};

/// Throws std::invalid_argument when id does not belong to mode.
FlagBasis basis_for(GroupMode mode, BasisId id, unsigned k);

/// Exact coordinates of f (already in the basis mode, or GeneralN at the basis N)
/// in a numeric basis. Throws std::runtime_error if f leaves the span.
std::vector<Rational> coordinates(const FlagBasis& basis, const TracePoly& f);

/// Matrix of the Laplacian on V_{<=k}; column j holds the coordinates of Delta(basis[j]).
struct FlagMatrix {
  FlagBasis basis;
  RationalMatrix entries;

  /// Row/column span of the weight-j diagonal block.
  std::pair<std::size_t, std::size_t> block_range(unsigned weight) const;
  RationalMatrix diagonal_block(unsigned weight) const;
};

/// Assembles the matrix through the general symbolic formulas followed by reduction.
/// The mode must be numeric (SO3, SO4, or GeneralN at a fixed N).
/// Throws std::logic_error if the result is not upper block triangular.
FlagMatrix build_matrix(GroupMode mode, BasisId id, unsigned k);

/// Same matrix from the SO(3)/SO(4) closed-form Laplacians, for cross-checking.
FlagMatrix build_matrix_closed(GroupMode mode, BasisId id, unsigned k);

/// GeneralN with symbolic N: column j lists Delta(generator j) over the spanning set.
struct ExpressionTable {
  FlagBasis basis;
  std::vector<std::vector<NPoly>> columns;
};
ExpressionTable build_expression_table(unsigned k);

/// Eigenvalue label: {k} for SO(3) and spheres, {k1, k2} with k1 >= k2 for SO(4).
struct SpectrumLabel {
  std::vector<unsigned> params;
  std::string to_string() const;
  friend bool operator==(const SpectrumLabel&, const SpectrumLabel&) = default;
};

struct SpectrumEntry {
  Rational eigenvalue;
  std::vector<SpectrumLabel> labels;
  std::size_t algebraic_multiplicity = 0;  // in the flag matrix; 0 for closed-form lists
  std::size_t geometric_multiplicity = 0;  // dim ker(M - lambda I); 0 for closed-form lists
};

enum class SpectrumKind { Sphere, SO3, SO4 };

struct SpectrumTarget {
  SpectrumKind kind = SpectrumKind::SO3;
  int n = 3;  // sphere S^{n-1}; ignored for the groups
};

/// Closed-form spectra. The bound limits k (sphere, SO(3)) or max(k1, k2) (SO(4)),
/// i.e. the flag degree of the matching eigenfunction.
std::vector<SpectrumEntry> spectrum_closed(SpectrumTarget target, unsigned bound);

/// Exact eigenvalues from the diagonal blocks, in block order (descending inside a block).
/// Only SO3/SO4 matrices are accepted. Throws std::runtime_error if a block's
/// characteristic polynomial does not split over the rationals.
std::vector<SpectrumEntry> eigenvalues_exact(const FlagMatrix& m);

/// Basis of ker(M - lambda I), each vector scaled so its first nonzero coordinate is 1.
std::vector<std::vector<Rational>> eigenspace_exact(const FlagMatrix& m, const Rational& lambda);

}  // namespace soflag
