#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "soflag/characters.hpp"
#include "soflag/flagmatrix.hpp"
#include "soflag/numeric.hpp"
#include "soflag/tracepoly.hpp"

// Exact values are always strings ("p/q"); decimals appear only in CSV next to the exact column.
namespace soflag::io {

using nlohmann::json;

GroupMode parse_mode(const std::string& name);

/// {"<exponent of N>": "p/q", ...}
json to_json(const NPoly& c);
NPoly npoly_from_json(const json& j);

/// [{"partition": [2, 1], "coeff": {"0": "3/2"}}, ...] in flag order.
json to_json(const TracePoly& f);
TracePoly tracepoly_from_json(const json& j, GroupMode mode);

/// {"mode", "basis_id", "k", "basis": [labels], "entries": [[exact strings]]}
json to_json(const FlagMatrix& m);
/// Rebuilds the basis from the header and checks the labels agree.
FlagMatrix matrix_from_json(const json& j);

json to_json(const ExpressionTable& t);
json to_json(const SpectrumEntry& e);
json to_json(const Character& c);
json to_json(const CharacterMatch& m);
json to_json(const numeric::VerificationReport& r);

/// Shortest round-trip decimal of a rational.
std::string decimal(const Rational& q);
/// LaTeX for a rational: 0, -3, -\frac{3}{2}.
std::string latex(const Rational& q);
/// Basis label with multi-digit exponents braced, p_1^{10}.
std::string latex_label(const std::string& label);

/// Header lines starting with '#', then row,col,row_label,col_label,value,exact.
std::string matrix_csv(const FlagMatrix& m);
/// array environment with a column per Delta(basis element) and a row per basis element.
std::string matrix_latex(const FlagMatrix& m);
/// Aligned text table.
std::string matrix_pretty(const FlagMatrix& m);

}  // namespace soflag::io
