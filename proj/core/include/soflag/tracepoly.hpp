#pragma once

#include <map>
#include <string>
#include <vector>

#include "soflag/npoly.hpp"
#include "soflag/partitions.hpp"
#include "soflag/rational.hpp"

namespace soflag {

enum class GroupTag { GeneralN, SO3, SO4 };

/// Which relations are legal for a TracePoly.
///
/// GeneralN with numeric_n == 0 is the symbolic-N ring; GeneralN with a
/// fixed numeric_n is the same free ring after N has been substituted.
/// SO3/SO4 are the reduced coordinate rings (numeric_n is 3 or 4).
struct GroupMode {
  GroupTag tag = GroupTag::GeneralN;
  int numeric_n = 0;

  static GroupMode general() { return {}; }
  static GroupMode general_at(int n);
  static GroupMode so3() { return {GroupTag::SO3, 3}; }
  static GroupMode so4() { return {GroupTag::SO4, 4}; }

  bool symbolic() const { return numeric_n == 0; }
  std::string name() const;
  friend bool operator==(const GroupMode&, const GroupMode&) = default;
};

/// Finite linear combination of trace monomials p_lambda with NPoly coefficients.
///
/// The empty partition is the constant 1, and p_0 is N times it. In the
/// reduced modes every key uses only parts {1} (SO3) or {1,2} (SO4).
class TracePoly {
 public:
  using Terms = std::map<Partition, NPoly>;

  explicit TracePoly(GroupMode mode = GroupMode::general()) : mode_(mode) {}

  static TracePoly constant(const NPoly& c, GroupMode mode = GroupMode::general());
  static TracePoly monomial(const Partition& p, const NPoly& c = NPoly(1), GroupMode mode = GroupMode::general());
  /// p_m = tr(U^m); p_0 is the constant N (or numeric_n in a fixed mode).
  static TracePoly power_sum(unsigned m, GroupMode mode = GroupMode::general());
  /// p_1^l p_2^m
  static TracePoly p1_p2(unsigned l, unsigned m, GroupMode mode);

  GroupMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no coefficient depends on N.
  bool is_numeric() const;
  /// Largest partition degree present (0 for constants and zero).
  unsigned degree() const;
  NPoly coefficient(const Partition& p) const;
  /// Rational coefficient; throws if it depends on N.
  Rational rational_coefficient(const Partition& p) const;

  void add_term(const Partition& p, const NPoly& c);

  TracePoly& operator+=(const TracePoly& o);
  TracePoly& operator-=(const TracePoly& o);
  TracePoly& operator*=(const NPoly& s);
  friend TracePoly operator+(TracePoly a, const TracePoly& b) { return a += b; }
  friend TracePoly operator-(TracePoly a, const TracePoly& b) { return a -= b; }
  friend TracePoly operator*(TracePoly a, const NPoly& s) { return a *= s; }
  friend TracePoly operator*(const NPoly& s, TracePoly a) { return a *= s; }
  TracePoly operator-() const;
  /// Ring product; throws std::invalid_argument on mode mismatch.
  friend TracePoly operator*(const TracePoly& a, const TracePoly& b);
  friend bool operator==(const TracePoly& a, const TracePoly& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  TracePoly pow(unsigned e) const;
  /// Same terms re-tagged; used when a GeneralN-at-n polynomial is already in reduced form.
  TracePoly with_mode(GroupMode mode) const;

  /// Display notation: p_{(2,1,0)} keys in GeneralN, p_1^2 p_2 products in SO3/SO4;
  /// constants divisible by N are shown as multiples of p_0.
  std::string pretty() const;

 private:
  void require_same_mode(const TracePoly& o) const;

  GroupMode mode_;
  Terms terms_;
};

TracePoly mul(const TracePoly& a, const TracePoly& b);

/// Evaluates every coefficient at N = n. The result is GeneralN at fixed n.
TracePoly substitute_n(const TracePoly& a, int n);

/// p_m on SO(3) as a polynomial in p_1: 1 + 2 T_m((p_1 - 1)/2).
TracePoly so3_pm_in_p1(unsigned m);

/// p_m on SO(4) as a polynomial in p_1, p_2 via the Cayley-Hamilton recurrence.
TracePoly so4_pm_in_p1p2(unsigned m);

/// Rewrites every p_m factor in the target group's generators. Idempotent.
/// Throws std::invalid_argument for symbolic input or mismatched N.
TracePoly reduce(const TracePoly& a, GroupMode mode);

enum class So3Basis { PowersOfTrace, TracesOfPowers };  // B' = {p_0, p_1^j}, B'' = {p_0, p_j}

/// Exact coordinates of an SO(3) function in B'_{<=k} or B''_{<=k}.
/// Constants map to c/3 on p_0. Throws std::out_of_range if deg(a) > k.
std::vector<Rational> so3_basis_change(const TracePoly& a, So3Basis target, unsigned k);

/// Inverse of so3_basis_change; returns an SO3-mode polynomial.
TracePoly so3_from_coordinates(const std::vector<Rational>& coords, So3Basis basis);

}  // namespace soflag
