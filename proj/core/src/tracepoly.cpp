#include "soflag/tracepoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace soflag {

GroupMode GroupMode::general_at(int n) {
  if (n < 2) throw std::invalid_argument("SO(N) needs N >= 2, got " + std::to_string(n));
  return {GroupTag::GeneralN, n};
}

std::string GroupMode::name() const {
  switch (tag) {
    case GroupTag::SO3: return "so3";
    case GroupTag::SO4: return "so4";
    case GroupTag::GeneralN: break;
  }
  return symbolic() ? "generaln" : "generaln@" + std::to_string(numeric_n);
}

TracePoly TracePoly::constant(const NPoly& c, GroupMode mode) {
  TracePoly t(mode);
  t.add_term(Partition(), c);
  return t;
}

TracePoly TracePoly::monomial(const Partition& p, const NPoly& c, GroupMode mode) {
  TracePoly t(mode);
  t.add_term(p, c);
  return t;
}

TracePoly TracePoly::power_sum(unsigned m, GroupMode mode) {
  if (m == 0) {
    return constant(mode.symbolic() ? NPoly::symbol() : NPoly(mode.numeric_n), mode);
  }
  return monomial(Partition{m}, NPoly(1), mode);
}

TracePoly TracePoly::p1_p2(unsigned l, unsigned m, GroupMode mode) {
  return monomial(concat(Partition::repeated(2, m), Partition::repeated(1, l)), NPoly(1), mode);
}

bool TracePoly::is_numeric() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

unsigned TracePoly::degree() const {
  unsigned d = 0;
  for (auto& [p, c] : terms_) d = std::max(d, p.degree());
  return d;
}

NPoly TracePoly::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? NPoly() : it->second;
}

Rational TracePoly::rational_coefficient(const Partition& p) const { return coefficient(p).constant_value(); }

void TracePoly::add_term(const Partition& p, const NPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TracePoly::require_same_mode(const TracePoly& o) const {
  if (!(mode_ == o.mode_))
    throw std::invalid_argument("trace polynomial mode mismatch: " + mode_.name() + " vs " + o.mode_.name());
}

TracePoly& TracePoly::operator+=(const TracePoly& o) {
  require_same_mode(o);
  for (auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

TracePoly& TracePoly::operator-=(const TracePoly& o) {
  require_same_mode(o);
  for (auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

TracePoly& TracePoly::operator*=(const NPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

TracePoly TracePoly::operator-() const {
  TracePoly r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
  a.require_same_mode(b);
  TracePoly r(a.mode_);
  for (auto& [pa, ca] : a.terms_)
    for (auto& [pb, cb] : b.terms_) r.add_term(concat(pa, pb), ca * cb);
  return r;
}

TracePoly mul(const TracePoly& a, const TracePoly& b) { return a * b; }

TracePoly TracePoly::pow(unsigned e) const {
  TracePoly r = constant(NPoly(1), mode_);
  TracePoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

TracePoly TracePoly::with_mode(GroupMode mode) const {
  TracePoly r = *this;
  r.mode_ = mode;
  return r;
}

namespace {

std::string monomial_name(const Partition& p, GroupMode mode) {
  if (mode.tag == GroupTag::GeneralN) {
    if (p.length() == 1 && p.degree() == 1) return "p_1";
    return "p_{" + p.padded() + "}";
  }
  std::string out;
  unsigned prev = 0, count = 0;
  auto flush = [&] {
    if (!count) return;
    if (!out.empty()) out += " ";
    out += "p_" + std::to_string(prev);
    if (count > 1) out += "^" + std::to_string(count);
  };
  // Reduced modes list p_1 before p_2, as in p_1^2 p_2.
  std::vector<unsigned> parts(p.parts().begin(), p.parts().end());
  std::sort(parts.begin(), parts.end());
  for (unsigned m : parts) {
    if (m != prev) {
      flush();
      prev = m;
      count = 0;
    }
    ++count;
  }
  flush();
  return out;
}

// Appends "c·name" with correct sign handling. Empty name means a bare constant.
void append_term(std::string& out, const NPoly& c, const std::string& name) {
  bool negative_single = c.coefficients().size() == 1 && c.coefficients().begin()->second < 0;
  NPoly mag = negative_single ? -c : c;
  if (out.empty()) {
    if (negative_single) out += "-";
  } else {
    out += negative_single ? " - " : " + ";
  }
  bool unit = mag == NPoly(1);
  if (name.empty()) {
    out += mag.coefficients().size() > 1 ? "(" + mag.to_string() + ")" : mag.to_string();
    return;
  }
  if (!unit) {
    out += mag.coefficients().size() > 1 ? "(" + mag.to_string() + ")" : mag.to_string();
    out += " ";
  }
  out += name;
}

}  // namespace

std::string TracePoly::pretty() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> ordered;
  for (auto& kv : terms_) ordered.push_back(&kv);
  // Highest degree first; within a degree keep the flag (lex-descending) order.
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](auto* a, auto* b) { return a->first.degree() > b->first.degree(); });
  std::string out;
  for (auto* kv : ordered) {
    const auto& [p, c] = *kv;
    if (!p.empty()) {
      append_term(out, c, monomial_name(p, mode_));
      continue;
    }
    if (mode_.symbolic()) {
      if (c.coefficient(0) == 0) {
        append_term(out, c.divide_by_symbol(), "p_0");
      } else {
        append_term(out, c, "");
      }
    } else {
      append_term(out, NPoly(Rational(c.constant_value() / mode_.numeric_n)), "p_0");
    }
  }
  return out;
}

TracePoly substitute_n(const TracePoly& a, int n) {
  if (a.mode().tag != GroupTag::GeneralN) throw std::invalid_argument("substitute_n expects a GeneralN polynomial");
  if (!a.mode().symbolic() && a.mode().numeric_n != n)
    throw std::invalid_argument("polynomial already fixed at N=" + std::to_string(a.mode().numeric_n));
  GroupMode target = GroupMode::general_at(n);
  TracePoly r(target);
  for (auto& [p, c] : a.terms()) r.add_term(p, NPoly(c.eval(Rational(n))));
  return r;
}

namespace {

std::vector<TracePoly> so3_power_sums_upto(unsigned m) {
  const GroupMode mode = GroupMode::so3();
  TracePoly one = TracePoly::constant(NPoly(1), mode);
  TracePoly p1 = TracePoly::monomial(Partition{1}, NPoly(1), mode);
  // x = cos(alpha) = (p_1 - 1)/2
  TracePoly x = (p1 - one) * NPoly(Rational(1, 2));
  std::vector<TracePoly> cheb{one, x};  // T_0, T_1
  for (unsigned i = 2; i <= m; ++i) cheb.push_back(x * cheb[i - 1] * NPoly(2) - cheb[i - 2]);
  std::vector<TracePoly> out;
  out.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) out.push_back(one + cheb[i] * NPoly(2));
  return out;
}

std::vector<TracePoly> so4_power_sums_upto(unsigned m) {
  const GroupMode mode = GroupMode::so4();
  TracePoly p1 = TracePoly::monomial(Partition{1}, NPoly(1), mode);
  TracePoly p2 = TracePoly::monomial(Partition{2}, NPoly(1), mode);
  std::vector<TracePoly> p;
  p.push_back(TracePoly::constant(NPoly(4), mode));
  p.push_back(p1);
  p.push_back(p2);
  p.push_back(p1.pow(3) * NPoly(Rational(-1, 2)) + p1 * p2 * NPoly(Rational(3, 2)) + p1 * NPoly(3));
  // p_{s+1} = p_1 p_s - (p_1^2 - p_2)/2 p_{s-1} + p_1 p_{s-2} - p_{s-3}
  TracePoly e2 = (p1 * p1 - p2) * NPoly(Rational(1, 2));
  for (unsigned s = 3; s + 1 <= m; ++s) {
    p.push_back(p1 * p[s] - e2 * p[s - 1] + p1 * p[s - 2] - p[s - 3]);
  }
  p.resize(std::max<std::size_t>(m + 1, 1), TracePoly(mode));
  return p;
}

}  // namespace

TracePoly so3_pm_in_p1(unsigned m) { return so3_power_sums_upto(m)[m]; }

TracePoly so4_pm_in_p1p2(unsigned m) {
  auto all = so4_power_sums_upto(std::max(m, 3u));
  return all[m];
}

TracePoly reduce(const TracePoly& a, GroupMode mode) {
  if (mode.tag == GroupTag::GeneralN) throw std::invalid_argument("reduce needs an SO3 or SO4 target mode");
  if (a.mode() == mode) {
    // Already reduced keys are fixed points; re-running keeps reduce idempotent.
  } else if (a.mode().tag != GroupTag::GeneralN || a.mode().numeric_n != mode.numeric_n) {
    throw std::invalid_argument("cannot reduce a " + a.mode().name() + " polynomial to " + mode.name() +
                                (a.mode().symbolic() ? " (substitute N first)" : ""));
  }
  unsigned max_part = 0;
  for (auto& [p, c] : a.terms())
    if (!p.empty()) max_part = std::max(max_part, p.parts()[0]);
  std::vector<TracePoly> table = mode.tag == GroupTag::SO3 ? so3_power_sums_upto(max_part)
                                                           : so4_power_sums_upto(std::max(max_part, 3u));
  TracePoly r(mode);
  for (auto& [p, c] : a.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("reduce: coefficient '" + c.to_string() + "' depends on N");
    TracePoly term = TracePoly::constant(c, mode);
    for (unsigned m : p.parts()) term = term * table[m];
    r += term;
  }
  return r;
}

std::vector<Rational> so3_basis_change(const TracePoly& a, So3Basis target, unsigned k) {
  TracePoly r = reduce(a, GroupMode::so3());
  if (r.degree() > k)
    throw std::out_of_range("degree " + std::to_string(r.degree()) + " exceeds basis order " + std::to_string(k));
  // B' coordinates first: coefficient of p_1^j, constant divided by p_0 = 3.
  std::vector<Rational> coeff(k + 1, Rational(0));
  for (auto& [p, c] : r.terms()) coeff[p.degree()] = c.constant_value();
  if (target == So3Basis::PowersOfTrace) {
    coeff[0] /= 3;
    return coeff;
  }
  // Each p_j = f_j(p_1) is monic of degree j, so peel from the top.
  auto table = so3_power_sums_upto(k);
  std::vector<Rational> out(k + 1, Rational(0));
  for (unsigned j = k; j >= 1; --j) {
    Rational lead = coeff[j];
    out[j] = lead;
    if (lead != 0) {
      for (auto& [p, c] : table[j].terms()) coeff[p.degree()] -= lead * c.constant_value();
    }
  }
  out[0] = coeff[0] / 3;
  return out;
}

TracePoly so3_from_coordinates(const std::vector<Rational>& coords, So3Basis basis) {
  const GroupMode mode = GroupMode::so3();
  TracePoly r(mode);
  if (coords.empty()) return r;
  r.add_term(Partition(), NPoly(Rational(coords[0] * 3)));
  if (basis == So3Basis::PowersOfTrace) {
    for (unsigned j = 1; j < coords.size(); ++j) r.add_term(Partition::repeated(1, j), NPoly(coords[j]));
    return r;
  }
  auto table = so3_power_sums_upto(static_cast<unsigned>(coords.size() - 1));
  for (unsigned j = 1; j < coords.size(); ++j) r += table[j] * NPoly(coords[j]);
  return r;
}

}  // namespace soflag
