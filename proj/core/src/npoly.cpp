#include "soflag/npoly.hpp"

#include <cmath>
#include <stdexcept>

namespace soflag {

NPoly::NPoly(Rational constant) {
  if (constant != 0) coeffs_.emplace(0u, std::move(constant));
}

NPoly NPoly::symbol() {
  NPoly p;
  p.coeffs_.emplace(1u, Rational(1));
  return p;
}

NPoly NPoly::affine(const Rational& slope, const Rational& offset) {
  NPoly p;
  p.add_term(1, slope);
  p.add_term(0, offset);
  return p;
}

NPoly NPoly::from_coefficients(std::map<unsigned, Rational> coeffs) {
  NPoly p;
  for (auto& [e, c] : coeffs) p.add_term(e, c);
  return p;
}

bool NPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational NPoly::coefficient(unsigned e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational NPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("NPoly '" + to_string() + "' depends on N");
  return coefficient(0);
}

unsigned NPoly::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Rational NPoly::eval(const Rational& n) const {
  Rational acc(0);
  unsigned e = degree();
  // Horner from the top exponent down.
  for (unsigned i = e + 1; i-- > 0;) {
    acc = acc * n + coefficient(i);
  }
  return acc;
}

double NPoly::eval(double n) const {
  double acc = 0.0;
  for (auto& [e, c] : coeffs_) acc += c.get_d() * std::pow(n, static_cast<double>(e));
  return acc;
}

NPoly NPoly::divide_by_symbol() const {
  if (coefficient(0) != 0) throw std::domain_error("'" + to_string() + "' is not divisible by N");
  NPoly q;
  for (auto& [e, c] : coeffs_) q.coeffs_.emplace(e - 1, c);
  return q;
}

void NPoly::add_term(unsigned e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

NPoly& NPoly::operator+=(const NPoly& o) {
  for (auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
  for (auto& [e, c] : o.coeffs_) add_term(e, Rational(-c));
  return *this;
}

NPoly& NPoly::operator*=(const NPoly& o) {
  NPoly r;
  for (auto& [ea, ca] : coeffs_)
    for (auto& [eb, cb] : o.coeffs_) r.add_term(ea + eb, Rational(ca * cb));
  coeffs_ = std::move(r.coeffs_);
  return *this;
}

NPoly NPoly::operator-() const {
  NPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e, Rational(-c));
  return r;
}

std::string NPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string var = e == 0 ? "" : (e == 1 ? "N" : "N^" + std::to_string(e));
    if (e == 0) {
      out += soflag::to_string(mag);
    } else if (mag == 1) {
      out += var;
    } else {
      out += soflag::to_string(mag) + "*" + var;
    }
  }
  return out;
}

}  // namespace soflag
