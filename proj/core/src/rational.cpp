#include "soflag/rational.hpp"

#include <stdexcept>

namespace soflag {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw std::invalid_argument(s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument(s);
      if (digits[0] == '+') digits.erase(0, 1);
      Rational q{mpz_class(digits), mpz_class(den)};
      q.canonicalize();
      return q;
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace soflag
