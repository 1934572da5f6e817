#include "nadon/algebra/rational.hpp"

#include <cctype>

#include "nadon/errors.hpp"

namespace nadon {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::InvalidConfig, "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorKind::InvalidConfig, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational lcm_of_denominators(const QVector& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_class d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return Rational(l);
}

}  // namespace nadon
