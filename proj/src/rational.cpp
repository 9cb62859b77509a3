#include "w22/rational.hpp"

#include "w22/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace w22 {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (s[0] == '+')
    s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0)
    throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s))
      throw ParseError("not an exact rational: '" + std::string(s) + "'");
    return Rational(mpq_class(to_mpz(s)));
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+')
    throw ParseError("not an exact rational: '" + std::string(s) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1)
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace w22
