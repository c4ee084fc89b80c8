#include "dualhopf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dualhopf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(mpq_class(to_mpz(num)));
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(mpq_class(to_mpz(num), d));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return Rational(mpq_class(result));
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

}  // namespace dualhopf
