#include "oimc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace oimc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string body = s.substr(pos);
  auto fail = [&] { throw std::invalid_argument("malformed rational '" + s + "'"); };

  mpz_class num, den;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) fail();
    num = mpz_class(p);
    den = mpz_class(q);
    if (den == 0) fail();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) fail();
    num = mpz_class(whole);
    den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!all_digits(body)) fail();
    num = mpz_class(body);
    den = 1;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace oimc
