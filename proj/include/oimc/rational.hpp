#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace oimc {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Comparisons and arithmetic never round.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "p/q" and finite decimal expansions such as "0.25".
  // Throws std::invalid_argument on anything else (including q = 0).
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  // Canonical form: "p/q", or just "p" when q = 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class value_;  // kept canonical
};

Rational pow(const Rational& base, unsigned long exponent);

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace oimc
