#include "oimc/interval.hpp"

#include <stdexcept>

namespace oimc {

Interval::Interval(Rational lo, Rational hi, bool lo_open, bool hi_open)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {
  if (lo_.sign() < 0 || hi_ > Rational(1))
    throw std::invalid_argument("interval endpoint outside [0,1]: " + str());
  if (lo_ > hi_ || (lo_ == hi_ && (lo_open_ || hi_open_)))
    throw std::invalid_argument("empty interval: " + str());
}

const Interval& Interval::zero() {
  static const Interval iv(Rational(0), Rational(0), false, false);
  return iv;
}

const Interval& Interval::one() {
  static const Interval iv(Rational(1), Rational(1), false, false);
  return iv;
}

Interval Interval::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed interval '" + std::string(text) + "'");
  };
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail();
  std::string_view s = text.substr(begin, end - begin + 1);
  if (s.size() < 5) fail();
  bool lo_open = s.front() == '(';
  if (!lo_open && s.front() != '[') fail();
  bool hi_open = s.back() == ')';
  if (!hi_open && s.back() != ']') fail();
  std::string_view inner = s.substr(1, s.size() - 2);
  std::size_t comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
    fail();
  auto trim = [](std::string_view v) {
    std::size_t b = v.find_first_not_of(" \t");
    if (b == std::string_view::npos) return std::string_view{};
    std::size_t e = v.find_last_not_of(" \t");
    return v.substr(b, e - b + 1);
  };
  std::string_view lo_text = trim(inner.substr(0, comma));
  std::string_view hi_text = trim(inner.substr(comma + 1));
  if (lo_text.empty() || hi_text.empty()) fail();
  return Interval(Rational::parse(lo_text), Rational::parse(hi_text), lo_open, hi_open);
}

bool Interval::contains(const Rational& v) const {
  if (lo_open_ ? v <= lo_ : v < lo_) return false;
  if (hi_open_ ? v >= hi_ : v > hi_) return false;
  return true;
}

std::string Interval::str() const {
  std::string out;
  out += lo_open_ ? '(' : '[';
  out += lo_.str();
  out += ',';
  out += hi_.str();
  out += hi_open_ ? ')' : ']';
  return out;
}

IntervalClass classify(const Interval& iv) {
  BracketClass bracket;
  if (iv.lo_open()) {
    bracket = iv.hi_open() ? BracketClass::Open : BracketClass::LeftOpenRightClosed;
  } else {
    bracket = iv.hi_open() ? BracketClass::LeftClosedRightOpen : BracketClass::Closed;
  }
  LeftClass left;
  if (iv.lo().sign() > 0) left = LeftClass::Positive;
  else left = iv.lo_open() ? LeftClass::ZeroOpen : LeftClass::ZeroClosed;
  return IntervalClass{bracket, left};
}

bool matches(const Interval& iv, StarClass star) {
  IntervalClass c = classify(iv);
  switch (star) {
    case StarClass::Closed: return c.bracket == BracketClass::Closed;
    case StarClass::LeftOpenRightClosed: return c.bracket == BracketClass::LeftOpenRightClosed;
    case StarClass::LeftClosedRightOpen: return c.bracket == BracketClass::LeftClosedRightOpen;
    case StarClass::Open: return c.bracket == BracketClass::Open;
    case StarClass::PositiveLeft: return c.left == LeftClass::Positive;
    case StarClass::ZeroClosedLeft: return c.left == LeftClass::ZeroClosed;
    case StarClass::ZeroOpenLeft: return c.left == LeftClass::ZeroOpen;
    case StarClass::ZeroLeft: return c.left != LeftClass::Positive;
  }
  return false;
}

}  // namespace oimc
