#pragma once

#include <string>
#include <string_view>

#include "oimc/rational.hpp"

namespace oimc {

// The four bracket shapes an interval can have.
enum class BracketClass { Closed, LeftOpenRightClosed, LeftClosedRightOpen, Open };

// Position of the left endpoint relative to zero, which is what decides
// whether an edge can be excluded from an assignment's support.
enum class LeftClass {
  Positive,    // lo > 0
  ZeroClosed,  // lo = 0, left-closed: probability exactly 0 is allowed
  ZeroOpen,    // lo = 0, left-open: any positive probability, never 0
};

struct IntervalClass {
  BracketClass bracket;
  LeftClass left;
  friend bool operator==(const IntervalClass&, const IntervalClass&) = default;
};

// Selectors mirroring the edge-class families used by the analyses: the four
// bracket shapes plus the left-endpoint families.
enum class StarClass {
  Closed,
  LeftOpenRightClosed,
  LeftClosedRightOpen,
  Open,
  PositiveLeft,   // lo > 0
  ZeroClosedLeft, // lo = 0 closed
  ZeroOpenLeft,   // lo = 0 open
  ZeroLeft,       // lo = 0, either flag
};

// A nonempty probability interval within [0,1], endpoints exact rationals,
// each endpoint independently open or closed. Empty shapes such as (x,x) or
// (0.5,0.2] are rejected at construction.
class Interval {
public:
  Interval(Rational lo, Rational hi, bool lo_open, bool hi_open);

  static Interval point(const Rational& v) { return Interval(v, v, false, false); }
  static Interval closed(const Rational& lo, const Rational& hi) {
    return Interval(lo, hi, false, false);
  }
  static const Interval& zero();  // [0,0], the "no edge" interval
  static const Interval& one();   // [1,1]

  // Accepts the bracket notation used by the model format: "[0,0.5]",
  // "(0,0.2]", "(1/4,1/2)", ... Throws std::invalid_argument.
  static Interval parse(std::string_view text);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }
  bool left_closed() const { return !lo_open_; }
  bool right_closed() const { return !hi_open_; }

  Rational width() const { return hi_ - lo_; }
  bool is_zero() const { return !lo_open_ && !hi_open_ && lo_.is_zero() && hi_.is_zero(); }

  bool contains(const Rational& v) const;

  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_open_ == b.lo_open_ &&
           a.hi_open_ == b.hi_open_;
  }

private:
  Rational lo_, hi_;
  bool lo_open_, hi_open_;
};

// Every valid interval falls in exactly one bracket class and one left class.
IntervalClass classify(const Interval& iv);

bool matches(const Interval& iv, StarClass star);

}  // namespace oimc
