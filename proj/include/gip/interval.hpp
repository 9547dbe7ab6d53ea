#pragma once

#include "gip/rational.hpp"

namespace gip {

// Closed rational interval. Arithmetic is exact, so "outward rounding" is
// the identity; emptiness is lo > hi.
struct Interval {
  Rational lo;
  Rational hi;

  bool empty() const { return lo > hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

inline Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

inline Interval intersect(const Interval& a, const Interval& b) {
  return {rat_max(a.lo, b.lo), rat_min(a.hi, b.hi)};
}

// Reciprocal of a strictly positive interval.
inline Interval reciprocal_positive(const Interval& a) {
  return {Rational(1) / a.hi, Rational(1) / a.lo};
}

}  // namespace gip
