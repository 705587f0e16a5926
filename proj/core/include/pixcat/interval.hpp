#pragma once

#include "pixcat/rational.hpp"

namespace pixcat {

// Interval of R with exact endpoints and explicit attainment flags.
// Closedness flags are meaningful only for finite endpoints.
struct Interval {
  ExtRat lo = ExtRat::neg_inf();
  bool lo_closed = false;
  ExtRat hi = ExtRat::pos_inf();
  bool hi_closed = false;

  bool bounded() const { return lo.is_finite() && hi.is_finite(); }

  bool contains(const Rat& v) const {
    ExtRat e = ExtRat::finite(v);
    if (e < lo || (e == lo && !lo_closed)) return false;
    if (hi < e || (e == hi && !hi_closed)) return false;
    return true;
  }

  bool subset_of(const Interval& o) const {
    // left end: o.lo must lie weakly left of lo, with attainment respected
    if (lo < o.lo) return false;
    if (lo == o.lo && lo_closed && !o.lo_closed) return false;
    if (o.hi < hi) return false;
    if (hi == o.hi && hi_closed && !o.hi_closed) return false;
    return true;
  }

  bool same_left_end(const Interval& o) const { return lo == o.lo && lo_closed == o.lo_closed; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.lo_closed == b.lo_closed && a.hi == b.hi && a.hi_closed == b.hi_closed;
  }
};

// exists x in I, y in J with x <= y
inline bool exists_leq_pair(const Interval& I, const Interval& J) {
  if (I.lo < J.hi) return true;
  return I.lo == J.hi && I.lo.is_finite() && I.lo_closed && J.hi_closed;
}

// for all x in I and y in J: x < y
inline bool separated_lt(const Interval& I, const Interval& J) {
  if (I.hi < J.lo) return true;
  if (I.hi == J.lo) return !(I.hi.is_finite() && I.hi_closed && J.lo_closed);
  return false;
}

// for all x in I: c < x
inline bool all_above(const Interval& I, const Rat& c) {
  ExtRat e = ExtRat::finite(c);
  if (e < I.lo) return true;
  return e == I.lo && !I.lo_closed;
}

// for all x in I: x < c
inline bool all_below(const Interval& I, const Rat& c) {
  ExtRat e = ExtRat::finite(c);
  if (I.hi < e) return true;
  return I.hi == e && !I.hi_closed;
}

// for all x in I, y in J: y - x < d  (the MaxLength survival bound)
inline bool span_below(const Interval& I, const Interval& J, const Rat& d) {
  if (!I.lo.is_finite() || !J.hi.is_finite()) return false;
  Rat span = J.hi.value - I.lo.value;
  if (span < d) return true;
  return span == d && !(I.lo_closed && J.hi_closed);
}

// exists x <= y, both in I, with y - x >= d (an in-pixel morphism killed by MaxLength(d))
inline bool contains_span_at_least(const Interval& I, const Rat& d) {
  if (!I.lo.is_finite() || !I.hi.is_finite()) return true;
  Rat span = I.hi.value - I.lo.value;
  if (span > d) return true;
  return span == d && I.lo_closed && I.hi_closed;
}

std::string fmt_interval(const Interval& I);

}  // namespace pixcat
