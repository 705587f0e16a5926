#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pixcat {

// Exact rational scalar. Always in lowest terms with positive denominator;
// no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on malformed user input (CLI exit code 2).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a paper-backed consistency condition fails inside the library.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

Rat parse_rat(const std::string& s);

// "p/q", or just "p" when q == 1.
std::string fmt_rat(const Rat& r);

inline Rat rat(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

// A rational extended with -inf/+inf; infinities only ever appear as
// interval endpoints, never as point coordinates.
struct ExtRat {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rat value;  // meaningful only when finite

  static ExtRat neg_inf() { return {Kind::NegInf, Rat(0)}; }
  static ExtRat pos_inf() { return {Kind::PosInf, Rat(0)}; }
  static ExtRat finite(Rat v) { return {Kind::Finite, std::move(v)}; }

  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Finite || a.value == b.value;
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.kind == Kind::NegInf) return b.kind != Kind::NegInf;
    if (a.kind == Kind::PosInf) return false;
    if (b.kind == Kind::PosInf) return true;
    if (b.kind == Kind::NegInf) return false;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
};

std::string fmt_ext(const ExtRat& e);

// A point of R^n with exact coordinates.
using Point = std::vector<Rat>;

std::string fmt_point(const Point& p);

}  // namespace pixcat
