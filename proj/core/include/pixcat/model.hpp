#pragma once

#include "pixcat/rational.hpp"

namespace pixcat {

// Nonzero-Hom predicate of a hom-thin path model. Encodes the path based
// ideal extensionally: hom(x,y) != 0 in the quotient iff the predicate holds.
// Every variant is factorization-closed and monotone-path compatible.
struct NonzeroPredicate {
  enum class Kind { Free, MaxLength, AuslanderChain };
  Kind kind = Kind::Free;
  Rat max_length;  // MaxLength only; > 0

  static NonzeroPredicate free() { return {Kind::Free, Rat(0)}; }
  static NonzeroPredicate max_len(Rat d) {
    if (d <= 0) throw input_error("max_length bound must be positive");
    return {Kind::MaxLength, std::move(d)};
  }
  static NonzeroPredicate auslander() { return {Kind::AuslanderChain, Rat(0)}; }
};

struct PathModel {
  int dimension = 1;
  NonzeroPredicate predicate;

  PathModel() = default;
  PathModel(int n, NonzeroPredicate p) : dimension(n), predicate(std::move(p)) {
    if (n < 1) throw input_error("model dimension must be >= 1");
    if (predicate.kind == NonzeroPredicate::Kind::MaxLength && n != 1)
      throw input_error("max_length predicate is only defined in dimension 1");
  }

  static PathModel free(int n) { return PathModel(n, NonzeroPredicate::free()); }
  static PathModel max_len(Rat d) { return PathModel(1, NonzeroPredicate::max_len(std::move(d))); }
  static PathModel aus(int n) { return PathModel(n, NonzeroPredicate::auslander()); }
};

inline void check_dim(const PathModel& m, const Point& p) {
  if ((int)p.size() != m.dimension)
    throw input_error("point dimension " + std::to_string(p.size()) +
                      " does not match model dimension " + std::to_string(m.dimension));
}

// Hom(x,y) != 0 in the quotient category.
//   Free          : x <= y coordinatewise
//   MaxLength(d)  : x <= y and y - x < d
//   AuslanderChain: 0 < x1 <= y1 < x2 <= y2 < ... < xn <= yn < 1
inline bool hom_nonzero(const PathModel& m, const Point& x, const Point& y) {
  check_dim(m, x);
  check_dim(m, y);
  const int n = m.dimension;
  switch (m.predicate.kind) {
    case NonzeroPredicate::Kind::Free:
      for (int k = 0; k < n; ++k)
        if (!(x[k] <= y[k])) return false;
      return true;
    case NonzeroPredicate::Kind::MaxLength:
      return x[0] <= y[0] && y[0] - x[0] < m.predicate.max_length;
    case NonzeroPredicate::Kind::AuslanderChain:
      if (!(0 < x[0])) return false;
      for (int k = 0; k < n; ++k) {
        if (!(x[k] <= y[k])) return false;
        if (k + 1 < n && !(y[k] < x[k + 1])) return false;
      }
      return y[n - 1] < 1;
  }
  return false;
}

// x isomorphic to 0 in the quotient. Only the chain ideal kills objects.
inline bool is_zero_object(const PathModel& m, const Point& x) {
  check_dim(m, x);
  if (m.predicate.kind != NonzeroPredicate::Kind::AuslanderChain) return false;
  const int n = m.dimension;
  if (!(0 < x[0])) return true;
  for (int k = 0; k + 1 < n; ++k)
    if (!(x[k] < x[k + 1])) return true;
  return !(x[n - 1] < 1);
}

}  // namespace pixcat
