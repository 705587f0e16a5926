#pragma once

#include "pixcat/interval.hpp"
#include "pixcat/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pixcat {

// One cut point of a 1-D interval partition. owner says which side keeps
// the point itself: Lower puts `at` into the pixel on its left (...,at],
// Upper into the pixel on its right [at,...).
struct Boundary {
  Rat at;
  enum class Owner : std::uint8_t { Lower, Upper } owner = Owner::Upper;

  friend bool operator==(const Boundary& a, const Boundary& b) {
    return a.at == b.at && a.owner == b.owner;
  }
};

// A 1-D interval partition of R given by a finite boundary list. k cuts
// induce k+1 pixels; the first extends to -inf, the last to +inf.
// `at` values are weakly increasing; an equal pair is allowed only as
// (Lower, Upper), which carves out the singleton pixel [at, at].
class ScreenFactor {
 public:
  ScreenFactor() = default;
  explicit ScreenFactor(std::vector<Boundary> cuts);

  const std::vector<Boundary>& boundaries() const { return cuts_; }
  std::size_t pixel_count() const { return cuts_.size() + 1; }

  Interval interval(std::size_t k) const;
  std::size_t locate(const Rat& v) const;

  friend bool operator==(const ScreenFactor& a, const ScreenFactor& b) {
    return a.cuts_ == b.cuts_;
  }

 private:
  std::vector<Boundary> cuts_;
};

// Indices are 0-based per factor, 0 = leftmost (the pixel unbounded below).
using PixelIndex = std::vector<std::size_t>;

std::string fmt_pixel_index(const PixelIndex& ix);

// Product of 1-D interval partitions; pixels are boxes.
class Screen {
 public:
  Screen() = default;
  explicit Screen(std::vector<ScreenFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw input_error("screen needs at least one factor");
  }

  int dimension() const { return (int)factors_.size(); }
  const std::vector<ScreenFactor>& factors() const { return factors_; }
  const ScreenFactor& factor(std::size_t k) const { return factors_[k]; }

  std::vector<Interval> pixel_box(const PixelIndex& ix) const;
  std::size_t total_pixels() const;
  std::vector<PixelIndex> all_pixels() const;
  bool pixel_bounded(const PixelIndex& ix) const;

  friend bool operator==(const Screen& a, const Screen& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<ScreenFactor> factors_;
};

// Membership resolved per Boundary owner flags.
PixelIndex pixel_of(const Screen& s, const Point& p);

// Common refinement, computed factorwise by merging boundary lists. Equal
// cut values with conflicting owners yield both cut variants (a singleton
// pixel in between); never an error.
Screen meet(const Screen& a, const Screen& b);

enum class RefinementKind { NotRefinement, Refinement, FinitaryRefinement };

// With finite boundary lists every refinement is finitary, so this returns
// either NotRefinement or FinitaryRefinement.
RefinementKind refinement_relation(const Screen& fine, const Screen& coarse);

// The initial sub-pixel of coarse pixel j inside the refining screen:
// per factor, the fine interval sharing the coarse interval's left end.
PixelIndex init_pixel(const Screen& fine, const Screen& coarse, const PixelIndex& j);

// Canonical representative of a pixel: midpoints for bounded factors,
// lo+1 / hi-1 for half-infinite ones, 0 for a cut-free factor.
Rat sample_coordinate(const Interval& I);
Point sample_point(const Screen& s, const PixelIndex& ix);

struct ScreenJoinResult {
  bool is_screen = false;
  Screen screen;        // valid when is_screen
  std::string reason;   // witness when the join is not a screen
  std::size_t block_count = 0;
};

// Join of two screens qua partitions of R^n, via the overlap graph of
// pixels. Unions of components may fail to be boxes, or the boxes may fail
// to form a product grid; both outcomes are reported, not errors.
ScreenJoinResult screen_join(const Screen& a, const Screen& b);

}  // namespace pixcat
