#pragma once

#include "pixcat/rep.hpp"
#include "pixcat/skeleton.hpp"

#include <string>
#include <vector>

namespace pixcat {

// Screen for the chain-ideal model on R^n: every factor is
// (-inf,0], (0,a1), [a1,a2), ..., [a_last,1), [1,+inf).
struct AusScreen {
  int n = 1;
  std::vector<Rat> cuts;  // strictly increasing inside (0,1)

  AusScreen() = default;
  AusScreen(int n_, std::vector<Rat> cuts_);

  Screen to_screen() const;
  // quiver size m with |cuts| = m + n - 2
  int m() const { return (int)cuts.size() + 2 - n; }
};

// Pixel indices in this module follow the factor numbering of the chain
// model: index 0 is the pixel (0,a1), index -1 the pixel (-inf,0]. The
// screens layer is 0-based from the leftmost pixel, one off from here.
using AusIndex = std::vector<long long>;

PixelIndex to_pixel_index(const AusIndex& ix);
AusIndex from_pixel_index(const PixelIndex& ix);

// index form of the dead-pixel classification: alive iff
// 0 <= i1 < i2 < ... < in < |cuts| + 1
bool aus_pixel_alive(const AusScreen& s, const AusIndex& ix);

// vertex tuples of the higher Auslander quiver, weakly increasing in 1..m
using AusVertex = std::vector<long long>;

AusVertex phi(const AusIndex& ix);
AusIndex phi_inverse(const AusVertex& v);

// Higher Auslander quiver of type A: vertices the weakly increasing
// n-tuples, arrows the single-coordinate increments, hom the table of the
// pixelated continuum model transported along phi.
struct HigherAuslanderQuiver {
  int n = 1, m = 2;
  std::vector<AusVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::vector<int>> hom;

  std::size_t vertex_ordinal(const AusVertex& v) const;
};

// hom(u,v) = 1 iff u <= v coordinatewise and v_k <= u_{k+1} for k < n
bool aus_quiver_hom(const AusVertex& u, const AusVertex& v);

HigherAuslanderQuiver higher_auslander_quiver(int n, int m);

struct PhiReport {
  bool ok = true;
  std::string witness;
  std::size_t vertices = 0;
  std::size_t pairs_checked = 0;
};

// phi is a bijection from the non-dead pixels onto the quiver vertices
// carrying the symbolic skeleton hom table to the combinatorial one
PhiReport verify_phi_isomorphism(int n, int m, const std::vector<Rat>& cuts);

// Interval module data: a projective source and a cutoff, supported on
// the staircase x_k <= w_k < x_{k+1} with x_{n+1} = c (first coordinate
// open at 0 when x1 = 0). c = 1 is the projective at the source.
struct IntervalModuleSpec {
  Point source;
  Rat cutoff;

  IntervalModuleSpec() = default;
  IntervalModuleSpec(Point x, Rat c);
};

// Hom(M_{y,d}, M_{x,c}) is one-dimensional iff
// x1 <= y1 < x2 <= y2 < ... < xn <= yn < c <= d.
bool interval_hom(const IntervalModuleSpec& target, const IntervalModuleSpec& source);

// realization on the skeleton of an aligned Aus screen
QuiverRep interval_module(const IntervalModuleSpec& spec, const AusScreen& s,
                          const SkeletonQuiver& sk);

struct IntervalResolutions {
  std::vector<Point> projective_sources;          // x0, ..., xn
  std::vector<IntervalModuleSpec> injectives;     // I0, ..., In (empty when x1 = 0)
};

IntervalResolutions interval_resolutions(const IntervalModuleSpec& spec);

struct ResolutionCheck {
  bool ok = true;
  std::string witness;
  std::size_t projective_length = 0;
  std::size_t injective_length = 0;
};

// realizes both resolutions as complexes of representations and verifies
// exactness by rank computations
ResolutionCheck check_interval_resolutions(const IntervalModuleSpec& spec, const AusScreen& s,
                                           const SkeletonQuiver& sk);

struct ClusterTiltingReport {
  bool ok = true;
  std::string witness;
  std::size_t family_size = 0;
  std::size_t non_members = 0;
  std::size_t ext_pairs_checked = 0;
};

// the grid-aligned interval modules are Ext-orthogonal in degrees
// 0 < i < n-1 and every other thin interval-type representation fails
// orthogonality against the family
ClusterTiltingReport cluster_tilting_check(int n, int m, const std::vector<Rat>& cuts);

struct TheoremBReport {
  bool ok = true;
  std::string witness;
  std::size_t objects = 0;
  std::size_t pairs_checked = 0;
};

// interval-module homs in the opposite category against the hom support
// of the (n+1)-dimensional chain model under (x,c) -> (x1,...,xn,c)
TheoremBReport theoremB_check(int n, unsigned denominator);

}  // namespace pixcat
