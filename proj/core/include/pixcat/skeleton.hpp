#pragma once

#include "pixcat/model.hpp"
#include "pixcat/oracle.hpp"
#include "pixcat/screen.hpp"
#include "pixcat/thincat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pixcat {

// A pixel is dead when some point of it becomes isomorphic to zero in the
// pixelation, equivalently when it contains a zero object or an in-pixel
// morphism killed by the ideal. Decided symbolically from the interval
// endpoints.
bool pixel_dead(const PathModel& m, const Screen& s, const PixelIndex& ix);
std::vector<PixelIndex> dead_pixels(const PathModel& m, const Screen& s);

// Localized hom bit between two non-dead pixels: 1 iff some morphism
// between points of the pixels survives every conjugation by in-pixel
// isomorphisms. Evaluated from interval endpoints and attainment flags;
// no sampling.
bool skeleton_hom(const PathModel& m, const Screen& s, const PixelIndex& i, const PixelIndex& j);

struct SkeletonOptions {
  bool prune = false;     // drop arrows that are composites of other arrows
  bool windowed = false;  // drop pixels unbounded in some factor
};

// Skeleton quiver of a pixelation: vertices are the surviving pixels,
// arrows the pseudo arrows (all changing coordinates jump together), hom
// the full localized 0/1 table, samples one representative point each.
struct SkeletonQuiver {
  Screen screen;
  std::vector<PixelIndex> vertices;  // lexicographically sorted
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::pair<std::size_t, std::size_t>> pruned_arrows;
  std::vector<std::vector<int>> hom;
  std::vector<Point> samples;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> find_vertex(const PixelIndex& ix) const;
  std::size_t vertex_ordinal(const PixelIndex& ix) const;
  FiniteThinCategory to_thin_category() const;
};

SkeletonQuiver build_skeleton(const PathModel& m, const Screen& s, SkeletonOptions opts = {});

// The Init functor from the coarse skeleton into the fine one: each
// coarse pixel goes to its initial sub-pixel, each arrow to the fine
// hom-path between the images. A missing fine hom contradicts the
// refinement structure and is reported, never ignored.
struct InitFunctorResult {
  bool ok = true;
  std::string witness;
  std::vector<std::size_t> vertex_map;                  // coarse ordinal -> fine ordinal
  std::vector<std::vector<std::size_t>> arrow_paths;    // per coarse arrow, fine vertex chain
  SkeletonQuiver fine;
  SkeletonQuiver coarse;
};

InitFunctorResult init_functor(const PathModel& m, const Screen& fine, const Screen& coarse,
                               SkeletonOptions opts = {});

// Equalizer check for a finite cover: the skeleton of the join against
// the product of the cover skeletons under the Init maps.
struct SheafCheckResult {
  bool ok = true;
  std::string witness;
};

SheafCheckResult sheaf_equalizer_check(const PathModel& m, const std::vector<Screen>& screens,
                                       const Screen& joined);

// Same check with caller-supplied vertex maps joined -> screens[i]
// (ordinals into the respective skeletons); used to demonstrate that
// non-initial assignments fail.
SheafCheckResult sheaf_equalizer_check_with_maps(const PathModel& m,
                                                 const std::vector<Screen>& screens,
                                                 const Screen& joined,
                                                 const std::vector<std::vector<std::size_t>>& maps);

// Finite thin category of corner/midpoint samples of every pixel, plus
// the in-pixel morphisms as sigma. Unbounded pixels get widened samples
// so the finite model witnesses their unboundedness.
struct SampledModel {
  FiniteThinCategory cat;
  std::vector<std::pair<std::size_t, std::size_t>> sigma;
  std::vector<Point> points;
  std::vector<PixelIndex> pixel_of_point;
};

SampledModel sampled_model_category(const PathModel& m, const Screen& s);

// Full agreement check between the symbolic skeleton and the brute-force
// localization oracle on the sampled category: dead sets and hom tables.
struct OracleAgreement {
  bool ok = true;
  std::string witness;
  std::size_t pairs_checked = 0;
};

OracleAgreement oracle_equivalence_check(const PathModel& m, const Screen& s);

}  // namespace pixcat
