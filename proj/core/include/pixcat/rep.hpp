#pragma once

#include "pixcat/matrix.hpp"
#include "pixcat/skeleton.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pixcat {

using Arrow = std::pair<std::size_t, std::size_t>;

// Representation of a skeleton quiver over the rationals: a dimension per
// vertex and a matrix per arrow (rows = target, cols = source; matrices
// act on column vectors). Relation compatibility means all arrow paths
// between a vertex pair induce equal maps when the hom bit is 1 and the
// zero map when it is 0.
struct QuiverRep {
  std::vector<std::size_t> dims;
  std::map<Arrow, Mat> mats;

  const Mat& mat(const Arrow& a) const;
};

struct RepMorphism {
  std::vector<Mat> comps;  // per vertex, N.dim x M.dim
};

struct CheckResult {
  bool ok = true;
  std::string witness;
};

CheckResult validate_rep(const QuiverRep& rep, const SkeletonQuiver& sk);
CheckResult validate_morphism(const RepMorphism& f, const QuiverRep& from, const QuiverRep& to,
                              const SkeletonQuiver& sk);

// composite of rep matrices along any arrow path u -> w with hom = 1;
// well-defined for valid reps
Mat path_matrix(const QuiverRep& rep, const SkeletonQuiver& sk, std::size_t u, std::size_t w);

QuiverRep zero_rep(const SkeletonQuiver& sk);

// representable projective at v: dims(w) = hom(v,w)
QuiverRep projective_rep(const SkeletonQuiver& sk, std::size_t v);

// direct sum with block bookkeeping
struct DirectSum {
  QuiverRep rep;
  std::vector<std::vector<std::size_t>> offsets;  // per summand, per vertex
};
DirectSum direct_sum(const std::vector<QuiverRep>& parts, const SkeletonQuiver& sk);

struct SubQuotient {
  QuiverRep rep;
  RepMorphism map;  // inclusion into the source / projection from the target
};

SubQuotient rep_kernel(const RepMorphism& f, const QuiverRep& from, const QuiverRep& to,
                       const SkeletonQuiver& sk);
SubQuotient rep_cokernel(const RepMorphism& f, const QuiverRep& from, const QuiverRep& to,
                         const SkeletonQuiver& sk);

struct HomSpace {
  std::size_t dim = 0;
  std::vector<RepMorphism> basis;
};
HomSpace hom_space(const QuiverRep& m, const QuiverRep& n, const SkeletonQuiver& sk);

// minimal projective resolution by iterated covers (tops over the arrow
// radical); skeletons here are finite, thin and directed
struct Resolution {
  std::vector<QuiverRep> terms;       // P0, P1, ...
  std::vector<RepMorphism> maps;      // maps[0]: P0 -> M, maps[i]: Pi -> P(i-1)
  std::vector<std::vector<std::size_t>> cover_vertices;  // generators per term
};
Resolution projective_resolution(const QuiverRep& m, const SkeletonQuiver& sk,
                                 std::size_t max_length = SIZE_MAX);

std::size_t ext_dim(const QuiverRep& m, const QuiverRep& n, const SkeletonQuiver& sk, std::size_t i);

// ---- step representations: reps on a refining screen ----

// fine pixel -> containing coarse pixel
PixelIndex coarse_pixel_of(const Screen& fine, const Screen& coarse, const PixelIndex& fine_ix);

// every in-coarse-pixel fine arrow carries an invertible matrix and the
// dimensions agree inside each coarse pixel
CheckResult is_pixelated(const SkeletonQuiver& fine, const QuiverRep& rep, const Screen& coarse);

// value at the initial sub-pixel, arrows by fine path composites
QuiverRep pushdown(const SkeletonQuiver& fine, const QuiverRep& rep, const SkeletonQuiver& coarse);

// constant on sub-pixels with identity matrices inside coarse pixels
QuiverRep lift(const SkeletonQuiver& coarse, const QuiverRep& rep, const SkeletonQuiver& fine);

}  // namespace pixcat
