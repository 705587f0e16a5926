#include "pixcat/screen.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pixcat {

std::string fmt_interval(const Interval& I) {
  std::string out;
  out += I.lo.is_finite() && I.lo_closed ? "[" : "(";
  out += fmt_ext(I.lo);
  out += ",";
  out += fmt_ext(I.hi);
  out += I.hi.is_finite() && I.hi_closed ? "]" : ")";
  return out;
}

std::string fmt_pixel_index(const PixelIndex& ix) {
  std::string out = "(";
  for (std::size_t i = 0; i < ix.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ix[i]);
  }
  return out + ")";
}

ScreenFactor::ScreenFactor(std::vector<Boundary> cuts) : cuts_(std::move(cuts)) {
  for (std::size_t i = 1; i < cuts_.size(); ++i) {
    const auto& a = cuts_[i - 1];
    const auto& b = cuts_[i];
    if (a.at < b.at) continue;
    if (a.at == b.at && a.owner == Boundary::Owner::Upper && b.owner == Boundary::Owner::Lower)
      continue;  // singleton pixel [at,at] between the two cuts
    throw input_error("screen factor boundaries must increase (equal values only as upper,lower)");
  }
}

Interval ScreenFactor::interval(std::size_t k) const {
  if (k >= pixel_count()) throw input_error("pixel index out of range");
  Interval I;
  if (k > 0) {
    const auto& b = cuts_[k - 1];
    I.lo = ExtRat::finite(b.at);
    I.lo_closed = b.owner == Boundary::Owner::Upper;
  }
  if (k < cuts_.size()) {
    const auto& b = cuts_[k];
    I.hi = ExtRat::finite(b.at);
    I.hi_closed = b.owner == Boundary::Owner::Lower;
  }
  return I;
}

std::size_t ScreenFactor::locate(const Rat& v) const {
  for (std::size_t k = 0; k < pixel_count(); ++k)
    if (interval(k).contains(v)) return k;
  throw consistency_error("screen factor does not cover the line");
}

std::vector<Interval> Screen::pixel_box(const PixelIndex& ix) const {
  if (ix.size() != factors_.size()) throw input_error("pixel index dimension mismatch");
  std::vector<Interval> box;
  box.reserve(ix.size());
  for (std::size_t k = 0; k < ix.size(); ++k) box.push_back(factors_[k].interval(ix[k]));
  return box;
}

std::size_t Screen::total_pixels() const {
  std::size_t n = 1;
  for (const auto& f : factors_) n *= f.pixel_count();
  return n;
}

std::vector<PixelIndex> Screen::all_pixels() const {
  std::vector<PixelIndex> out;
  PixelIndex cur(factors_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t k = 0;
    for (; k < factors_.size(); ++k) {
      if (++cur[k] < factors_[k].pixel_count()) break;
      cur[k] = 0;
    }
    if (k == factors_.size()) break;
  }
  return out;
}

bool Screen::pixel_bounded(const PixelIndex& ix) const {
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (!factors_[k].interval(ix[k]).bounded()) return false;
  return true;
}

PixelIndex pixel_of(const Screen& s, const Point& p) {
  if ((int)p.size() != s.dimension()) throw input_error("point dimension mismatch");
  PixelIndex ix(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) ix[k] = s.factor(k).locate(p[k]);
  return ix;
}

namespace {

ScreenFactor merge_factors(const ScreenFactor& a, const ScreenFactor& b) {
  std::vector<Boundary> all = a.boundaries();
  all.insert(all.end(), b.boundaries().begin(), b.boundaries().end());
  std::sort(all.begin(), all.end(), [](const Boundary& x, const Boundary& y) {
    if (x.at != y.at) return x.at < y.at;
    return x.owner == Boundary::Owner::Upper && y.owner == Boundary::Owner::Lower;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return ScreenFactor(std::move(all));
}

}  // namespace

Screen meet(const Screen& a, const Screen& b) {
  if (a.dimension() != b.dimension()) throw input_error("screen dimension mismatch");
  std::vector<ScreenFactor> fs;
  for (int k = 0; k < a.dimension(); ++k) fs.push_back(merge_factors(a.factor(k), b.factor(k)));
  return Screen(std::move(fs));
}

RefinementKind refinement_relation(const Screen& fine, const Screen& coarse) {
  if (fine.dimension() != coarse.dimension()) throw input_error("screen dimension mismatch");
  for (int k = 0; k < fine.dimension(); ++k) {
    const auto& f = fine.factor(k);
    const auto& c = coarse.factor(k);
    for (std::size_t i = 0; i < f.pixel_count(); ++i) {
      Interval fi = f.interval(i);
      bool inside = false;
      for (std::size_t j = 0; j < c.pixel_count() && !inside; ++j)
        inside = fi.subset_of(c.interval(j));
      if (!inside) return RefinementKind::NotRefinement;
    }
  }
  // finite factor lists: each coarse pixel holds finitely many fine pixels
  return RefinementKind::FinitaryRefinement;
}

PixelIndex init_pixel(const Screen& fine, const Screen& coarse, const PixelIndex& j) {
  if (refinement_relation(fine, coarse) == RefinementKind::NotRefinement)
    throw input_error("init_pixel: first screen does not refine the second");
  PixelIndex out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    Interval cj = coarse.factor(k).interval(j[k]);
    bool found = false;
    for (std::size_t i = 0; i < fine.factor(k).pixel_count(); ++i) {
      Interval fi = fine.factor(k).interval(i);
      if (fi.subset_of(cj) && fi.same_left_end(cj)) {
        out[k] = i;
        found = true;
        break;
      }
    }
    if (!found) throw consistency_error("no initial sub-pixel found");
  }
  return out;
}

Rat sample_coordinate(const Interval& I) {
  if (I.lo.is_finite() && I.hi.is_finite()) return (I.lo.value + I.hi.value) / 2;
  if (I.hi.is_finite()) return I.hi.value - 1;
  if (I.lo.is_finite()) return I.lo.value + 1;
  return Rat(0);
}

Point sample_point(const Screen& s, const PixelIndex& ix) {
  auto box = s.pixel_box(ix);
  Point p;
  p.reserve(box.size());
  for (const auto& I : box) p.push_back(sample_coordinate(I));
  return p;
}

namespace {

bool intervals_intersect(const Interval& A, const Interval& B) {
  // nonempty intersection of two pixels from valid factors
  return exists_leq_pair(A, B) && exists_leq_pair(B, A);
}

bool boxes_intersect(const std::vector<Interval>& A, const std::vector<Interval>& B) {
  for (std::size_t k = 0; k < A.size(); ++k)
    if (!intervals_intersect(A[k], B[k])) return false;
  return true;
}

struct UF {
  std::vector<std::size_t> parent;
  explicit UF(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Interval hull(const Interval& A, const Interval& B) {
  Interval H;
  if (A.lo == B.lo) {
    H.lo = A.lo;
    H.lo_closed = A.lo_closed || B.lo_closed;
  } else {
    const Interval& lower = A.lo < B.lo ? A : B;
    H.lo = lower.lo;
    H.lo_closed = lower.lo_closed;
  }
  if (A.hi == B.hi) {
    H.hi = A.hi;
    H.hi_closed = A.hi_closed || B.hi_closed;
  } else {
    const Interval& upper = A.hi < B.hi ? B : A;
    H.hi = upper.hi;
    H.hi_closed = upper.hi_closed;
  }
  return H;
}

}  // namespace

ScreenJoinResult screen_join(const Screen& a, const Screen& b) {
  if (a.dimension() != b.dimension()) throw input_error("screen dimension mismatch");
  ScreenJoinResult res;

  auto pa = a.all_pixels();
  auto pb = b.all_pixels();
  std::vector<std::vector<Interval>> boxes;
  boxes.reserve(pa.size() + pb.size());
  for (const auto& ix : pa) boxes.push_back(a.pixel_box(ix));
  for (const auto& ix : pb) boxes.push_back(b.pixel_box(ix));

  // overlap graph: one 1-cell per nonempty pairwise intersection
  UF uf(boxes.size());
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (boxes_intersect(boxes[i], boxes[pa.size() + j])) uf.unite(i, pa.size() + j);

  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < boxes.size(); ++i) comps[uf.find(i)].push_back(i);
  res.block_count = comps.size();

  // each component's union must be exactly its bounding box
  std::vector<std::vector<Interval>> blocks;
  std::size_t block_no = 0;
  for (const auto& [root, members] : comps) {
    std::vector<Interval> bbox = boxes[members.front()];
    for (std::size_t m = 1; m < members.size(); ++m)
      for (std::size_t k = 0; k < bbox.size(); ++k)
        bbox[k] = hull(bbox[k], boxes[members[m]][k]);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (uf.find(i) != root && boxes_intersect(boxes[i], bbox)) {
        res.reason = "join block " + std::to_string(block_no) + " is not a box: pixel " +
                     fmt_pixel_index(pa[i]) + " of the first screen meets its hull but not the block";
        return res;
      }
    }
    blocks.push_back(std::move(bbox));
    ++block_no;
  }

  // the boxes must assemble into a product grid
  std::vector<ScreenFactor> factors;
  for (int k = 0; k < a.dimension(); ++k) {
    std::vector<Interval> cols;
    for (const auto& blk : blocks)
      if (std::find(cols.begin(), cols.end(), blk[k]) == cols.end()) cols.push_back(blk[k]);
    std::sort(cols.begin(), cols.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi); });
    std::vector<Boundary> cuts;
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
      if (!(cols[i].hi == cols[i + 1].lo) || cols[i].hi_closed == cols[i + 1].lo_closed) {
        res.reason = "factor " + std::to_string(k) + " projections do not tile the line";
        return res;
      }
      cuts.push_back(Boundary{cols[i].hi.value, cols[i].hi_closed ? Boundary::Owner::Lower
                                                                  : Boundary::Owner::Upper});
    }
    if (!cols.empty() &&
        (cols.front().lo.is_finite() || cols.back().hi.is_finite())) {
      res.reason = "factor " + std::to_string(k) + " projections do not cover the line";
      return res;
    }
    factors.push_back(ScreenFactor(std::move(cuts)));
  }
  Screen joined(std::move(factors));
  if (joined.total_pixels() != blocks.size()) {
    res.reason = "join blocks are boxes but not a product grid";
    return res;
  }
  res.is_screen = true;
  res.screen = std::move(joined);
  return res;
}

}  // namespace pixcat
