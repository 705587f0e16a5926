#include "pixcat/rep.hpp"

#include <algorithm>

namespace pixcat {

namespace {

std::string vname(const SkeletonQuiver& sk, std::size_t v) { return fmt_pixel_index(sk.vertices[v]); }

void require_directed(const SkeletonQuiver& sk) {
  for (auto [a, b] : sk.arrows)
    if (a >= b) throw consistency_error("representation machinery needs a directed skeleton");
}

// per-start composite table: composites[w] set once a path reaches w
std::vector<std::optional<Mat>> composites_from(const QuiverRep& rep, const SkeletonQuiver& sk,
                                                std::size_t u, CheckResult* check) {
  std::vector<std::optional<Mat>> comp(sk.size());
  comp[u] = Mat::identity(rep.dims[u]);
  // arrows sorted by target; vertex order is topological for directed skeletons
  auto arrows = sk.arrows;
  std::sort(arrows.begin(), arrows.end(),
            [](const Arrow& x, const Arrow& y) { return x.second < y.second || (x.second == y.second && x.first < y.first); });
  for (auto [a, b] : arrows) {
    if (!comp[a]) continue;
    Mat cand = rep.mat({a, b}) * *comp[a];
    if (!comp[b])
      comp[b] = std::move(cand);
    else if (check && !(cand == *comp[b])) {
      check->ok = false;
      check->witness = "parallel paths " + vname(sk, u) + " -> " + vname(sk, b) +
                       " induce different maps";
      return comp;
    }
  }
  if (check) {
    for (std::size_t w = 0; w < sk.size(); ++w) {
      if (!comp[w] || w == u) continue;
      if (!sk.hom[u][w] && !comp[w]->is_zero()) {
        check->ok = false;
        check->witness = "zero relation " + vname(sk, u) + " -> " + vname(sk, w) +
                         " carries a nonzero composite";
        return comp;
      }
    }
  }
  return comp;
}

}  // namespace

const Mat& QuiverRep::mat(const Arrow& a) const {
  auto it = mats.find(a);
  if (it == mats.end()) throw input_error("representation is missing an arrow matrix");
  return it->second;
}

CheckResult validate_rep(const QuiverRep& rep, const SkeletonQuiver& sk) {
  require_directed(sk);
  CheckResult res;
  if (rep.dims.size() != sk.size()) {
    res.ok = false;
    res.witness = "dimension vector length mismatch";
    return res;
  }
  for (auto [a, b] : sk.arrows) {
    auto it = rep.mats.find({a, b});
    if (it == rep.mats.end()) {
      res.ok = false;
      res.witness = "missing matrix for arrow " + vname(sk, a) + " -> " + vname(sk, b);
      return res;
    }
    if (it->second.rows() != rep.dims[b] || it->second.cols() != rep.dims[a]) {
      res.ok = false;
      res.witness = "matrix shape mismatch on arrow " + vname(sk, a) + " -> " + vname(sk, b);
      return res;
    }
  }
  for (std::size_t u = 0; u < sk.size() && res.ok; ++u) composites_from(rep, sk, u, &res);
  return res;
}

CheckResult validate_morphism(const RepMorphism& f, const QuiverRep& from, const QuiverRep& to,
                              const SkeletonQuiver& sk) {
  CheckResult res;
  if (f.comps.size() != sk.size()) {
    res.ok = false;
    res.witness = "component count mismatch";
    return res;
  }
  for (std::size_t v = 0; v < sk.size(); ++v)
    if (f.comps[v].rows() != to.dims[v] || f.comps[v].cols() != from.dims[v]) {
      res.ok = false;
      res.witness = "component shape mismatch at " + vname(sk, v);
      return res;
    }
  for (auto [a, b] : sk.arrows) {
    if (!(f.comps[b] * from.mat({a, b}) == to.mat({a, b}) * f.comps[a])) {
      res.ok = false;
      res.witness = "naturality fails on arrow " + vname(sk, a) + " -> " + vname(sk, b);
      return res;
    }
  }
  return res;
}

Mat path_matrix(const QuiverRep& rep, const SkeletonQuiver& sk, std::size_t u, std::size_t w) {
  if (!sk.hom[u][w] && u != w)
    throw input_error("path_matrix: no surviving morphism " + vname(sk, u) + " -> " + vname(sk, w));
  auto comp = composites_from(rep, sk, u, nullptr);
  if (!comp[w]) throw consistency_error("no arrow path realizes a surviving hom");
  return *comp[w];
}

QuiverRep zero_rep(const SkeletonQuiver& sk) {
  QuiverRep rep;
  rep.dims.assign(sk.size(), 0);
  for (auto a : sk.arrows) rep.mats[a] = Mat(0, 0);
  return rep;
}

QuiverRep projective_rep(const SkeletonQuiver& sk, std::size_t v) {
  QuiverRep rep;
  rep.dims.resize(sk.size());
  for (std::size_t w = 0; w < sk.size(); ++w) rep.dims[w] = w == v || sk.hom[v][w] ? 1 : 0;
  for (auto [a, b] : sk.arrows) {
    Mat m(rep.dims[b], rep.dims[a]);
    if (rep.dims[a] && rep.dims[b]) m.at(0, 0) = 1;
    rep.mats[{a, b}] = m;
  }
  return rep;
}

DirectSum direct_sum(const std::vector<QuiverRep>& parts, const SkeletonQuiver& sk) {
  DirectSum out;
  out.rep.dims.assign(sk.size(), 0);
  out.offsets.resize(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    out.offsets[p].resize(sk.size());
    for (std::size_t v = 0; v < sk.size(); ++v) {
      out.offsets[p][v] = out.rep.dims[v];
      out.rep.dims[v] += parts[p].dims[v];
    }
  }
  for (auto [a, b] : sk.arrows) {
    Mat m(out.rep.dims[b], out.rep.dims[a]);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const Mat& blk = parts[p].mat({a, b});
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c)
          m.at(out.offsets[p][b] + r, out.offsets[p][a] + c) = blk.at(r, c);
    }
    out.rep.mats[{a, b}] = std::move(m);
  }
  return out;
}

SubQuotient rep_kernel(const RepMorphism& f, const QuiverRep& from, const QuiverRep&,
                       const SkeletonQuiver& sk) {
  SubQuotient out;
  std::vector<Mat> bases(sk.size());
  out.rep.dims.resize(sk.size());
  out.map.comps.resize(sk.size());
  for (std::size_t v = 0; v < sk.size(); ++v) {
    bases[v] = nullspace(f.comps[v]);
    out.rep.dims[v] = bases[v].cols();
    out.map.comps[v] = bases[v];
  }
  for (auto [a, b] : sk.arrows) {
    auto x = solve(bases[b], from.mat({a, b}) * bases[a]);
    if (!x) throw consistency_error("kernel is not arrow-stable");
    out.rep.mats[{a, b}] = *x;
  }
  return out;
}

SubQuotient rep_cokernel(const RepMorphism& f, const QuiverRep&, const QuiverRep& to,
                         const SkeletonQuiver& sk) {
  SubQuotient out;
  std::vector<Mat> projs(sk.size());
  out.rep.dims.resize(sk.size());
  out.map.comps.resize(sk.size());
  for (std::size_t v = 0; v < sk.size(); ++v) {
    projs[v] = left_nullspace(f.comps[v]);  // rows kill the image
    out.rep.dims[v] = projs[v].rows();
    out.map.comps[v] = projs[v];
  }
  for (auto [a, b] : sk.arrows) {
    // X with X * proj_a = proj_b * to(a); transpose to reuse the solver
    auto xt = solve(projs[a].transposed(), (projs[b] * to.mat({a, b})).transposed());
    if (!xt) throw consistency_error("cokernel is not arrow-stable");
    out.rep.mats[{a, b}] = xt->transposed();
  }
  return out;
}

namespace {

std::size_t flat_dim(const QuiverRep& m, const QuiverRep& n) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) d += m.dims[v] * n.dims[v];
  return d;
}

std::vector<std::size_t> flat_offsets(const QuiverRep& m, const QuiverRep& n) {
  std::vector<std::size_t> off(m.dims.size() + 1, 0);
  for (std::size_t v = 0; v < m.dims.size(); ++v) off[v + 1] = off[v] + m.dims[v] * n.dims[v];
  return off;
}

RepMorphism unflatten(const Mat& col, const QuiverRep& m, const QuiverRep& n) {
  auto off = flat_offsets(m, n);
  RepMorphism f;
  f.comps.resize(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Mat c(n.dims[v], m.dims[v]);
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t cc = 0; cc < c.cols(); ++cc) c.at(r, cc) = col.at(off[v] + r * c.cols() + cc, 0);
    f.comps[v] = std::move(c);
  }
  return f;
}

Mat flatten(const RepMorphism& f, const QuiverRep& m, const QuiverRep& n) {
  auto off = flat_offsets(m, n);
  Mat col(off.back(), 1);
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    for (std::size_t r = 0; r < f.comps[v].rows(); ++r)
      for (std::size_t c = 0; c < f.comps[v].cols(); ++c)
        col.at(off[v] + r * f.comps[v].cols() + c, 0) = f.comps[v].at(r, c);
  return col;
}

// naturality constraints as one linear system over the flat coordinates
Mat naturality_system(const QuiverRep& m, const QuiverRep& n, const SkeletonQuiver& sk) {
  auto off = flat_offsets(m, n);
  std::size_t nrows = 0;
  for (auto [a, b] : sk.arrows) nrows += n.dims[b] * m.dims[a];
  Mat sys(nrows, off.back());
  std::size_t row = 0;
  for (auto [a, b] : sk.arrows) {
    const Mat& ma = m.mat({a, b});
    const Mat& na = n.mat({a, b});
    // (f_b * M(a) - N(a) * f_a)(r, c) = 0
    for (std::size_t r = 0; r < n.dims[b]; ++r)
      for (std::size_t c = 0; c < m.dims[a]; ++c) {
        for (std::size_t k = 0; k < m.dims[b]; ++k)
          sys.at(row, off[b] + r * m.dims[b] + k) += ma.at(k, c);
        for (std::size_t k = 0; k < n.dims[a]; ++k)
          sys.at(row, off[a] + k * m.dims[a] + c) -= na.at(r, k);
        ++row;
      }
  }
  return sys;
}

}  // namespace

HomSpace hom_space(const QuiverRep& m, const QuiverRep& n, const SkeletonQuiver& sk) {
  if (m.dims.size() != sk.size() || n.dims.size() != sk.size())
    throw input_error("hom_space: representations live on different skeletons");
  HomSpace out;
  Mat ns = nullspace(naturality_system(m, n, sk));
  out.dim = ns.cols();
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    Mat col(ns.rows(), 1);
    for (std::size_t r = 0; r < ns.rows(); ++r) col.at(r, 0) = ns.at(r, j);
    out.basis.push_back(unflatten(col, m, n));
  }
  return out;
}

namespace {

struct Cover {
  QuiverRep proj;
  RepMorphism eps;
  std::vector<std::size_t> gens;  // vertex of each projective summand
  bool zero = true;
};

Cover projective_cover(const QuiverRep& m, const SkeletonQuiver& sk) {
  Cover out;
  // top = M / (sum of images of incoming arrows)
  std::vector<std::vector<std::size_t>> incoming(sk.size());
  for (std::size_t i = 0; i < sk.arrows.size(); ++i) incoming[sk.arrows[i].second].push_back(i);

  std::vector<Mat> gen_vectors(sk.size(), Mat(0, 0));
  std::vector<QuiverRep> summands;
  for (std::size_t v = 0; v < sk.size(); ++v) {
    if (m.dims[v] == 0) continue;
    std::size_t rad_cols = 0;
    for (auto ai : incoming[v]) rad_cols += m.dims[sk.arrows[ai].first];
    Mat rad(m.dims[v], rad_cols);
    std::size_t col = 0;
    for (auto ai : incoming[v]) {
      const Mat& am = m.mat(sk.arrows[ai]);
      for (std::size_t c = 0; c < am.cols(); ++c, ++col)
        for (std::size_t r = 0; r < am.rows(); ++r) rad.at(r, col) = am.at(r, c);
    }
    auto ext = extend_to_basis(rank(rad) == 0 ? Mat(m.dims[v], 0) : rad);
    if (ext.complement.empty()) continue;
    gen_vectors[v] = ext.basis.columns(ext.complement);
    for (std::size_t g = 0; g < gen_vectors[v].cols(); ++g) {
      summands.push_back(projective_rep(sk, v));
      out.gens.push_back(v);
    }
  }
  if (summands.empty()) {
    out.proj = zero_rep(sk);
    out.eps.comps.resize(sk.size());
    for (std::size_t v = 0; v < sk.size(); ++v) out.eps.comps[v] = Mat(m.dims[v], 0);
    out.zero = true;
    return out;
  }
  DirectSum ds = direct_sum(summands, sk);
  out.proj = ds.rep;
  out.zero = false;

  out.eps.comps.resize(sk.size());
  for (std::size_t w = 0; w < sk.size(); ++w) {
    Mat comp(m.dims[w], out.proj.dims[w]);
    std::size_t summand = 0;
    for (std::size_t v = 0; v < sk.size(); ++v) {
      if (gen_vectors[v].cols() == 0) continue;
      Mat pm = v == w || sk.hom[v][w] ? path_matrix(m, sk, v, w) : Mat(m.dims[w], m.dims[v]);
      for (std::size_t g = 0; g < gen_vectors[v].cols(); ++g, ++summand) {
        if (!(v == w || sk.hom[v][w])) continue;
        // the summand P_v contributes one column at w: the generator image
        std::size_t col = ds.offsets[summand][w];
        for (std::size_t r = 0; r < m.dims[w]; ++r) {
          Rat acc(0);
          for (std::size_t k = 0; k < m.dims[v]; ++k) acc += pm.at(r, k) * gen_vectors[v].at(k, g);
          comp.at(r, col) = acc;
        }
      }
    }
    out.eps.comps[w] = std::move(comp);
  }
  return out;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism out;
  out.comps.resize(f.comps.size());
  for (std::size_t v = 0; v < f.comps.size(); ++v) out.comps[v] = g.comps[v] * f.comps[v];
  return out;
}

}  // namespace

Resolution projective_resolution(const QuiverRep& m, const SkeletonQuiver& sk,
                                 std::size_t max_length) {
  require_directed(sk);
  Resolution res;
  QuiverRep current = m;
  RepMorphism into_prev;  // inclusion of the current syzygy into the previous term
  bool first = true;
  for (std::size_t step = 0; step <= sk.size() + 1; ++step) {
    Cover cov = projective_cover(current, sk);
    if (cov.zero) {
      if (first) {
        res.terms.push_back(cov.proj);
        res.maps.push_back(cov.eps);
        res.cover_vertices.push_back({});
      }
      return res;
    }
    res.terms.push_back(cov.proj);
    res.cover_vertices.push_back(cov.gens);
    res.maps.push_back(first ? cov.eps : compose(into_prev, cov.eps));
    if (res.terms.size() > max_length + 1) return res;

    SubQuotient ker = rep_kernel(cov.eps, cov.proj, current, sk);
    current = ker.rep;
    into_prev = ker.map;
    first = false;
    bool zero = true;
    for (auto d : current.dims) zero = zero && d == 0;
    if (zero) return res;
  }
  throw consistency_error("projective resolution did not terminate");
}

std::size_t ext_dim(const QuiverRep& m, const QuiverRep& n, const SkeletonQuiver& sk,
                    std::size_t i) {
  Resolution res = projective_resolution(m, sk, i + 1);
  if (i >= res.terms.size()) return 0;

  auto delta_rank = [&](std::size_t j) -> std::size_t {
    // rank of Hom(P_j, N) -> Hom(P_{j+1}, N), composition with maps[j+1]
    if (j + 1 >= res.terms.size()) return 0;
    HomSpace hj = hom_space(res.terms[j], n, sk);
    if (hj.dim == 0) return 0;
    Mat images(flat_dim(res.terms[j + 1], n), hj.dim);
    for (std::size_t b = 0; b < hj.dim; ++b) {
      RepMorphism composed = compose(hj.basis[b], res.maps[j + 1]);
      Mat col = flatten(composed, res.terms[j + 1], n);
      for (std::size_t r = 0; r < col.rows(); ++r) images.at(r, b) = col.at(r, 0);
    }
    return rank(images);
  };

  std::size_t hi = hom_space(res.terms[i], n, sk).dim;
  std::size_t r_i = delta_rank(i);
  std::size_t r_prev = i == 0 ? 0 : delta_rank(i - 1);
  return hi - r_i - r_prev;
}

PixelIndex coarse_pixel_of(const Screen& fine, const Screen& coarse, const PixelIndex& fine_ix) {
  PixelIndex out(fine_ix.size());
  for (std::size_t k = 0; k < fine_ix.size(); ++k) {
    Interval fi = fine.factor(k).interval(fine_ix[k]);
    bool found = false;
    for (std::size_t j = 0; j < coarse.factor(k).pixel_count(); ++j)
      if (fi.subset_of(coarse.factor(k).interval(j))) {
        out[k] = j;
        found = true;
        break;
      }
    if (!found) throw input_error("fine pixel is not contained in a coarse pixel");
  }
  return out;
}

CheckResult is_pixelated(const SkeletonQuiver& fine, const QuiverRep& rep, const Screen& coarse) {
  if (refinement_relation(fine.screen, coarse) != RefinementKind::FinitaryRefinement)
    throw input_error("is_pixelated: the representation's screen must refine the coarse screen");
  CheckResult res;
  std::vector<PixelIndex> coarse_of(fine.size());
  for (std::size_t v = 0; v < fine.size(); ++v)
    coarse_of[v] = coarse_pixel_of(fine.screen, coarse, fine.vertices[v]);
  for (std::size_t v = 0; v < fine.size(); ++v)
    for (std::size_t w = v + 1; w < fine.size(); ++w)
      if (coarse_of[v] == coarse_of[w] && rep.dims[v] != rep.dims[w]) {
        res.ok = false;
        res.witness = "dimensions differ inside coarse pixel " + fmt_pixel_index(coarse_of[v]);
        return res;
      }
  for (auto [a, b] : fine.arrows) {
    if (!(coarse_of[a] == coarse_of[b])) continue;
    if (!invertible(rep.mat({a, b}))) {
      res.ok = false;
      res.witness = "in-pixel arrow " + vname(fine, a) + " -> " + vname(fine, b) +
                    " is not an isomorphism";
      return res;
    }
  }
  return res;
}

QuiverRep pushdown(const SkeletonQuiver& fine, const QuiverRep& rep, const SkeletonQuiver& coarse) {
  auto pc = is_pixelated(fine, rep, coarse.screen);
  if (!pc.ok) throw input_error("pushdown: representation is not pixelated: " + pc.witness);
  QuiverRep out;
  out.dims.resize(coarse.size());
  std::vector<std::size_t> init_vertex(coarse.size());
  for (std::size_t u = 0; u < coarse.size(); ++u) {
    PixelIndex sub = init_pixel(fine.screen, coarse.screen, coarse.vertices[u]);
    init_vertex[u] = fine.vertex_ordinal(sub);
    out.dims[u] = rep.dims[init_vertex[u]];
  }
  for (auto [u, w] : coarse.arrows)
    out.mats[{u, w}] = path_matrix(rep, fine, init_vertex[u], init_vertex[w]);
  return out;
}

QuiverRep lift(const SkeletonQuiver& coarse, const QuiverRep& rep, const SkeletonQuiver& fine) {
  if (refinement_relation(fine.screen, coarse.screen) != RefinementKind::FinitaryRefinement)
    throw input_error("lift: target screen must refine the source screen");
  QuiverRep out;
  out.dims.resize(fine.size());
  std::vector<std::optional<std::size_t>> coarse_vertex(fine.size());
  for (std::size_t v = 0; v < fine.size(); ++v) {
    PixelIndex up = coarse_pixel_of(fine.screen, coarse.screen, fine.vertices[v]);
    coarse_vertex[v] = coarse.find_vertex(up);
    out.dims[v] = coarse_vertex[v] ? rep.dims[*coarse_vertex[v]] : 0;
  }
  for (auto [a, b] : fine.arrows) {
    auto cu = coarse_vertex[a];
    auto cw = coarse_vertex[b];
    if (!cu || !cw || (*cu != *cw && !coarse.hom[*cu][*cw])) {
      out.mats[{a, b}] = Mat(out.dims[b], out.dims[a]);
    } else if (*cu == *cw) {
      out.mats[{a, b}] = Mat::identity(out.dims[a]);
    } else {
      out.mats[{a, b}] = path_matrix(rep, coarse, *cu, *cw);
    }
  }
  return out;
}

}  // namespace pixcat
