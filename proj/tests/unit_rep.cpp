#include <doctest.h>

#include "pixcat/rep.hpp"

#include <random>

using namespace pixcat;

namespace {

Screen integer_screen(int lo, int hi) {
  std::vector<Boundary> bs;
  for (int v = lo; v <= hi; ++v) bs.push_back({Rat(v), Boundary::Owner::Upper});
  return Screen(std::vector<ScreenFactor>{ScreenFactor(bs)});
}

Screen half_integer_screen(int lo, int hi) {
  std::vector<Boundary> bs;
  for (int v = 2 * lo; v <= 2 * hi; ++v) bs.push_back({Rat(v, 2), Boundary::Owner::Upper});
  return Screen(std::vector<ScreenFactor>{ScreenFactor(bs)});
}

Mat mat1(Rat v) {
  Mat m(1, 1);
  m.at(0, 0) = v;
  return m;
}

Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rat(num(rng), den(rng));
  return m;
}

// random representation of a relation-free linear quiver
QuiverRep random_linear_rep(std::mt19937& rng, const SkeletonQuiver& sk, std::size_t max_dim = 3) {
  QuiverRep rep;
  std::uniform_int_distribution<std::size_t> d(0, max_dim);
  rep.dims.resize(sk.size());
  for (auto& v : rep.dims) v = d(rng);
  for (auto [a, b] : sk.arrows) rep.mats[{a, b}] = random_mat(rng, rep.dims[b], rep.dims[a]);
  return rep;
}

// random step representation: invertible inside coarse pixels
QuiverRep random_step_rep(std::mt19937& rng, const SkeletonQuiver& fine, const Screen& coarse) {
  QuiverRep rep;
  rep.dims.resize(fine.size());
  std::uniform_int_distribution<std::size_t> d(1, 3);
  std::vector<PixelIndex> up(fine.size());
  std::map<PixelIndex, std::size_t> dim_of;
  for (std::size_t v = 0; v < fine.size(); ++v) {
    up[v] = coarse_pixel_of(fine.screen, coarse, fine.vertices[v]);
    auto it = dim_of.find(up[v]);
    if (it == dim_of.end()) it = dim_of.emplace(up[v], d(rng)).first;
    rep.dims[v] = it->second;
  }
  for (auto [a, b] : fine.arrows) {
    Mat m = random_mat(rng, rep.dims[b], rep.dims[a]);
    if (up[a] == up[b])
      while (!invertible(m)) m = random_mat(rng, rep.dims[b], rep.dims[a]);
    rep.mats[{a, b}] = m;
  }
  return rep;
}

RepMorphism random_hom_element(std::mt19937& rng, const HomSpace& hs, const QuiverRep& m,
                               const QuiverRep& n, std::size_t nverts) {
  RepMorphism f;
  f.comps.resize(nverts);
  for (std::size_t v = 0; v < nverts; ++v) f.comps[v] = Mat(n.dims[v], m.dims[v]);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (const auto& b : hs.basis) {
    Rat c(coeff(rng));
    for (std::size_t v = 0; v < nverts; ++v)
      for (std::size_t r = 0; r < b.comps[v].rows(); ++r)
        for (std::size_t cc = 0; cc < b.comps[v].cols(); ++cc)
          f.comps[v].at(r, cc) += c * b.comps[v].at(r, cc);
  }
  return f;
}

}  // namespace

TEST_CASE("matrix building blocks") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Mat a = random_mat(rng, 4, 3);
    Mat ns = nullspace(a);
    CHECK((a * ns).is_zero());
    CHECK(rank(a) + ns.cols() == a.cols());
    Mat lns = left_nullspace(a);
    CHECK((lns * a).is_zero());

    Mat x = random_mat(rng, 3, 2);
    auto sol = solve(a, a * x);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == a * x);

    auto ext = extend_to_basis(a);
    CHECK(invertible(ext.basis));
  }
  Mat m(2, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1);
  m.at(1, 1) = Rat(3);
  CHECK((inverse(m) * m).is_identity());
}

TEST_CASE("validation catches broken relations") {
  PathModel ml = PathModel::max_len(Rat(2));
  SkeletonQuiver sk = build_skeleton(ml, integer_screen(0, 3), {.windowed = true});
  REQUIRE(sk.size() == 3);  // linear quiver with rad^2 = 0

  QuiverRep rep;
  rep.dims = {1, 1, 1};
  rep.mats[{0, 1}] = mat1(Rat(1));
  rep.mats[{1, 2}] = mat1(Rat(1));
  CHECK_FALSE(validate_rep(rep, sk).ok);  // the composite must vanish

  rep.mats[{1, 2}] = mat1(Rat(0));
  CHECK(validate_rep(rep, sk).ok);

  QuiverRep zero;
  zero.dims = {2, 2, 2};
  for (auto a : sk.arrows) zero.mats[a] = Mat(2, 2);
  CHECK(validate_rep(zero, sk).ok);
}

TEST_CASE("identity matrices on a relation-free linear quiver pass") {
  PathModel fr = PathModel::free(1);
  SkeletonQuiver sk = build_skeleton(fr, integer_screen(0, 3), {.windowed = true});
  QuiverRep rep;
  rep.dims = {2, 2, 2};
  for (auto a : sk.arrows) rep.mats[a] = Mat::identity(2);
  CHECK(validate_rep(rep, sk).ok);
}

TEST_CASE("hom spaces and the Yoneda dimension count") {
  PathModel fr = PathModel::free(1);
  SkeletonQuiver sk = build_skeleton(fr, integer_screen(0, 4), {.windowed = true});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    QuiverRep m = random_linear_rep(rng, sk);
    REQUIRE(validate_rep(m, sk).ok);
    for (std::size_t v = 0; v < sk.size(); ++v) {
      QuiverRep pv = projective_rep(sk, v);
      CHECK(hom_space(pv, m, sk).dim == m.dims[v]);
    }
  }
}

TEST_CASE("simples on the two-vertex quiver") {
  PathModel fr = PathModel::free(1);
  SkeletonQuiver sk = build_skeleton(fr, integer_screen(0, 2), {.windowed = true});
  REQUIRE(sk.size() == 2);
  QuiverRep s1, s2;
  s1.dims = {1, 0};
  s2.dims = {0, 1};
  for (auto a : sk.arrows) {
    s1.mats[a] = Mat(0, 1);
    s2.mats[a] = Mat(1, 0);
  }
  CHECK(hom_space(s1, s2, sk).dim == 0);
  CHECK(hom_space(s1, s1, sk).dim == 1);
  CHECK(ext_dim(s1, s2, sk, 1) == 1);
  CHECK(ext_dim(s2, s1, sk, 1) == 0);
  CHECK(ext_dim(s1, s2, sk, 0) == hom_space(s1, s2, sk).dim);
  CHECK(ext_dim(s1, s1, sk, 0) == 1);
}

TEST_CASE("kernels and cokernels of trivial morphisms") {
  PathModel fr = PathModel::free(1);
  SkeletonQuiver sk = build_skeleton(fr, integer_screen(0, 3), {.windowed = true});
  std::mt19937 rng(9);
  QuiverRep m = random_linear_rep(rng, sk);

  RepMorphism id;
  for (std::size_t v = 0; v < sk.size(); ++v) id.comps.push_back(Mat::identity(m.dims[v]));
  auto ker = rep_kernel(id, m, m, sk);
  auto coker = rep_cokernel(id, m, m, sk);
  for (std::size_t v = 0; v < sk.size(); ++v) {
    CHECK(ker.rep.dims[v] == 0);
    CHECK(coker.rep.dims[v] == 0);
  }

  RepMorphism zero;
  for (std::size_t v = 0; v < sk.size(); ++v) zero.comps.push_back(Mat(m.dims[v], m.dims[v]));
  auto kz = rep_kernel(zero, m, m, sk);
  auto cz = rep_cokernel(zero, m, m, sk);
  for (std::size_t v = 0; v < sk.size(); ++v) {
    CHECK(kz.rep.dims[v] == m.dims[v]);
    CHECK(cz.rep.dims[v] == m.dims[v]);
  }
  CHECK(validate_rep(kz.rep, sk).ok);
  CHECK(validate_rep(cz.rep, sk).ok);
}

TEST_CASE("kernels and cokernels of step morphisms stay pixelated") {
  PathModel fr = PathModel::free(1);
  Screen coarse = integer_screen(0, 3);
  SkeletonQuiver fsk = build_skeleton(fr, half_integer_screen(0, 3), {.windowed = true});

  std::mt19937 rng(21);
  int tested = 0;
  for (int trial = 0; trial < 25; ++trial) {
    QuiverRep m = random_step_rep(rng, fsk, coarse);
    QuiverRep n = random_step_rep(rng, fsk, coarse);
    REQUIRE(validate_rep(m, fsk).ok);
    REQUIRE(is_pixelated(fsk, m, coarse).ok);
    HomSpace hs = hom_space(m, n, fsk);
    if (hs.dim == 0) continue;
    RepMorphism f = random_hom_element(rng, hs, m, n, fsk.size());
    REQUIRE(validate_morphism(f, m, n, fsk).ok);
    auto ker = rep_kernel(f, m, n, fsk);
    auto coker = rep_cokernel(f, m, n, fsk);
    CHECK(validate_rep(ker.rep, fsk).ok);
    CHECK(validate_rep(coker.rep, fsk).ok);
    CHECK(is_pixelated(fsk, ker.rep, coarse).ok);
    CHECK(is_pixelated(fsk, coker.rep, coarse).ok);
    ++tested;
  }
  CHECK(tested > 5);
}

TEST_CASE("pixelation detection") {
  PathModel fr = PathModel::free(1);
  Screen coarse = integer_screen(0, 2);
  SkeletonQuiver fsk = build_skeleton(fr, half_integer_screen(0, 2), {.windowed = true});
  REQUIRE(fsk.size() == 4);

  QuiverRep rep;
  rep.dims = {1, 1, 1, 1};
  for (auto a : fsk.arrows) rep.mats[a] = mat1(Rat(1));
  CHECK(is_pixelated(fsk, rep, coarse).ok);
  // a zero map inside a merged pixel breaks it
  rep.mats[{0, 1}] = mat1(Rat(0));
  CHECK_FALSE(is_pixelated(fsk, rep, coarse).ok);
}

TEST_CASE("pushdown and lift round trips") {
  PathModel fr = PathModel::free(1);
  Screen coarse_s = integer_screen(0, 3);
  SkeletonQuiver fine = build_skeleton(fr, half_integer_screen(0, 3), {.windowed = true});
  SkeletonQuiver coarse = build_skeleton(fr, coarse_s, {.windowed = true});

  std::mt19937 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    QuiverRep mbar = random_linear_rep(rng, coarse);
    QuiverRep step = lift(coarse, mbar, fine);
    REQUIRE(validate_rep(step, fine).ok);
    CHECK(is_pixelated(fine, step, coarse_s).ok);
    QuiverRep back = pushdown(fine, step, coarse);
    CHECK(back.dims == mbar.dims);
    for (auto a : coarse.arrows) CHECK(back.mat(a) == mbar.mat(a));

    // the identity components witness the isomorphism
    RepMorphism iso;
    for (std::size_t v = 0; v < coarse.size(); ++v) iso.comps.push_back(Mat::identity(mbar.dims[v]));
    CHECK(validate_morphism(iso, back, mbar, coarse).ok);
  }

  for (int trial = 0; trial < 20; ++trial) {
    QuiverRep m = random_step_rep(rng, fine, coarse_s);
    REQUIRE(validate_rep(m, fine).ok);
    QuiverRep down = pushdown(fine, m, coarse);
    QuiverRep again = lift(coarse, down, fine);
    // explicit isomorphism: transport along the fine path from the
    // initial sub-pixel of each coarse pixel
    RepMorphism iso;
    iso.comps.resize(fine.size());
    for (std::size_t v = 0; v < fine.size(); ++v) {
      PixelIndex up = coarse_pixel_of(fine.screen, coarse_s, fine.vertices[v]);
      std::size_t u = fine.vertex_ordinal(init_pixel(fine.screen, coarse_s, up));
      iso.comps[v] = u == v ? Mat::identity(m.dims[v]) : path_matrix(m, fine, u, v);
      CHECK(invertible(iso.comps[v]));
    }
    CHECK(validate_morphism(iso, again, m, fine).ok);
  }
}

TEST_CASE("pushdown of a one-pixel coarse screen keeps dimensions") {
  PathModel fr = PathModel::free(1);
  Screen coarse_s(std::vector<ScreenFactor>{
      ScreenFactor({{Rat(0), Boundary::Owner::Upper}, {Rat(2), Boundary::Owner::Upper}})});
  SkeletonQuiver fine = build_skeleton(fr, integer_screen(0, 2), {.windowed = true});
  SkeletonQuiver coarse = build_skeleton(fr, coarse_s, {.windowed = true});
  REQUIRE(coarse.size() == 1);

  QuiverRep m;
  m.dims = {2, 2};
  Mat iso(2, 2);
  iso.at(0, 1) = 1;
  iso.at(1, 0) = 1;
  m.mats[{0, 1}] = iso;
  REQUIRE(is_pixelated(fine, m, coarse_s).ok);
  QuiverRep down = pushdown(fine, m, coarse);
  CHECK(down.dims == std::vector<std::size_t>{2});
}

TEST_CASE("lifting across chain-model screens zeroes newly dead pixels") {
  // refining an n=2 chain screen makes some fine pixels alive whose coarse
  // pixel is dead; the lift puts nothing there
  PathModel aus = PathModel::aus(2);
  auto aus_factor = [](std::vector<Rat> cuts) {
    std::vector<Boundary> bs{{Rat(0), Boundary::Owner::Lower}};
    for (const auto& a : cuts) bs.push_back({a, Boundary::Owner::Upper});
    bs.push_back({Rat(1), Boundary::Owner::Upper});
    return ScreenFactor(bs);
  };
  Screen fine_s(std::vector<ScreenFactor>(2, aus_factor({Rat(1, 4), Rat(1, 2), Rat(3, 4)})));
  Screen coarse_s(std::vector<ScreenFactor>(2, aus_factor({Rat(1, 2)})));
  SkeletonQuiver fine = build_skeleton(aus, fine_s);
  SkeletonQuiver coarse = build_skeleton(aus, coarse_s);
  REQUIRE(coarse.size() == 1);  // only the pixel ((0,1/2),[1/2,1)) survives

  QuiverRep mbar;
  mbar.dims = {2};
  QuiverRep step = lift(coarse, mbar, fine);
  REQUIRE(validate_rep(step, fine).ok);
  CHECK(is_pixelated(fine, step, coarse_s).ok);
  // a fine pixel inside the dead coarse diagonal carries nothing
  std::size_t diag = fine.vertex_ordinal({1, 2});  // (0,1/4) x [1/4,1/2)
  CHECK(step.dims[diag] == 0);
  // the initial sub-pixel of the surviving coarse pixel carries the value
  std::size_t init = fine.vertex_ordinal(init_pixel(fine_s, coarse_s, coarse.vertices[0]));
  CHECK(step.dims[init] == 2);
  QuiverRep back = pushdown(fine, step, coarse);
  CHECK(back.dims == mbar.dims);
}

TEST_CASE("exact linear algebra is reproducible") {
  std::mt19937 rng(41);
  Mat a = random_mat(rng, 6, 5);
  auto r1 = rref(a);
  auto r2 = rref(a);
  CHECK(r1.mat == r2.mat);
  CHECK(r1.pivot_cols == r2.pivot_cols);
}
