#include "pixcat/skeleton.hpp"

#include "pixcat/parallel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pixcat {

namespace {

void check_screen_model(const PathModel& m, const Screen& s) {
  if (m.dimension != s.dimension())
    throw input_error("screen dimension does not match model dimension");
}

}  // namespace

bool pixel_dead(const PathModel& m, const Screen& s, const PixelIndex& ix) {
  check_screen_model(m, s);
  auto box = s.pixel_box(ix);
  switch (m.predicate.kind) {
    case NonzeroPredicate::Kind::Free:
      return false;
    case NonzeroPredicate::Kind::MaxLength:
      // an in-pixel morphism of length >= d dies, making the pixel pre-dead
      return contains_span_at_least(box[0], m.predicate.max_length);
    case NonzeroPredicate::Kind::AuslanderChain: {
      if (!all_above(box[0], Rat(0))) return true;
      for (std::size_t k = 0; k + 1 < box.size(); ++k)
        if (!separated_lt(box[k], box[k + 1])) return true;
      return !all_below(box.back(), Rat(1));
    }
  }
  return false;
}

std::vector<PixelIndex> dead_pixels(const PathModel& m, const Screen& s) {
  std::vector<PixelIndex> out;
  for (const auto& ix : s.all_pixels())
    if (pixel_dead(m, s, ix)) out.push_back(ix);
  return out;
}

bool skeleton_hom(const PathModel& m, const Screen& s, const PixelIndex& i, const PixelIndex& j) {
  check_screen_model(m, s);
  if (pixel_dead(m, s, i) || pixel_dead(m, s, j))
    throw input_error("skeleton_hom: dead input pixel " +
                      fmt_pixel_index(pixel_dead(m, s, i) ? i : j));
  auto I = s.pixel_box(i);
  auto J = s.pixel_box(j);
  switch (m.predicate.kind) {
    case NonzeroPredicate::Kind::Free:
      for (std::size_t k = 0; k < I.size(); ++k)
        if (!exists_leq_pair(I[k], J[k])) return false;
      return true;
    case NonzeroPredicate::Kind::MaxLength:
      return exists_leq_pair(I[0], J[0]) && span_below(I[0], J[0], m.predicate.max_length);
    case NonzeroPredicate::Kind::AuslanderChain: {
      if (!all_above(I[0], Rat(0))) return false;
      if (!all_below(J.back(), Rat(1))) return false;
      for (std::size_t k = 0; k < I.size(); ++k) {
        if (!exists_leq_pair(I[k], J[k])) return false;
        if (k + 1 < I.size() && !separated_lt(J[k], I[k + 1])) return false;
      }
      return true;
    }
  }
  return false;
}

std::optional<std::size_t> SkeletonQuiver::find_vertex(const PixelIndex& ix) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), ix);
  if (it == vertices.end() || *it != ix) return std::nullopt;
  return (std::size_t)(it - vertices.begin());
}

std::size_t SkeletonQuiver::vertex_ordinal(const PixelIndex& ix) const {
  auto v = find_vertex(ix);
  if (!v) throw input_error("pixel " + fmt_pixel_index(ix) + " is not a skeleton vertex");
  return *v;
}

FiniteThinCategory SkeletonQuiver::to_thin_category() const {
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (const auto& ix : vertices) names.push_back(fmt_pixel_index(ix));
  return FiniteThinCategory(names, hom);
}

SkeletonQuiver build_skeleton(const PathModel& m, const Screen& s, SkeletonOptions opts) {
  check_screen_model(m, s);
  SkeletonQuiver q;
  q.screen = s;
  for (const auto& ix : s.all_pixels()) {
    if (pixel_dead(m, s, ix)) continue;
    if (opts.windowed && !s.pixel_bounded(ix)) continue;
    q.vertices.push_back(ix);
  }
  std::sort(q.vertices.begin(), q.vertices.end());

  const std::size_t n = q.vertices.size();
  q.hom.assign(n, std::vector<int>(n, 0));
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      q.hom[a][b] = skeleton_hom(m, s, q.vertices[a], q.vertices[b]) ? 1 : 0;
  });

  q.samples.reserve(n);
  for (const auto& ix : q.vertices) q.samples.push_back(sample_point(s, ix));

  auto adjacent = [&](std::size_t a, std::size_t b) {
    const auto& u = q.vertices[a];
    const auto& v = q.vertices[b];
    bool moved = false;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (v[k] == u[k]) continue;
      if (v[k] != u[k] + 1) return false;
      moved = true;
    }
    return moved;
  };

  std::vector<std::pair<std::size_t, std::size_t>> all_arrows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (q.hom[a][b] && adjacent(a, b)) all_arrows.push_back({a, b});

  if (!opts.prune) {
    q.arrows = std::move(all_arrows);
    return q;
  }
  std::set<std::pair<std::size_t, std::size_t>> arrow_set(all_arrows.begin(), all_arrows.end());
  for (auto [a, b] : all_arrows) {
    bool composite = false;
    for (std::size_t v = 0; v < n && !composite; ++v)
      composite = v != a && v != b && arrow_set.count({a, v}) && arrow_set.count({v, b}) &&
                  q.hom[a][v] && q.hom[v][b];
    (composite ? q.pruned_arrows : q.arrows).push_back({a, b});
  }
  return q;
}

namespace {

// fine hom-path between two fine vertices: BFS over arrows, restricted to
// intermediate vertices that keep the hom bits alive
std::optional<std::vector<std::size_t>> arrow_path(const SkeletonQuiver& sk, std::size_t from,
                                                   std::size_t to) {
  if (from == to) return std::vector<std::size_t>{from};
  if (!sk.hom[from][to]) return std::nullopt;
  std::vector<std::size_t> prev(sk.size(), SIZE_MAX);
  std::deque<std::size_t> queue{from};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto [a, b] : sk.arrows) {
      if (a != cur || prev[b] != SIZE_MAX || b == from) continue;
      if (!sk.hom[from][b] || !sk.hom[b][to]) continue;  // factorization closure
      prev[b] = cur;
      if (b == to) {
        std::vector<std::size_t> path{to};
        for (std::size_t v = to; v != from; v = prev[v]) path.push_back(prev[v]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(b);
    }
  }
  return std::nullopt;
}

}  // namespace

InitFunctorResult init_functor(const PathModel& m, const Screen& fine, const Screen& coarse,
                               SkeletonOptions opts) {
  if (refinement_relation(fine, coarse) != RefinementKind::FinitaryRefinement)
    throw input_error("init_functor: first screen must finitarily refine the second");
  InitFunctorResult res;
  res.fine = build_skeleton(m, fine, opts);
  res.coarse = build_skeleton(m, coarse, opts);

  res.vertex_map.resize(res.coarse.size());
  for (std::size_t u = 0; u < res.coarse.size(); ++u) {
    PixelIndex sub = init_pixel(fine, coarse, res.coarse.vertices[u]);
    auto v = res.fine.find_vertex(sub);
    if (!v) {
      res.ok = false;
      res.witness = "initial sub-pixel " + fmt_pixel_index(sub) + " of " +
                    fmt_pixel_index(res.coarse.vertices[u]) + " is not alive in the fine skeleton";
      return res;
    }
    res.vertex_map[u] = *v;
  }

  // functoriality: every coarse hom must be realized between the images
  for (std::size_t u = 0; u < res.coarse.size(); ++u)
    for (std::size_t w = 0; w < res.coarse.size(); ++w) {
      if (!res.coarse.hom[u][w]) continue;
      if (!res.fine.hom[res.vertex_map[u]][res.vertex_map[w]]) {
        res.ok = false;
        res.witness = "coarse hom " + fmt_pixel_index(res.coarse.vertices[u]) + " -> " +
                      fmt_pixel_index(res.coarse.vertices[w]) +
                      " has no fine hom between the initial sub-pixels";
        return res;
      }
    }

  for (auto [u, w] : res.coarse.arrows) {
    auto path = arrow_path(res.fine, res.vertex_map[u], res.vertex_map[w]);
    if (!path) {
      res.ok = false;
      res.witness = "no fine arrow path realizes the coarse arrow " +
                    fmt_pixel_index(res.coarse.vertices[u]) + " -> " +
                    fmt_pixel_index(res.coarse.vertices[w]);
      return res;
    }
    res.arrow_paths.push_back(std::move(*path));
  }
  return res;
}

namespace {

SheafCheckResult equalizer_core(const PathModel& m, const std::vector<Screen>& screens,
                                const Screen& joined,
                                const std::vector<std::vector<std::size_t>>* forced_maps) {
  SheafCheckResult res;
  if (screens.empty()) throw input_error("sheaf check needs at least one screen");

  // preconditions: screens refine the join, and assemble to it
  for (const auto& p : screens)
    if (refinement_relation(p, joined) != RefinementKind::FinitaryRefinement)
      throw input_error("sheaf check: every screen must finitarily refine the join");
  Screen folded = screens[0];
  for (std::size_t i = 1; i < screens.size(); ++i) {
    auto jr = screen_join(folded, screens[i]);
    if (!jr.is_screen) throw input_error("sheaf check: cover join is not a screen: " + jr.reason);
    folded = jr.screen;
  }
  if (!(folded == joined)) throw input_error("sheaf check: joined screen is not the cover's join");

  SkeletonQuiver top = build_skeleton(m, joined);
  std::vector<SkeletonQuiver> skels;
  for (const auto& p : screens) skels.push_back(build_skeleton(m, p));

  std::vector<std::vector<std::size_t>> maps;  // joined ordinal -> skels[i] ordinal
  if (forced_maps) {
    maps = *forced_maps;
    if (maps.size() != screens.size()) throw input_error("sheaf check: one map per screen required");
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (maps[i].size() != top.size()) throw input_error("sheaf check: map size mismatch");
  } else {
    for (std::size_t i = 0; i < screens.size(); ++i) {
      std::vector<std::size_t> vm(top.size());
      for (std::size_t u = 0; u < top.size(); ++u)
        vm[u] = skels[i].vertex_ordinal(init_pixel(screens[i], joined, top.vertices[u]));
      maps.push_back(std::move(vm));
    }
  }

  // pairwise meets and their Init images
  std::vector<std::vector<SkeletonQuiver>> meets(screens.size());
  std::vector<std::vector<std::vector<std::size_t>>> into_meet(screens.size());
  for (std::size_t a = 0; a < screens.size(); ++a) {
    meets[a].resize(screens.size());
    into_meet[a].resize(screens.size());
    for (std::size_t b = 0; b < screens.size(); ++b) {
      Screen pm = meet(screens[a], screens[b]);
      meets[a][b] = build_skeleton(m, pm);
      auto& vm = into_meet[a][b];
      vm.resize(skels[a].size());
      for (std::size_t u = 0; u < skels[a].size(); ++u)
        vm[u] = meets[a][b].vertex_ordinal(init_pixel(pm, screens[a], skels[a].vertices[u]));
    }
  }

  auto tuple_consistent = [&](const std::vector<std::size_t>& tup) {
    for (std::size_t a = 0; a < screens.size(); ++a)
      for (std::size_t b = 0; b < screens.size(); ++b) {
        // pr0 lands components via Init_a, pr1 via Init_b; both in skel(a meet b)
        Screen pm = meet(screens[a], screens[b]);
        std::size_t lhs = into_meet[a][b][tup[a]];
        std::size_t rhs = meets[a][b]
                              .vertex_ordinal(init_pixel(pm, screens[b], skels[b].vertices[tup[b]]));
        if (lhs != rhs) return false;
      }
    return true;
  };

  // image of the join's vertices must be exactly the consistent tuples
  std::set<std::vector<std::size_t>> image;
  for (std::size_t u = 0; u < top.size(); ++u) {
    std::vector<std::size_t> tup(screens.size());
    for (std::size_t i = 0; i < screens.size(); ++i) tup[i] = maps[i][u];
    if (!tuple_consistent(tup)) {
      res.ok = false;
      res.witness = "image of join pixel " + fmt_pixel_index(top.vertices[u]) +
                    " disagrees on a pairwise meet";
      return res;
    }
    if (!image.insert(tup).second) {
      res.ok = false;
      res.witness = "two join pixels share the same cover tuple";
      return res;
    }
  }

  std::vector<std::size_t> tup(screens.size(), 0);
  for (;;) {
    if (tuple_consistent(tup) && !image.count(tup)) {
      res.ok = false;
      std::string t;
      for (std::size_t i = 0; i < screens.size(); ++i)
        t += (i ? "," : "") + fmt_pixel_index(skels[i].vertices[tup[i]]);
      res.witness = "consistent tuple (" + t + ") is not the image of any join pixel";
      return res;
    }
    std::size_t k = 0;
    for (; k < screens.size(); ++k) {
      if (++tup[k] < skels[k].size()) break;
      tup[k] = 0;
    }
    if (k == screens.size()) break;
  }

  // hom bits: a joined hom is exactly a hom in every component
  for (std::size_t u = 0; u < top.size(); ++u)
    for (std::size_t w = 0; w < top.size(); ++w) {
      bool all = true;
      for (std::size_t i = 0; i < screens.size(); ++i)
        all = all && skels[i].hom[maps[i][u]][maps[i][w]];
      if ((top.hom[u][w] != 0) != all) {
        res.ok = false;
        res.witness = "hom bit mismatch at join pair " + fmt_pixel_index(top.vertices[u]) + " -> " +
                      fmt_pixel_index(top.vertices[w]);
        return res;
      }
    }
  return res;
}

}  // namespace

SheafCheckResult sheaf_equalizer_check(const PathModel& m, const std::vector<Screen>& screens,
                                       const Screen& joined) {
  return equalizer_core(m, screens, joined, nullptr);
}

SheafCheckResult sheaf_equalizer_check_with_maps(
    const PathModel& m, const std::vector<Screen>& screens, const Screen& joined,
    const std::vector<std::vector<std::size_t>>& maps) {
  return equalizer_core(m, screens, joined, &maps);
}

namespace {

// corner/midpoint samples of one factor interval, widened on unbounded
// pixels so the finite model witnesses their extent; for MaxLength the
// samples form a ladder with steps < d so in-pixel reach is faithful
std::vector<Rat> factor_samples(const PathModel& m, const Interval& I) {
  const bool aus = m.predicate.kind == NonzeroPredicate::Kind::AuslanderChain;
  const bool ml = m.predicate.kind == NonzeroPredicate::Kind::MaxLength;
  const Rat wide = ml ? m.predicate.max_length + 1 : Rat(2);

  std::vector<Rat> out;
  auto ladder = [&](const Rat& lo, const Rat& hi) {
    out.push_back(lo);
    if (ml) {
      Rat step = m.predicate.max_length / 2;
      for (Rat v = lo + step; v < hi; v += step) out.push_back(v);
    } else {
      out.push_back((lo + hi) / 2);
    }
    out.push_back(hi);
  };

  if (I.lo.is_finite() && I.hi.is_finite()) {
    Rat w = I.hi.value - I.lo.value;
    if (w == 0) return {I.lo.value};
    Rat eps = std::min(w, Rat(1)) / 32;
    ladder(I.lo_closed ? I.lo.value : I.lo.value + eps,
           I.hi_closed ? I.hi.value : I.hi.value - eps);
  } else if (I.hi.is_finite()) {
    Rat b = I.hi_closed ? I.hi.value : I.hi.value - Rat(1, 32);
    Rat far = b - wide;
    ladder(far, b);
    if (aus) out.push_back(far < -1 ? far : Rat(-1));
  } else if (I.lo.is_finite()) {
    Rat a = I.lo_closed ? I.lo.value : I.lo.value + Rat(1, 32);
    Rat far = a + wide;
    ladder(a, far);
    if (aus) out.push_back(far > 2 ? far : Rat(2));
  } else {
    ladder(Rat(0) - wide, wide);
    out.push_back(Rat(0));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SampledModel sampled_model_category(const PathModel& m, const Screen& s) {
  check_screen_model(m, s);
  SampledModel sm;
  for (const auto& ix : s.all_pixels()) {
    auto box = s.pixel_box(ix);
    std::vector<std::vector<Rat>> coords;
    for (std::size_t k = 0; k < box.size(); ++k) coords.push_back(factor_samples(m, box[k]));
    std::vector<std::size_t> odo(coords.size(), 0);
    for (;;) {
      Point p;
      for (std::size_t k = 0; k < coords.size(); ++k) p.push_back(coords[k][odo[k]]);
      sm.points.push_back(std::move(p));
      sm.pixel_of_point.push_back(ix);
      std::size_t k = 0;
      for (; k < coords.size(); ++k) {
        if (++odo[k] < coords[k].size()) break;
        odo[k] = 0;
      }
      if (k == coords.size()) break;
    }
  }

  const std::size_t n = sm.points.size();
  std::vector<std::vector<int>> hom(n, std::vector<int>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      hom[u][v] = hom_nonzero(m, sm.points[u], sm.points[v]) ? 1 : 0;

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : sm.points) names.push_back(fmt_point(p));
  sm.cat = FiniteThinCategory(std::move(names), std::move(hom));

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && sm.pixel_of_point[u] == sm.pixel_of_point[v] && sm.cat.hom(u, v))
        sm.sigma.push_back({u, v});
  return sm;
}

OracleAgreement oracle_equivalence_check(const PathModel& m, const Screen& s) {
  OracleAgreement res;
  SampledModel sm = sampled_model_category(m, s);
  LocalizedCategory loc = localization_oracle(sm.cat, sm.sigma);

  // Alive pixels form exactly one surviving class; a dead pixel is
  // witnessed by at least one dead class among its samples (a zero object
  // or a killed in-pixel morphism).
  std::map<PixelIndex, std::set<std::size_t>> classes_of_pixel;
  for (std::size_t i = 0; i < sm.points.size(); ++i)
    classes_of_pixel[sm.pixel_of_point[i]].insert(loc.class_of[i]);

  for (const auto& ix : s.all_pixels()) {
    const auto& cls = classes_of_pixel.at(ix);
    bool oracle_kill = false;
    for (auto c : cls) oracle_kill = oracle_kill || loc.dead[c];
    bool symbolic_dead = pixel_dead(m, s, ix);
    if (symbolic_dead != oracle_kill) {
      res.ok = false;
      res.witness = "pixel " + fmt_pixel_index(ix) + ": symbolic " +
                    (symbolic_dead ? "dead" : "alive") + ", oracle disagrees";
      return res;
    }
    if (!symbolic_dead && cls.size() != 1) {
      res.ok = false;
      res.witness = "alive pixel " + fmt_pixel_index(ix) + " shatters into several oracle classes";
      return res;
    }
  }

  std::vector<PixelIndex> alive;
  for (const auto& ix : s.all_pixels())
    if (!pixel_dead(m, s, ix)) alive.push_back(ix);
  for (const auto& i : alive)
    for (const auto& j : alive) {
      bool sym = skeleton_hom(m, s, i, j);
      std::size_t ci = *classes_of_pixel.at(i).begin();
      std::size_t cj = *classes_of_pixel.at(j).begin();
      bool orc = loc.hom[ci][cj] != 0;
      ++res.pairs_checked;
      if (sym != orc) {
        res.ok = false;
        res.witness = "hom(" + fmt_pixel_index(i) + "," + fmt_pixel_index(j) + "): symbolic " +
                      std::to_string(sym) + ", oracle " + std::to_string(orc);
        return res;
      }
    }
  return res;
}

}  // namespace pixcat
