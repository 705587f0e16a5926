#include <benchmark/benchmark.h>

#include "pixcat/auslander.hpp"
#include "pixcat/oracle.hpp"
#include "pixcat/rep.hpp"

using namespace pixcat;

namespace {

std::vector<Rat> uniform_cuts(int count, int denom) {
  std::vector<Rat> cuts;
  for (int k = 1; k <= count; ++k) cuts.push_back(Rat(k, denom));
  return cuts;
}

void BM_skeleton_aus2(benchmark::State& state) {
  AusScreen as(2, uniform_cuts((int)state.range(0), (int)state.range(0) + 1));
  Screen s = as.to_screen();
  PathModel m = PathModel::aus(2);
  for (auto _ : state) {
    SkeletonQuiver q = build_skeleton(m, s);
    benchmark::DoNotOptimize(q.hom.size());
  }
}
BENCHMARK(BM_skeleton_aus2)->Arg(5)->Arg(9)->Arg(13);

void BM_localization_oracle(benchmark::State& state) {
  AusScreen as(2, uniform_cuts(2, 3));
  SampledModel sm = sampled_model_category(PathModel::aus(2), as.to_screen());
  for (auto _ : state) {
    LocalizedCategory loc = localization_oracle(sm.cat, sm.sigma);
    benchmark::DoNotOptimize(loc.classes.size());
  }
}
BENCHMARK(BM_localization_oracle);

void BM_rref(benchmark::State& state) {
  const std::size_t n = (std::size_t)state.range(0);
  Mat a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.at(r, c) = Rat((long long)(r * 7 + c * 3 + 1), (long long)(1 + (r + c) % 5));
  for (auto _ : state) {
    auto rr = rref(a);
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_theorem_b(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = theoremB_check(2, (unsigned)state.range(0));
    benchmark::DoNotOptimize(rep.pairs_checked);
  }
}
BENCHMARK(BM_theorem_b)->Arg(8)->Arg(10);

void BM_ext_dim(benchmark::State& state) {
  AusScreen as(2, uniform_cuts(3, 4));
  SkeletonQuiver sk = build_skeleton(PathModel::aus(2), as.to_screen());
  QuiverRep m = interval_module(IntervalModuleSpec({Rat(1, 4), Rat(1, 2)}, Rat(3, 4)), as, sk);
  QuiverRep n = interval_module(IntervalModuleSpec({Rat(1, 2), Rat(3, 4)}, Rat(1)), as, sk);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext_dim(m, n, sk, 1));
  }
}
BENCHMARK(BM_ext_dim);

}  // namespace

BENCHMARK_MAIN();
