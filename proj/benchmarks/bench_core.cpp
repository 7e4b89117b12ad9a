#include <benchmark/benchmark.h>

#include "crg/steinberg.hpp"

namespace {

using namespace crg;

void BM_CycloMul(benchmark::State& state) {
  const RingTag ring(6);
  CycloScalar x(ring, Rational(3, 7), Rational(-5, 11));
  const CycloScalar y(ring, Rational(2, 3), Rational(1, 5));
  for (auto _ : state) {
    x = x * y;
    x = x * y.inverse();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_CycloMul);

void BM_FixedSpace(benchmark::State& state) {
  const RingTag ring(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<int> perm(n), exps(n, 1);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>((i + 1) % n);
  Vector t(ring, n);
  t[0] = CycloScalar(ring, 1, 2);
  const AffineMap g{MonomialMatrix(ring, perm, exps), t};
  for (auto _ : state) benchmark::DoNotOptimize(fixed_space(g));
}
BENCHMARK(BM_FixedSpace)->Arg(2)->Arg(3)->Arg(4);

void BM_LatticeContains(benchmark::State& state) {
  const GroupSpec w = build_group(parse_group_id("[G(6,2,2)]_2"));
  const RingTag ring = w.ring;
  const Vector v(ring, {ParamScalar(CycloScalar(ring, 3, -1)), ParamScalar(CycloScalar(ring, -2, 4))});
  for (auto _ : state) benchmark::DoNotOptimize(w.lattice.contains(v));
}
BENCHMARK(BM_LatticeContains);

void BM_VerifyElement(benchmark::State& state) {
  const Arrangement arr(build_group(parse_group_id("[G(3,1,2)]_2")));
  const AffineMap g = *arr.group().counterexample;
  for (auto _ : state) benchmark::DoNotOptimize(verify_element(arr, g));
}
BENCHMARK(BM_VerifyElement);

void BM_Sweep(benchmark::State& state) {
  const Arrangement arr(build_group(parse_group_id("[G(4,1,2)]_2")));
  SweepOptions opts;
  opts.bound = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(arr, opts).examined);
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
