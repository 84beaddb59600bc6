#include <benchmark/benchmark.h>

#include <random>

#include "padic/irred.hpp"
#include "padic/poly.hpp"
#include "padic/polygon.hpp"

namespace {

using namespace padic;

void BM_ComposeExpIterate(benchmark::State& state) {
  const Polynomial f = taylor_exp(4);
  const Polynomial g = iterate(parse_polynomial("x^5 + 8"), static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
  state.SetLabel("degree " + std::to_string(4 * *g.degree()));
}
BENCHMARK(BM_ComposeExpIterate)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NewtonPolygonTaylor(benchmark::State& state) {
  const Polynomial f = taylor_exp(static_cast<unsigned long>(state.range(0)));
  const Prime p(2);
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon(f, p));
}
BENCHMARK(BM_NewtonPolygonTaylor)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_LowerConvexHull(benchmark::State& state) {
  std::mt19937_64 engine(1);
  std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
  std::vector<Point> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& pt : pts) pt = {coord(engine), coord(engine)};
  for (auto _ : state) benchmark::DoNotOptimize(lower_convex_hull(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LowerConvexHull)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_CertifyTaylor(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const Polynomial f = taylor_exp(n);
  const auto primes = prime_divisors(n);
  for (auto _ : state) benchmark::DoNotOptimize(certify_irreducible(f, primes));
}
BENCHMARK(BM_CertifyTaylor)->Arg(60)->Arg(360)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
