#include <benchmark/benchmark.h>

#include <random>

#include "toricreal/chambers.hpp"
#include "toricreal/cstar.hpp"
#include "toricreal/realize.hpp"

using namespace toricreal;

namespace {

std::vector<RatVector> random_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i < count; ++i) {
    RatVector p(dim);
    for (auto& x : p) x = coord(rng);
    pts.push_back(std::move(p));
  }
  return pts;
}

ToricVariety batyrev() {
  std::vector<PrimitiveRelation> rels;
  for (const char* r : {"v1 + v7 = 0", "v2 + v3 + v4 = v1", "v4 + v5 + v6 = 2v1", "v5 + v6 + v7 = v2 + v3",
                        "v1 + v2 + v3 = v5 + v6"})
    rels.push_back(parse_primitive_relation(r, 7));
  return from_primitive_relations(rels);
}

Divisor divisor(std::initializer_list<int> xs) {
  Divisor D;
  for (int x : xs) D.emplace_back(x);
  return D;
}

void ConvexHull(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto pts = random_points(dim, static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(Polytope::from_vertices(pts, dim));
}
BENCHMARK(ConvexHull)->Args({3, 40})->Args({4, 40})->Args({5, 30})->Unit(benchmark::kMillisecond);

void MinkowskiSum(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Polytope P = Polytope::from_vertices(random_points(dim, 20, 11), dim);
  const Polytope Q = Polytope::from_vertices(random_points(dim, 20, 13), dim);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(P, Q));
}
BENCHMARK(MinkowskiSum)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void SecondaryFan(benchmark::State& state) {
  const ToricVariety Y = batyrev();
  for (auto _ : state) benchmark::DoNotOptimize(secondary_fan(Y));
}
BENCHMARK(SecondaryFan)->Unit(benchmark::kMillisecond);

void RealizationReport(benchmark::State& state) {
  const ToricVariety Y = batyrev();
  const Divisor A = divisor({1, 0, 0, 0, 0, 2, 1});
  const Divisor B = divisor({1, 2, 0, 0, 0, 0, 1});
  for (auto _ : state) {
    Realization G = geometric_realization(Y, A, B, 1);
    benchmark::DoNotOptimize(render_text(action_info(G.polytope, G.u)));
  }
}
BENCHMARK(RealizationReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
