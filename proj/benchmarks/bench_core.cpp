#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "hypertile/formulas.hpp"
#include "hypertile/isoperimetry.hpp"
#include "hypertile/polygon.hpp"
#include "hypertile/tiling.hpp"

using namespace hypertile;
constexpr double pi = std::numbers::pi;

namespace {

std::vector<HPoint> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<HPoint> pts(n);
  for (HPoint& p : pts) {
    const double r = 0.9 * std::sqrt(unit(rng));
    const double a = 2.0 * pi * unit(rng);
    p = {r * std::cos(a), r * std::sin(a)};
  }
  return pts;
}

}  // namespace

static void BM_dist(benchmark::State& state) {
  const auto pts = random_points(256, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist(pts[i % 256], pts[(i + 7) % 256]));
    ++i;
  }
}
BENCHMARK(BM_dist);

static void BM_angle_at(benchmark::State& state) {
  const auto pts = random_points(256, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(angle_at(pts[i % 256], pts[(i + 5) % 256], pts[(i + 9) % 256]));
    ++i;
  }
}
BENCHMARK(BM_angle_at);

static void BM_heron(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(heron_area(0.8, 0.9, 1.1));
  }
}
BENCHMARK(BM_heron);

static void BM_regular_perimeter(benchmark::State& state) {
  double k = 6.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_k(k));
    k = k < 60.0 ? k + 0.5 : 6.5;
  }
}
BENCHMARK(BM_regular_perimeter);

static void BM_area_fixed_perimeter(benchmark::State& state) {
  double n = 2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(area_fixed_perimeter(n, 3.96));
    n = n < 200.0 ? n + 0.25 : 2.5;
  }
}
BENCHMARK(BM_area_fixed_perimeter);

static void BM_convex_hull(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convex_hull(pts));
  }
}
BENCHMARK(BM_convex_hull)->Arg(16)->Arg(64)->Arg(256);

static void BM_realize_regular(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_regular(static_cast<int>(state.range(0)), 2 * pi / 3));
  }
}
BENCHMARK(BM_realize_regular)->Arg(7)->Arg(50);

static void BM_signed_area(benchmark::State& state) {
  const Polygon p = realize_regular(static_cast<int>(state.range(0)), 2 * pi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(signed_area(p.vertices()));
  }
}
BENCHMARK(BM_signed_area)->Arg(7)->Arg(20);

static void BM_generate_patch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_patch(7, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_generate_patch)->Arg(1)->Arg(2);

static void BM_klein_quartic_audits(benchmark::State& state) {
  const TilingGraph t = klein_quartic_fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_bonnet_audit(t));
    benchmark::DoNotOptimize(degree_audit(t, 7.0));
    benchmark::DoNotOptimize(hull_cover_audit(t, 7.0));
  }
}
BENCHMARK(BM_klein_quartic_audits);

static void BM_verify_doubling(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_doubling(7.0, 400.0, 0.25));
  }
}
BENCHMARK(BM_verify_doubling);

BENCHMARK_MAIN();
