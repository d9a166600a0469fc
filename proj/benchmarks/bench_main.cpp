#include <benchmark/benchmark.h>

#include <vector>

#include "steinberg/models.hpp"
#include "steinberg/numtheory.hpp"
#include "steinberg/polyalg/ideal.hpp"
#include "steinberg/polyalg/resolution.hpp"
#include "steinberg/weyl.hpp"

using namespace steinberg;

namespace {

// A fresh ideal each iteration so the cached basis never short-circuits the
// measurement.
void BM_groebner_longest_cell(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    polyalg::Ideal ideal = models::iw0_gl3();
    state.ResumeTiming();
    benchmark::DoNotOptimize(ideal.groebner());
  }
}
BENCHMARK(BM_groebner_longest_cell);

void BM_free_resolution_coordinate_ideal(benchmark::State& state) {
  const auto ring = polyalg::make_ring({"x", "y", "z"});
  for (auto _ : state) {
    polyalg::Ideal ideal(ring, polyalg::parse_polys(ring, {"x", "y", "z"}));
    benchmark::DoNotOptimize(polyalg::free_resolution(ideal));
  }
}
BENCHMARK(BM_free_resolution_coordinate_ideal);

void BM_dualizing_fiber_origin(benchmark::State& state) {
  const std::vector<polyalg::Rat> origin(6, 0);
  for (auto _ : state) benchmark::DoNotOptimize(models::omega_fiber(origin));
}
BENCHMARK(BM_dualizing_fiber_origin);

void BM_bruhat_order_s4(benchmark::State& state) {
  const auto all = weyl::all_perms(4);
  for (auto _ : state) {
    long count = 0;
    for (const auto& a : all)
      for (const auto& b : all)
        if (weyl::bruhat_leq_subword(a, b)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_bruhat_order_s4);

void BM_reflection_length_s5(benchmark::State& state) {
  const auto all = weyl::all_perms(5);
  for (auto _ : state) {
    long total = 0;
    for (const auto& p : all) total += p.reflection_length();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_reflection_length_s5);

void BM_frobenius_quartic(benchmark::State& state) {
  const auto f = numtheory::ZPoly::parse("x^4 - 12*x^2 + 64");
  for (auto _ : state) benchmark::DoNotOptimize(numtheory::frobenius_power(f, 10007));
}
BENCHMARK(BM_frobenius_quartic);

}  // namespace

BENCHMARK_MAIN();
