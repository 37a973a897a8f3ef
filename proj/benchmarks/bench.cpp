#include <benchmark/benchmark.h>

#include "polyhopf/polygon.hpp"
#include "polyhopf/spin.hpp"

using namespace polyhopf;

static void BM_octonion_mul(benchmark::State& state) {
  RandomStream rng(1);
  const AlgebraElement a = rng.gaussian_element(Algebra::octonion);
  const AlgebraElement b = rng.gaussian_element(Algebra::octonion);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_octonion_mul);

static void BM_hopf_phi(benchmark::State& state) {
  RandomStream rng(2);
  const Spinor v(rng.gaussian_element(Algebra::octonion),
                 rng.gaussian_element(Algebra::octonion));
  for (auto _ : state) benchmark::DoNotOptimize(hopf_phi(v));
}
BENCHMARK(BM_hopf_phi);

static void BM_hopf_preimage(benchmark::State& state) {
  RandomStream rng(3);
  const HopfImage target(rng.gaussian(), rng.gaussian_element(Algebra::octonion));
  const UnitElement theta(rng.unit_element(Algebra::octonion));
  for (auto _ : state) benchmark::DoNotOptimize(hopf_preimage(target, theta));
}
BENCHMARK(BM_hopf_preimage);

static void BM_generator_apply(benchmark::State& state) {
  RandomStream rng(4);
  const SpinGenerator g = SpinGenerator::random(rng);
  const Spinor v(rng.gaussian_element(Algebra::octonion),
                 rng.gaussian_element(Algebra::octonion));
  for (auto _ : state) benchmark::DoNotOptimize(generator_apply(g, v));
}
BENCHMARK(BM_generator_apply);

static void BM_word_rotation(benchmark::State& state) {
  RandomStream rng(5);
  const GeneratorWord w = random_word(6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(word_rotation(w));
}
BENCHMARK(BM_word_rotation);

static void BM_sample_stiefel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  RandomStream rng(6);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_stiefel(Algebra::octonion, k, rng));
}
BENCHMARK(BM_sample_stiefel)->Arg(8)->Arg(64);

static void BM_phi_k(benchmark::State& state) {
  RandomStream rng(7);
  const StiefelFrame X = sample_stiefel(Algebra::octonion, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(phi_k(X));
}
BENCHMARK(BM_phi_k);

static void BM_quotient_invariant(benchmark::State& state) {
  RandomStream rng(8);
  const PolygonConfig p = phi_k(sample_stiefel(Algebra::octonion, 32, rng));
  for (auto _ : state) benchmark::DoNotOptimize(quotient_invariant(p));
}
BENCHMARK(BM_quotient_invariant);

static void BM_rotation_to_word(benchmark::State& state) {
  RandomStream rng(9);
  const Rotation R = Rotation::random(9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rotation_to_word(R));
}
BENCHMARK(BM_rotation_to_word);

BENCHMARK_MAIN();
