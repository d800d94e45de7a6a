#include <benchmark/benchmark.h>

#include "chernlab/degrees.hpp"
#include "chernlab/hilbert.hpp"
#include "chernlab/koszul.hpp"
#include "chernlab/monomial_ideal.hpp"

namespace {

using namespace chernlab;

RingP space() {
  return PolyRing::make(Field::prime(kDefaultPrime), {"x", "y", "z"});
}

PRingP z_ring() {
  RingP A = space();
  return PresentedRing::quotient(
      A, {parse_polynomial(A, "x*z"), parse_polynomial(A, "y*z"), parse_polynomial(A, "z^2")});
}

void BM_Buchberger(benchmark::State& state) {
  RingP A = space();
  std::vector<Polynomial> gens = {parse_polynomial(A, "x^2 + y*z"),
                                  parse_polynomial(A, "x*y + z^2"),
                                  parse_polynomial(A, "y^3 - x*z^2 + z")};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(A, gens));
}
BENCHMARK(BM_Buchberger);

void BM_HilbertSamuelTable(benchmark::State& state) {
  PRingP Z = z_ring();
  RingIdeal J = ideal_from_strings(Z, {"x", "y"});
  GoodFiltration F = GoodFiltration::adic(J);
  for (auto _ : state) benchmark::DoNotOptimize(hs_table(F, 8));
}
BENCHMARK(BM_HilbertSamuelTable);

void BM_ChernCoefficients(benchmark::State& state) {
  PRingP Z = z_ring();
  RingIdeal J = ideal_from_strings(Z, {"x", "y"});
  for (auto _ : state)
    benchmark::DoNotOptimize(chern_coefficients(GoodFiltration::adic(J)));
}
BENCHMARK(BM_ChernCoefficients);

void BM_ClosureFiltration(benchmark::State& state) {
  RingP A = PolyRing::make(Field::prime(kDefaultPrime), {"x", "y"});
  PRingP S = PresentedRing::polynomial_ring(A);
  RingIdeal I = ideal_from_strings(S, {"x^3", "y^3"});
  for (auto _ : state)
    benchmark::DoNotOptimize(chern_coefficients(GoodFiltration::closure_powers(I)));
}
BENCHMARK(BM_ClosureFiltration);

void BM_MinimalResolution(benchmark::State& state) {
  PModule M = PModule::ring_quotient(z_ring());
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(M, true));
}
BENCHMARK(BM_MinimalResolution);

void BM_KoszulHomology(benchmark::State& state) {
  PRingP Z = z_ring();
  RingIdeal J = ideal_from_strings(Z, {"x", "y"});
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology_lengths(J));
}
BENCHMARK(BM_KoszulHomology);

void BM_HdegRing(benchmark::State& state) {
  PRingP Z = z_ring();
  for (auto _ : state) benchmark::DoNotOptimize(hdeg_ring(Z));
}
BENCHMARK(BM_HdegRing);

}  // namespace

BENCHMARK_MAIN();
