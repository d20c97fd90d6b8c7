#include <benchmark/benchmark.h>

#include "mfcat/ainfinity.hpp"
#include "mfcat/hochschild.hpp"
#include "mfcat/stabilize.hpp"

using namespace mfcat;

namespace {

Series potential(const char* text, std::size_t n) { return parse_series(text, RingCtx::standard(n)); }

void BM_TransferOneVariable(benchmark::State& state) {
  Series w = potential("x^2 + x^3 + x^5 + x^7", 1);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_minimal_model(w, state.range(0)));
}
BENCHMARK(BM_TransferOneVariable)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_TransferD4(benchmark::State& state) {
  Series w = potential("x^2*y + y^3", 2);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_minimal_model(w, state.range(0)));
}
BENCHMARK(BM_TransferD4)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_TransferElliptic(benchmark::State& state) {
  Series w = potential("x^3 + y^3 + z^3 - 3*x*y*z", 3);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_minimal_model(w, state.range(0)));
}
BENCHMARK(BM_TransferElliptic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_StasheffCheck(benchmark::State& state) {
  AInfStructure m = transfer_minimal_model(potential("x^2*y + y^3", 2), 6);
  for (auto _ : state) benchmark::DoNotOptimize(check_stasheff(m, state.range(0)));
}
BENCHMARK(BM_StasheffCheck)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_EndomorphismCohomology(benchmark::State& state) {
  Series w = state.range(0) == 1 ? potential("x^7", 1) : potential("x^3 + y^4", 2);
  Z2Complex hom = endomorphism_data(w).hom;
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_over_R(hom));
}
BENCHMARK(BM_EndomorphismCohomology)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DiagonalEndomorphisms(benchmark::State& state) {
  Series w = potential("x^2*y + y^3", 2);
  MatrixFactorization d = stabilized_diagonal(w);
  Z2Complex hom = hom_complex(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_over_R(hom));
}
BENCHMARK(BM_DiagonalEndomorphisms)->Unit(benchmark::kMillisecond);

void BM_Jacobian(benchmark::State& state) {
  const char* texts[] = {"x^3 + y^7 + x*y^5", "x^4 + y^5 + z^3", "x^5 + y^5 + z^5 + x^2*y^2*z"};
  Series w = potential(texts[state.range(0)], state.range(0) == 0 ? 2 : 3);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_report(w));
}
BENCHMARK(BM_Jacobian)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
