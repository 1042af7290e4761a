// Timings of the desk-scale kernels. Several library functions memoize per
// argument, so the steady-state numbers below measure warm caches for
// upset, ribbon_to_x and phi_plus.

#include <benchmark/benchmark.h>

#include "nck/birkhoff.hpp"
#include "nck/ehrhart.hpp"
#include "nck/fqsym.hpp"
#include "nck/idempotents.hpp"
#include "nck/tamari.hpp"

using namespace nck;

static void BM_EnumerateTrees(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(4, 9);

static void BM_LinearExtensions(benchmark::State& state) {
  Forest f = Forest::points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linear_extensions(f));
}
BENCHMARK(BM_LinearExtensions)->DenseRange(4, 7);

static void BM_TreeClosure(benchmark::State& state) {
  Forest t = Forest::chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_closure(t));
}
BENCHMARK(BM_TreeClosure)->DenseRange(4, 8);

static void BM_YCoproduct(benchmark::State& state) {
  Forest f = Forest::corolla(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(y_coproduct(f, 2));
}
BENCHMARK(BM_YCoproduct)->DenseRange(4, 8);

static void BM_XToC(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  XElem<long> x;
  for (const auto& f : enumerate_forests(n)) x.add(f, 1);
  for (auto _ : state) benchmark::DoNotOptimize(x_to_c(x));
}
BENCHMARK(BM_XToC)->DenseRange(3, 6);

static void BM_MProduct(benchmark::State& state) {
  Permutation a = identity_permutation(static_cast<int>(state.range(0)));
  Permutation b = identity_permutation(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(m_product(a, b));
}
BENCHMARK(BM_MProduct)->Args({2, 2})->Args({3, 3})->Args({3, 4});

static void BM_GammaQsym(benchmark::State& state) {
  Forest f = Forest::points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_qsym(f, GammaRoute::Recursion));
}
BENCHMARK(BM_GammaQsym)->DenseRange(3, 6);

static void BM_SigmaPlus(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_plus(n, ASpec::symbolic()));
}
BENCHMARK(BM_SigmaPlus)->DenseRange(3, 6);

static void BM_Factorization(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorization_holds(n, ASpec::two_parameter()));
}
BENCHMARK(BM_Factorization)->DenseRange(3, 5);

static void BM_DLambdaRibbons(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d_lambda_r(n, Partition(n - 1, 1)));
}
BENCHMARK(BM_DLambdaRibbons)->DenseRange(3, 6);

static void BM_WordsW(benchmark::State& state) {
  Composition i({static_cast<int>(state.range(0)), 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(words_W(i));
}
BENCHMARK(BM_WordsW)->DenseRange(2, 5);

static void BM_Eulerian(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian(n, 1));
}
BENCHMARK(BM_Eulerian)->DenseRange(3, 6);

static void BM_QSolomon(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_solomon(n));
}
BENCHMARK(BM_QSolomon)->DenseRange(2, 5);

static void BM_QuasiIdempotent(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto psi = dynkin(n).psi;
  for (auto _ : state) benchmark::DoNotOptimize(quasi_idempotent_check(psi, n));
}
BENCHMARK(BM_QuasiIdempotent)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_LatticePoints(benchmark::State& state) {
  auto p = ForestPoset::from_forest(Forest::corolla(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p, 4));
}
BENCHMARK(BM_LatticePoints)->DenseRange(3, 7);

static void BM_EhrhartPolynomial(benchmark::State& state) {
  auto p = ForestPoset::from_forest(Forest::corolla(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_polynomial(p));
}
BENCHMARK(BM_EhrhartPolynomial)->DenseRange(3, 6);

static void BM_QCount(benchmark::State& state) {
  auto p = ForestPoset::from_forest(Forest::parse("200"));
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_count(p, n, QCountKind::Boundary));
}
BENCHMARK(BM_QCount)->DenseRange(2, 6, 2);

static void BM_MultiPolyProduct(benchmark::State& state) {
  MultiPoly q = MultiPoly::var(Var::q()), t = MultiPoly::var(Var::t());
  MultiPoly a = (MultiPoly(1) + q + t).pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_MultiPolyProduct)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
