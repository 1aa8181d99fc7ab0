#include <benchmark/benchmark.h>

#include <epsc/generate.hpp>
#include <epsc/micro.hpp>

using namespace epsc;

namespace {

const FieldSpec Q = rationalField();

void BM_SectionsComplex(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(1);
  CellComplex x = circleComplex(n);
  CellularSheaf f = randomSheaf(x, Q, 3, rng, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(sectionsComplex(x, f, fullCellSet(x)));
}
BENCHMARK(BM_SectionsComplex)->Arg(16)->Arg(64)->Arg(256);

void BM_Cohomology(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(2);
  CellComplex x = circleComplex(n);
  CellularSheaf f = randomSheaf(x, Q, 3, rng, 1);
  BoundedComplex c = sectionsComplex(x, f, fullCellSet(x));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(c));
}
BENCHMARK(BM_Cohomology)->Arg(16)->Arg(64)->Arg(256);

void BM_Torsion(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(3);
  CellComplex x = circleComplex(n);
  OrientationField nu = uniformOrientation(x);
  CellularSheaf f = randomCircleSheaf(x, Q, nu, {}, 3, rng);
  BoundedComplex c = sectionsComplex(x, f, fullCellSet(x));
  CohomologyData h = cohomology(c);
  for (auto _ : state) benchmark::DoNotOptimize(torsion(c, h));
}
BENCHMARK(BM_Torsion)->Arg(16)->Arg(64)->Arg(256);

void BM_EpsilonFactorization(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(4);
  CellComplex x = circleComplex(n);
  MarkedVertexSet y;
  for (int v = 0; v < n; v += 3) y.insert(v);
  OrientationField nu = randomOrientation(x, y, rng);
  CellularSheaf f = randomCircleSheaf(x, Q, nu, y, 3, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(epsilonFactorization(x, f, nu, y));
}
BENCHMARK(BM_EpsilonFactorization)->Arg(12)->Arg(48)->Arg(96);

void BM_MorseSweep(benchmark::State& state) {
  Rng rng(5);
  CellComplex x = torusComplex7();
  CellularSheaf f = randomSheaf(x, Q, 2, rng, 1);
  PLFunction fn = randomPLFunction(x.numVertices(), rng);
  for (auto _ : state) {
    long long sum = 0;
    for (int v = 0; v < x.numVertices(); ++v)
      sum += morseComplex(x, f, fn, v).chi;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_MorseSweep);

}  // namespace

BENCHMARK_MAIN();
