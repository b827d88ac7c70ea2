#include <benchmark/benchmark.h>

#include "wedgeops/operators.hpp"
#include "wedgeops/random.hpp"
#include "wedgeops/tensor.hpp"
#include "wedgeops/wedge.hpp"

using namespace wedgeops;

namespace {

std::vector<Vec> make_vectors(int dim, int count) {
  Rng rng(1);
  std::vector<Vec> out;
  for (int i = 0; i < count; ++i) out.push_back(random_vector(rng, dim));
  return out;
}

void BM_Wedge(benchmark::State& state) {
  const auto xs = make_vectors(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(xs));
  }
}
BENCHMARK(BM_Wedge)->Args({6, 3})->Args({8, 4})->Args({12, 4});

void BM_GramInner(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  const auto xs = make_vectors(d, p);
  const auto ys = make_vectors(d, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_inner(xs, ys));
  }
}
BENCHMARK(BM_GramInner)->Args({8, 4})->Args({16, 6});

void BM_Antisymmetrize(benchmark::State& state) {
  Rng rng(2);
  const int d = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  FullTensor t(d, p);
  for (Eigen::Index i = 0; i < t.entries().size(); ++i) t.entries()[i] = rng.complex_gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(antisymmetrize(t));
  }
}
BENCHMARK(BM_Antisymmetrize)->Args({3, 3})->Args({4, 4})->Args({4, 5});

void BM_PointwiseWedge(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const VecTrigPoly f = random_trig_poly(rng, 4, 0, n);
  const VecTrigPoly g = random_trig_poly(rng, 4, 0, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pointwise_wedge({f, g}));
  }
}
BENCHMARK(BM_PointwiseWedge)->Arg(8)->Arg(16)->Arg(32);

void BM_CreationMatrix(benchmark::State& state) {
  Rng rng(4);
  const VecTrigPoly xi = random_inner_symbol(rng, 4, 3);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(creation(xi, degree));
  }
}
BENCHMARK(BM_CreationMatrix)->Arg(8)->Arg(12)->Arg(16);

void BM_ToeplitzIdentity(benchmark::State& state) {
  Rng rng(5);
  const VecTrigPoly xi = random_inner_symbol(rng, 4, 3);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_toeplitz_identity(xi, degree));
  }
}
BENCHMARK(BM_ToeplitzIdentity)->Arg(8)->Arg(12);

void BM_PocBasis(benchmark::State& state) {
  Rng rng(6);
  const VecTrigPoly xi = random_trig_poly(rng, 4, 0, 2);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(poc_basis({xi}, 4, degree));
  }
}
BENCHMARK(BM_PocBasis)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
