// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dhlab/exactlin.hpp"
#include "dhlab/polynomial.hpp"

using namespace dhlab;

namespace {

exactlin::SymmetricForm random_form(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-10, 10);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
  return exactlin::SymmetricForm(std::move(m));
}

void BM_diagonalize(benchmark::State& state) {
  const auto q = random_form(static_cast<std::size_t>(state.range(0)), 12345);
  for (auto _ : state) benchmark::DoNotOptimize(exactlin::diagonalize(q));
}
BENCHMARK(BM_diagonalize)->Arg(4)->Arg(8)->Arg(16);

void BM_sign_on_interval(benchmark::State& state) {
  std::mt19937_64 rng(678);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Vec c(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& x : c) x = Rational(coeff(rng));
  const polycert::Polynomial p(c);
  const auto window = polycert::Interval::open(Rational(-4), Rational(4));
  for (auto _ : state)
    benchmark::DoNotOptimize(polycert::sign_on_interval(p, window));
}
BENCHMARK(BM_sign_on_interval)->Arg(2)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
