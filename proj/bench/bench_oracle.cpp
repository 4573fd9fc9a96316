/* Copyright 2026 prymsym contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Serial reference vs OpenMP kernels of the finite-field oracle.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "helpers.hpp"
#include "prymsym/prym.hpp"

using namespace testutil;

namespace {

struct Curve {
  HomogPoly Q, gamma;
  std::array<HomogPoly, 3> minors;
  HomogPoly X;
};

// A smooth genus-4 curve on the type (2) normal form over F_p.
Curve make_curve(std::uint64_t p) {
  Field F = Field::prime(p);
  auto A = Symmetrization::from_matrix(polysym(normal_form_rows(2), F));
  std::mt19937_64 rng(p);
  for (;;) {
    HomogPoly q = random_form(rng, F, X(), 2);
    try {
      auto fw = forward_general(A, form_matrix(q));
      if (!oracle::smoothness_certificate({q, gamma_cubic(A)}).smooth) continue;
      auto m = double_cover_minors(A);
      return {q, gamma_cubic(A), {m.m12, m.m13, m.m23}, fw.X};
    } catch (const DomainError&) {
    }
  }
}

const Curve& curve(std::uint64_t p) {
  static std::map<std::uint64_t, Curve> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, make_curve(p)).first;
  return it->second;
}

// range(1) is the OpenMP thread count for the parallel kernels.
void set_threads(const benchmark::State& st) {
  if (st.range(1) > 0) omp_set_num_threads(static_cast<int>(st.range(1)));
}

template <bool Parallel>
void BM_CountC(benchmark::State& st) {
  const Curve& c = curve(st.range(0));
  set_threads(st);
  for (auto _ : st) {
    auto n = Parallel ? oracle::count_points({c.Q, c.gamma}) : oracle::count_points_serial({c.Q, c.gamma});
    benchmark::DoNotOptimize(n);
  }
}

template <bool Parallel>
void BM_Smoothness(benchmark::State& st) {
  const Curve& c = curve(st.range(0));
  set_threads(st);
  for (auto _ : st) {
    auto r = Parallel ? oracle::smoothness_certificate({c.Q, c.gamma})
                      : oracle::smoothness_certificate_serial({c.Q, c.gamma});
    benchmark::DoNotOptimize(r.smooth);
  }
}

template <bool Parallel>
void BM_DoubleCover(benchmark::State& st) {
  const Curve& c = curve(st.range(0));
  set_threads(st);
  for (auto _ : st) {
    auto r = Parallel ? oracle::count_double_cover(c.Q, c.gamma, c.minors)
                      : oracle::count_double_cover_serial(c.Q, c.gamma, c.minors);
    benchmark::DoNotOptimize(r.report.points);
  }
}

template <bool Parallel>
void BM_Bitangents(benchmark::State& st) {
  const Curve& c = curve(st.range(0));
  set_threads(st);
  for (auto _ : st) {
    auto r = Parallel ? oracle::enumerate_bitangents(c.X) : oracle::enumerate_bitangents_serial(c.X);
    benchmark::DoNotOptimize(r.size());
  }
}

}  // namespace

void serial_args(benchmark::internal::Benchmark* b, std::initializer_list<long> ps) {
  for (long p : ps) b->Args({p, 0});
  b->Unit(benchmark::kMillisecond);
}
void parallel_args(benchmark::internal::Benchmark* b, std::initializer_list<long> ps) {
  long max = omp_get_max_threads();
  for (long p : ps) {
    b->Args({p, 1});
    if (max > 1) b->Args({p, max});
  }
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_CountC<false>)->Name("count_C/serial")->Apply([](auto* b) { serial_args(b, {31, 61}); });
BENCHMARK(BM_CountC<true>)->Name("count_C/openmp")->Apply([](auto* b) { parallel_args(b, {31, 61}); });
BENCHMARK(BM_Smoothness<false>)->Name("smoothness/serial")->Apply([](auto* b) { serial_args(b, {31, 61}); });
BENCHMARK(BM_Smoothness<true>)->Name("smoothness/openmp")->Apply([](auto* b) { parallel_args(b, {31, 61}); });
BENCHMARK(BM_DoubleCover<false>)->Name("double_cover/serial")->Apply([](auto* b) { serial_args(b, {31, 61}); });
BENCHMARK(BM_DoubleCover<true>)->Name("double_cover/openmp")->Apply([](auto* b) { parallel_args(b, {31, 61}); });
BENCHMARK(BM_Bitangents<false>)->Name("bitangents/serial")->Apply([](auto* b) { serial_args(b, {11, 23}); });
BENCHMARK(BM_Bitangents<true>)->Name("bitangents/openmp")->Apply([](auto* b) { parallel_args(b, {11, 23}); });

BENCHMARK_MAIN();
