// Copyright 2026 The sdtree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Throughput of the serial reference kernels against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "sdtree/kernels.h"

namespace sdtree::kernels {
namespace {

struct Serial {
  static constexpr auto beaver_close_arith = serial::beaver_close_arith;
  static constexpr auto beaver_close_bool = serial::beaver_close_bool;
  static constexpr auto shift_arrays = serial::shift_arrays;
  static constexpr auto ot_responses = serial::ot_responses;
  static constexpr auto bit_planes = serial::bit_planes;
  static constexpr auto deal_arith_triples = serial::deal_arith_triples;
  static constexpr auto deal_bool_triples = serial::deal_bool_triples;
  static constexpr auto deal_ot = serial::deal_ot;
};

struct Omp {
  static constexpr auto beaver_close_arith = omp::beaver_close_arith;
  static constexpr auto beaver_close_bool = omp::beaver_close_bool;
  static constexpr auto shift_arrays = omp::shift_arrays;
  static constexpr auto ot_responses = omp::ot_responses;
  static constexpr auto bit_planes = omp::bit_planes;
  static constexpr auto deal_arith_triples = omp::deal_arith_triples;
  static constexpr auto deal_bool_triples = omp::deal_bool_triples;
  static constexpr auto deal_ot = omp::deal_ot;
};

std::vector<std::uint64_t> random_words(std::size_t n, std::uint64_t seed) {
  Prg prg(seed);
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = prg.next_u64();
  return v;
}

template <typename K>
void BM_BeaverCloseArith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto e = random_words(n, 1), f = random_words(n, 2), t1 = random_words(n, 3),
             t2 = random_words(n, 4), t3 = random_words(n, 5);
  std::vector<std::uint64_t> out(n);
  for (auto _ : state) {
    K::beaver_close_arith(true, e, f, {t1, t2, t3}, ~0ull, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <typename K>
void BM_BeaverCloseBool(benchmark::State& state) {
  const auto words = static_cast<std::size_t>(state.range(0)) / 64;
  const auto e = random_words(words, 1), f = random_words(words, 2), t1 = random_words(words, 3),
             t2 = random_words(words, 4), t3 = random_words(words, 5);
  std::vector<std::uint64_t> out(words);
  for (auto _ : state) {
    K::beaver_close_bool(true, e, f, {t1, t2, t3}, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words * 64));
}

// range(0) selections over a 57-entry feature array.
template <typename K>
void BM_ShiftArrays(benchmark::State& state) {
  const auto j = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t n = 57;
  const auto share = random_words(n, 1), shifts = random_words(j, 2), masks = random_words(j, 3);
  std::vector<std::uint64_t> out(j * n);
  for (auto _ : state) {
    K::shift_arrays(share, shifts, masks, ~0ull, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * j * n));
}

template <typename K>
void BM_OtResponses(benchmark::State& state) {
  const auto j = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t n = 57;
  const auto messages = random_words(j * n, 1), pads = random_words(j * n, 2);
  std::vector<std::uint32_t> offsets(j);
  for (std::size_t k = 0; k < j; ++k) offsets[k] = static_cast<std::uint32_t>(k % n);
  std::vector<std::uint64_t> out(j * n);
  for (auto _ : state) {
    K::ot_responses(messages, pads, offsets, n, ~0ull, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * j * n));
}

template <typename K>
void BM_BitPlanes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto values = random_words(n, 1);
  std::vector<BitVec> planes(64, BitVec(n));
  for (auto _ : state) {
    K::bit_planes(values, planes);
    benchmark::DoNotOptimize(planes.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <typename K>
void BM_DealArith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PrgKey key = derive_key(1, "bench");
  std::vector<std::vector<std::uint64_t>> s(6, std::vector<std::uint64_t>(n));
  for (auto _ : state) {
    K::deal_arith_triples(key, 0, BitWidth::w64(), {s[0], s[1], s[2]}, {s[3], s[4], s[5]});
    benchmark::DoNotOptimize(s[5].data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <typename K>
void BM_DealBool(benchmark::State& state) {
  const auto words = static_cast<std::size_t>(state.range(0)) / 64;
  const PrgKey key = derive_key(1, "bench");
  std::vector<std::vector<std::uint64_t>> s(6, std::vector<std::uint64_t>(words));
  for (auto _ : state) {
    K::deal_bool_triples(key, 0, {s[0], s[1], s[2]}, {s[3], s[4], s[5]});
    benchmark::DoNotOptimize(s[5].data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words * 64));
}

template <typename K>
void BM_DealOt(benchmark::State& state) {
  const auto j = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t n = 57;
  const PrgKey key = derive_key(1, "bench");
  std::vector<std::uint64_t> pads(j * n), chosen(j);
  std::vector<std::uint32_t> choices(j);
  for (auto _ : state) {
    K::deal_ot(key, 0, n, BitWidth::w64(), pads, choices, chosen);
    benchmark::DoNotOptimize(pads.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * j * n));
}

#define SDTREE_BENCH_PAIR(name, lo, hi)                          \
  BENCHMARK_TEMPLATE(name, Serial)->RangeMultiplier(8)->Range(lo, hi); \
  BENCHMARK_TEMPLATE(name, Omp)->RangeMultiplier(8)->Range(lo, hi)

SDTREE_BENCH_PAIR(BM_BeaverCloseArith, 1 << 10, 1 << 22);
SDTREE_BENCH_PAIR(BM_BeaverCloseBool, 1 << 12, 1 << 24);
SDTREE_BENCH_PAIR(BM_ShiftArrays, 1 << 3, 1 << 17);
SDTREE_BENCH_PAIR(BM_OtResponses, 1 << 3, 1 << 17);
SDTREE_BENCH_PAIR(BM_BitPlanes, 1 << 10, 1 << 19);
SDTREE_BENCH_PAIR(BM_DealArith, 1 << 10, 1 << 20);
SDTREE_BENCH_PAIR(BM_DealBool, 1 << 12, 1 << 24);
SDTREE_BENCH_PAIR(BM_DealOt, 1 << 3, 1 << 14);

}  // namespace
}  // namespace sdtree::kernels

BENCHMARK_MAIN();
