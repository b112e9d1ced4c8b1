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

#pragma once

// Data-parallel inner loops of the online protocol and the dealer.
//
// Every kernel exists twice with the same signature: `serial::` is the
// reference loop, `omp::` the OpenMP version that the protocols call. The
// two must produce identical output for identical input; tests check this
// and bench/ compares their throughput.

#include <cstddef>
#include <cstdint>
#include <span>

#include "sdtree/bitvec.h"
#include "sdtree/prg.h"
#include "sdtree/ring.h"

namespace sdtree::kernels {

// One party's view of a run of triples: t3 = t1 * t2 after reconstruction.
struct TripleSpans {
  std::span<std::uint64_t> t1, t2, t3;
};
struct ConstTripleSpans {
  std::span<const std::uint64_t> t1, t2, t3;
};

#define SDTREE_KERNEL_DECLS                                                           \
  /* out = (x - t) mod 2^l; the masked operand of a Beaver opening. */                \
  void mask_sub(std::span<const std::uint64_t> x, std::span<const std::uint64_t> t,   \
                std::uint64_t mask, std::span<std::uint64_t> out);                    \
  /* out = x ^ t, word-wise. */                                                       \
  void mask_xor(std::span<const std::uint64_t> x, std::span<const std::uint64_t> t,   \
                std::span<std::uint64_t> out);                                        \
  /* z = [party one] e*f + t1*f + t2*e + t3 (mod 2^l). */                             \
  void beaver_close_arith(bool party_one, std::span<const std::uint64_t> e,           \
                          std::span<const std::uint64_t> f, ConstTripleSpans t,       \
                          std::uint64_t mask, std::span<std::uint64_t> out);          \
  /* Boolean analogue on packed words: z = [party one] e&f ^ t1&f ^ t2&e ^ t3. */     \
  void beaver_close_bool(bool party_one, std::span<const std::uint64_t> e,            \
                         std::span<const std::uint64_t> f, ConstTripleSpans t,        \
                         std::span<std::uint64_t> out);                               \
  /* For each selection j: out[j*n + ((i + shift[j]) mod 2^l) mod n] =                \
     share[i] + masks[j], n = share.size(). */                                        \
  void shift_arrays(std::span<const std::uint64_t> share,                             \
                    std::span<const std::uint64_t> shifts,                            \
                    std::span<const std::uint64_t> masks, std::uint64_t mask,         \
                    std::span<std::uint64_t> out);                                    \
  /* OT derandomization, sender side: out[j*n + t] =                                  \
     messages[j*n + t] + pads[j*n + (t - offsets[j]) mod n]. */                       \
  void ot_responses(std::span<const std::uint64_t> messages,                          \
                    std::span<const std::uint64_t> pads,                              \
                    std::span<const std::uint32_t> offsets, std::size_t n,            \
                    std::uint64_t mask, std::span<std::uint64_t> out);                \
  /* planes[q] bit k = bit q of values[k]. planes.size() = bit count. */              \
  void bit_planes(std::span<const std::uint64_t> values, std::span<BitVec> planes);   \
  /* Dealer: triple k of both parties is drawn from Prg(key, first + k). */           \
  void deal_arith_triples(const PrgKey& key, std::uint64_t first, BitWidth width,     \
                          TripleSpans p0, TripleSpans p1);                            \
  /* Dealer: 64 Boolean triples per word; word k from Prg(key, first + k). */         \
  void deal_bool_triples(const PrgKey& key, std::uint64_t first, TripleSpans p0,      \
                         TripleSpans p1);                                             \
  /* Dealer: random 1-of-n OT correlations; correlation k from Prg(key, first + k).   \
     pads has choices.size() * n entries. */                                          \
  void deal_ot(const PrgKey& key, std::uint64_t first, std::size_t n, BitWidth width, \
               std::span<std::uint64_t> pads, std::span<std::uint32_t> choices,       \
               std::span<std::uint64_t> chosen);

namespace serial {
SDTREE_KERNEL_DECLS
}  // namespace serial

namespace omp {
SDTREE_KERNEL_DECLS
// Number of threads the parallel kernels use.
int thread_count();
}  // namespace omp

#undef SDTREE_KERNEL_DECLS

}  // namespace sdtree::kernels
