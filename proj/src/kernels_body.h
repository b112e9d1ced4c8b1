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

// Per-item bodies shared by the serial and OpenMP kernel drivers.

#include <cstddef>
#include <cstdint>

#include "sdtree/kernels.h"

namespace sdtree::kernels::body {

inline void shift_one(std::span<const std::uint64_t> share, std::uint64_t shift,
                      std::uint64_t r, std::uint64_t mask, std::uint64_t* out) {
  const std::size_t n = share.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t pos = ((i + shift) & mask) % n;
    out[pos] = (share[i] + r) & mask;
  }
}

inline void ot_one(const std::uint64_t* messages, const std::uint64_t* pads,
                   std::uint32_t offset, std::size_t n, std::uint64_t mask,
                   std::uint64_t* out) {
  // pads index (t - offset) mod n, split to avoid a modulo per element.
  const std::size_t off = offset % n;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t src = t >= off ? t - off : t + n - off;
    out[t] = (messages[t] + pads[src]) & mask;
  }
}

// Gathers bit q of values[64g .. 64g+63] into word g of planes[q].
inline void planes_group(std::span<const std::uint64_t> values, std::span<BitVec> planes,
                         std::size_t g) {
  const std::size_t begin = g * 64;
  const std::size_t end = begin + 64 < values.size() ? begin + 64 : values.size();
  for (std::size_t q = 0; q < planes.size(); ++q) {
    std::uint64_t word = 0;
    for (std::size_t k = begin; k < end; ++k) word |= ((values[k] >> q) & 1u) << (k - begin);
    planes[q].words()[g] = word;
  }
}

inline void arith_triple(const PrgKey& key, std::uint64_t stream, BitWidth width,
                         TripleSpans p0, TripleSpans p1, std::size_t k) {
  Prg prg(key, stream);
  const std::uint64_t t1 = prg.ring(width);
  const std::uint64_t t2 = prg.ring(width);
  const std::uint64_t t3 = wrap(t1 * t2, width);
  p0.t1[k] = prg.ring(width);
  p0.t2[k] = prg.ring(width);
  p0.t3[k] = prg.ring(width);
  p1.t1[k] = wrap(t1 - p0.t1[k], width);
  p1.t2[k] = wrap(t2 - p0.t2[k], width);
  p1.t3[k] = wrap(t3 - p0.t3[k], width);
}

inline void bool_triple_word(const PrgKey& key, std::uint64_t stream, TripleSpans p0,
                             TripleSpans p1, std::size_t k) {
  Prg prg(key, stream);
  const std::uint64_t t1 = prg.next_u64();
  const std::uint64_t t2 = prg.next_u64();
  const std::uint64_t t3 = t1 & t2;
  p0.t1[k] = prg.next_u64();
  p0.t2[k] = prg.next_u64();
  p0.t3[k] = prg.next_u64();
  p1.t1[k] = t1 ^ p0.t1[k];
  p1.t2[k] = t2 ^ p0.t2[k];
  p1.t3[k] = t3 ^ p0.t3[k];
}

inline void ot_correlation(const PrgKey& key, std::uint64_t stream, std::size_t n,
                           BitWidth width, std::uint64_t* pads, std::uint32_t& choice,
                           std::uint64_t& chosen) {
  Prg prg(key, stream);
  for (std::size_t i = 0; i < n; ++i) pads[i] = prg.ring(width);
  choice = static_cast<std::uint32_t>(prg.uniform_below(n));
  chosen = pads[choice];
}

}  // namespace sdtree::kernels::body
