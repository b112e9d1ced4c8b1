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

#include <cstdint>

#include "kernels_body.h"

namespace sdtree::kernels::serial {

using Index = std::int64_t;

void mask_sub(std::span<const std::uint64_t> x, std::span<const std::uint64_t> t,
              std::uint64_t mask, std::span<std::uint64_t> out) {
  const Index n = static_cast<Index>(out.size());
  for (Index i = 0; i < n; ++i) out[i] = (x[i] - t[i]) & mask;
}

void mask_xor(std::span<const std::uint64_t> x, std::span<const std::uint64_t> t,
              std::span<std::uint64_t> out) {
  const Index n = static_cast<Index>(out.size());
  for (Index i = 0; i < n; ++i) out[i] = x[i] ^ t[i];
}

void beaver_close_arith(bool party_one, std::span<const std::uint64_t> e,
                        std::span<const std::uint64_t> f, ConstTripleSpans t,
                        std::uint64_t mask, std::span<std::uint64_t> out) {
  const Index n = static_cast<Index>(out.size());
  const std::uint64_t own = party_one ? 1 : 0;
  for (Index i = 0; i < n; ++i) {
    out[i] = (own * e[i] * f[i] + t.t1[i] * f[i] + t.t2[i] * e[i] + t.t3[i]) & mask;
  }
}

void beaver_close_bool(bool party_one, std::span<const std::uint64_t> e,
                       std::span<const std::uint64_t> f, ConstTripleSpans t,
                       std::span<std::uint64_t> out) {
  const Index n = static_cast<Index>(out.size());
  const std::uint64_t own = party_one ? ~std::uint64_t{0} : 0;
  for (Index i = 0; i < n; ++i) {
    out[i] = (own & e[i] & f[i]) ^ (t.t1[i] & f[i]) ^ (t.t2[i] & e[i]) ^ t.t3[i];
  }
}

void shift_arrays(std::span<const std::uint64_t> share, std::span<const std::uint64_t> shifts,
                  std::span<const std::uint64_t> masks, std::uint64_t mask,
                  std::span<std::uint64_t> out) {
  const Index count = static_cast<Index>(shifts.size());
  const std::size_t n = share.size();
  for (Index j = 0; j < count; ++j) {
    body::shift_one(share, shifts[j], masks[j], mask, out.data() + j * n);
  }
}

void ot_responses(std::span<const std::uint64_t> messages, std::span<const std::uint64_t> pads,
                  std::span<const std::uint32_t> offsets, std::size_t n, std::uint64_t mask,
                  std::span<std::uint64_t> out) {
  const Index count = static_cast<Index>(offsets.size());
  for (Index j = 0; j < count; ++j) {
    body::ot_one(messages.data() + j * n, pads.data() + j * n, offsets[j], n, mask,
                 out.data() + j * n);
  }
}

void bit_planes(std::span<const std::uint64_t> values, std::span<BitVec> planes) {
  const Index groups = static_cast<Index>(BitVec::word_count(values.size()));
  for (Index g = 0; g < groups; ++g) body::planes_group(values, planes, g);
}

void deal_arith_triples(const PrgKey& key, std::uint64_t first, BitWidth width,
                        TripleSpans p0, TripleSpans p1) {
  const Index n = static_cast<Index>(p0.t1.size());
  for (Index k = 0; k < n; ++k) body::arith_triple(key, first + k, width, p0, p1, k);
}

void deal_bool_triples(const PrgKey& key, std::uint64_t first, TripleSpans p0,
                       TripleSpans p1) {
  const Index n = static_cast<Index>(p0.t1.size());
  for (Index k = 0; k < n; ++k) body::bool_triple_word(key, first + k, p0, p1, k);
}

void deal_ot(const PrgKey& key, std::uint64_t first, std::size_t n, BitWidth width,
             std::span<std::uint64_t> pads, std::span<std::uint32_t> choices,
             std::span<std::uint64_t> chosen) {
  const Index count = static_cast<Index>(choices.size());
  for (Index k = 0; k < count; ++k) {
    body::ot_correlation(key, first + k, n, width, pads.data() + k * n, choices[k], chosen[k]);
  }
}

}  // namespace sdtree::kernels::serial
