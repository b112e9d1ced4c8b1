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

#include "sdtree/beaver.h"

#include <string>

#include "sdtree/errors.h"
#include "sdtree/kernels.h"
#include "sdtree/wire.h"

namespace sdtree {

ArithShares beaver_mul_arith(Session& s, const ArithShares& a, const ArithShares& b) {
  if (a.size() != b.size()) {
    throw UsageError("multiplication batch length mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
  if (!(a.width == b.width) || !(a.width == s.material.width())) {
    throw UsageError("multiplication width mismatch");
  }
  const std::size_t n = a.size();
  const BitWidth w = a.width;
  ArithShares out{s.party, w, std::vector<std::uint64_t>(n)};
  if (n == 0) return out;

  const ArithTriples t = s.material.take_arith(n);
  std::vector<std::uint64_t> ef(2 * n);
  std::span<std::uint64_t> e(ef.data(), n);
  std::span<std::uint64_t> f(ef.data() + n, n);
  kernels::omp::mask_sub(a.values, t.t1, w.mask(), e);
  kernels::omp::mask_sub(b.values, t.t2, w.mask(), f);

  ByteWriter msg;
  msg.put_elements(ef, w);
  const Bytes reply = s.channel.exchange(msg.bytes());
  ByteReader in(reply);
  const std::vector<std::uint64_t> peer = in.get_elements(2 * n, w);
  in.expect_end();
  for (std::size_t i = 0; i < 2 * n; ++i) ef[i] = wrap(ef[i] + peer[i], w);

  kernels::omp::beaver_close_arith(s.party == Party::kOne, e, f, {t.t1, t.t2, t.t3},
                                   w.mask(), out.values);
  return out;
}

BitVec beaver_mul_bool(Session& s, const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) {
    throw UsageError("multiplication batch length mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  BitVec out(n);
  if (n == 0) return out;

  const BoolTriples t = s.material.take_bool(n);
  BitVec e(n);
  BitVec f(n);
  kernels::omp::mask_xor(a.words(), t.t1.words(), e.words());
  kernels::omp::mask_xor(b.words(), t.t2.words(), f.words());

  ByteWriter msg;
  msg.put_bits(e);
  msg.put_bits(f);
  const Bytes reply = s.channel.exchange(msg.bytes());
  ByteReader in(reply);
  e ^= in.get_bits(n);
  f ^= in.get_bits(n);
  in.expect_end();

  kernels::omp::beaver_close_bool(s.party == Party::kOne, e.words(), f.words(),
                                  {t.t1.words(), t.t2.words(), t.t3.words()}, out.words());
  out.trim();
  return out;
}

}  // namespace sdtree
