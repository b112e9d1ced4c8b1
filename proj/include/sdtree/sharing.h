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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sdtree/bitvec.h"
#include "sdtree/prg.h"
#include "sdtree/ring.h"

namespace sdtree {

enum class Party : std::uint8_t { kZero = 0, kOne = 1 };

inline constexpr Party peer_of(Party p) {
  return p == Party::kZero ? Party::kOne : Party::kZero;
}
inline constexpr unsigned index_of(Party p) { return static_cast<unsigned>(p); }
Party party_from_index(unsigned i);

// One party's additive share over Z_{2^l}: value_0 + value_1 = secret.
struct ArithShare {
  Party party;
  RingElement value;
};

// One party's XOR share over Z_2.
struct BoolShare {
  Party party;
  std::uint8_t bit;
};

std::pair<ArithShare, ArithShare> share_arith(const RingElement& secret, Prg& prg);
// Deterministic form: [a]_0 = secret - r, [a]_1 = r.
std::pair<ArithShare, ArithShare> share_arith_with(const RingElement& secret,
                                                    const RingElement& r);
RingElement reconstruct_arith(const ArithShare& a, const ArithShare& b);

std::pair<BoolShare, BoolShare> share_bool(unsigned bit, Prg& prg);
std::pair<BoolShare, BoolShare> share_bool_with(unsigned bit, unsigned r);
unsigned reconstruct_bool(const BoolShare& a, const BoolShare& b);

ArithShare add_local(const ArithShare& a, const ArithShare& b);
ArithShare sub_local(const ArithShare& a, const ArithShare& b);
ArithShare scale_local(const ArithShare& a, const RingElement& gamma);
// Public constants are carried by party 0; party 1's share is unchanged.
ArithShare add_const(const ArithShare& a, const RingElement& gamma);

// A batch of one party's arithmetic shares.
struct ArithShares {
  Party party;
  BitWidth width;
  std::vector<std::uint64_t> values;

  std::size_t size() const { return values.size(); }
  ArithShare at(std::size_t i) const { return {party, RingElement(width, values[i])}; }
};

// A batch of one party's Boolean shares.
struct BoolShares {
  Party party;
  BitVec bits;

  std::size_t size() const { return bits.size(); }
};

std::pair<ArithShares, ArithShares> share_arith_vec(std::span<const std::uint64_t> secrets,
                                                    BitWidth width, Prg& prg);
std::vector<std::uint64_t> reconstruct_arith_vec(const ArithShares& a, const ArithShares& b);
std::pair<BoolShares, BoolShares> share_bool_vec(const BitVec& secrets, Prg& prg);
BitVec reconstruct_bool_vec(const BoolShares& a, const BoolShares& b);

ArithShares add_local(const ArithShares& a, const ArithShares& b);
ArithShares sub_local(const ArithShares& a, const ArithShares& b);
ArithShares add_const(const ArithShares& a, std::uint64_t gamma);
ArithShares scale_local(const ArithShares& a, std::uint64_t gamma);

}  // namespace sdtree
