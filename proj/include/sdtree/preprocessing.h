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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sdtree/bitvec.h"
#include "sdtree/ring.h"
#include "sdtree/sharing.h"
#include "sdtree/wire.h"

namespace sdtree {

enum class CompareMode : std::uint8_t { kCarryLookahead = 0, kRippleCarry = 1 };

// One party's shares of a run of arithmetic triples.
struct ArithTriples {
  std::vector<std::uint64_t> t1, t2, t3;
  std::size_t size() const { return t1.size(); }
};

// One party's shares of a run of Boolean triples, bit-packed.
struct BoolTriples {
  BitVec t1, t2, t3;
  std::size_t size() const { return t1.size(); }
};

// Sender half of a random 1-of-n OT correlation: the random pads R[0..n-1].
struct OtSenderCorrelation {
  std::vector<std::uint64_t> pads;
};

// Receiver half: a random choice c and R[c].
struct OtReceiverCorrelation {
  std::uint32_t size = 0;
  std::uint32_t choice = 0;
  std::uint64_t chosen = 0;
};

// How much correlated randomness to deal. OT correlations come in two
// directions: `ot_per_direction` with party 0 as receiver and as many with
// party 1 as receiver.
struct Budget {
  std::size_t arith_triples = 0;
  std::size_t bool_triples = 0;
  std::size_t ot_per_direction = 0;
  std::uint32_t ot_size = 0;
};

// Boolean triples one comparison consumes: 3l - 5 (carry look-ahead) or
// 2l - 3 (ripple carry).
std::size_t compare_bool_triples(BitWidth width, CompareMode mode);

// Material for one inference over a complete tree of the given depth.
Budget inference_budget(unsigned depth, std::uint32_t feature_dim, BitWidth width,
                        CompareMode mode);

// Preprocessed material held by one party. Every item is handed out once;
// running out raises DepletionError.
class PartyMaterial {
 public:
  PartyMaterial(Party party, BitWidth width, std::uint64_t seed)
      : party_(party), width_(width), seed_(seed) {}

  Party party() const { return party_; }
  BitWidth width() const { return width_; }
  std::uint64_t seed() const { return seed_; }

  ArithTriples take_arith(std::size_t n);
  BoolTriples take_bool(std::size_t n);
  OtSenderCorrelation take_ot_sender(std::uint32_t size);
  OtReceiverCorrelation take_ot_receiver(std::uint32_t size);

  std::size_t arith_remaining() const { return arith_.size() - arith_used_; }
  std::size_t bool_remaining() const { return bool_.size() - bool_used_; }
  std::size_t ot_sender_remaining() const { return ot_send_.size() - ot_send_used_; }
  std::size_t ot_receiver_remaining() const { return ot_recv_.size() - ot_recv_used_; }

  std::size_t arith_consumed() const { return arith_used_; }
  std::size_t bool_consumed() const { return bool_used_; }
  std::size_t ot_consumed() const { return ot_send_used_ + ot_recv_used_; }

  // Raw access for the dealer, serialization and tests.
  ArithTriples& arith() { return arith_; }
  BoolTriples& boolean() { return bool_; }
  std::vector<OtSenderCorrelation>& ot_sender() { return ot_send_; }
  std::vector<OtReceiverCorrelation>& ot_receiver() { return ot_recv_; }
  const ArithTriples& arith() const { return arith_; }
  const BoolTriples& boolean() const { return bool_; }
  const std::vector<OtSenderCorrelation>& ot_sender() const { return ot_send_; }
  const std::vector<OtReceiverCorrelation>& ot_receiver() const { return ot_recv_; }

 private:
  Party party_;
  BitWidth width_;
  std::uint64_t seed_;
  ArithTriples arith_;
  BoolTriples bool_;
  std::vector<OtSenderCorrelation> ot_send_;
  std::vector<OtReceiverCorrelation> ot_recv_;
  std::size_t arith_used_ = 0;
  std::size_t bool_used_ = 0;
  std::size_t ot_send_used_ = 0;
  std::size_t ot_recv_used_ = 0;
};

// Trusted dealer: generates matching material for both parties,
// deterministically from `seed`.
std::pair<PartyMaterial, PartyMaterial> dealer_generate(const Budget& budget, BitWidth width,
                                                        std::uint64_t seed);

// Material file: magic "SDTPRE1", u8 l, u8 party, u64 seed, u64 counts
// (arith, bool, ot sender, ot receiver), u32 ot size, then sections of
// length-prefixed records (u32 byte length + body). Only unconsumed items are
// written.
Bytes serialize_material(const PartyMaterial& material);
PartyMaterial deserialize_material(std::span<const std::uint8_t> data);

}  // namespace sdtree
