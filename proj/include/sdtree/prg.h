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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "sdtree/ring.h"

namespace sdtree {

using PrgKey = std::array<std::uint8_t, 32>;

// Derives a 256-bit key from a seed and a domain label (BLAKE2b).
PrgKey derive_key(std::uint64_t seed, std::string_view label);
PrgKey derive_key(const PrgKey& parent, std::string_view label);

// Deterministic pseudorandom generator: the ChaCha20 keystream under `key`
// with the 64-bit nonce `stream`. Distinct streams of one key are
// independent, which lets parallel kernels give every item its own stream
// and still match a serial run bit for bit.
class Prg {
 public:
  explicit Prg(std::uint64_t seed, std::string_view label = "sdtree");
  Prg(const PrgKey& key, std::uint64_t stream);

  std::uint64_t next_u64();
  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform in [lo, hi], inclusive.
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi);
  std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi);
  std::uint64_t ring(BitWidth width) { return wrap(next_u64(), width); }
  unsigned next_bit() { return static_cast<unsigned>(next_u64() & 1u); }
  void fill(std::span<std::uint64_t> out);

  // Child generator for an independent sub-protocol.
  Prg fork(std::string_view label) const;
  const PrgKey& key() const { return key_; }

 private:
  void refill();

  PrgKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 32> buffer_{};
  std::size_t pos_ = 32;
};

}  // namespace sdtree
