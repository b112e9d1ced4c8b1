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
#include <string>

#include "sdtree/errors.h"

namespace sdtree {

// Bit length l of the ring Z_{2^l}. Restricted to {8, 16, 32, 64}; the
// carry look-ahead schedule halves the number of (G, P) pairs each round and
// needs l to be a power of two.
class BitWidth {
 public:
  static BitWidth of(unsigned bits);
  static constexpr BitWidth w64() { return BitWidth(64); }

  constexpr unsigned bits() const { return bits_; }
  constexpr unsigned bytes() const { return bits_ / 8; }
  constexpr std::uint64_t mask() const {
    return bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
  }
  constexpr unsigned log2() const {
    unsigned n = 0;
    while ((1u << n) < bits_) ++n;
    return n;
  }
  // Bounds of the signed range accepted by encode_signed: [-2^(l-2), 2^(l-2)-1].
  constexpr std::int64_t signed_min() const {
    return -(std::int64_t{1} << (bits_ - 2));
  }
  constexpr std::int64_t signed_max() const {
    return (std::int64_t{1} << (bits_ - 2)) - 1;
  }

  friend constexpr bool operator==(BitWidth a, BitWidth b) {
    return a.bits_ == b.bits_;
  }

 private:
  explicit constexpr BitWidth(unsigned bits) : bits_(bits) {}
  unsigned bits_;
};

inline constexpr std::uint64_t wrap(std::uint64_t v, BitWidth w) {
  return v & w.mask();
}

// An element of Z_{2^l}. All arithmetic wraps.
class RingElement {
 public:
  RingElement(BitWidth width, std::uint64_t value)
      : value_(wrap(value, width)), width_(width) {}

  std::uint64_t value() const { return value_; }
  BitWidth width() const { return width_; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.width_ == b.width_ && a.value_ == b.value_;
  }

 private:
  std::uint64_t value_;
  BitWidth width_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);

inline RingElement operator+(const RingElement& a, const RingElement& b) {
  return ring_add(a, b);
}
inline RingElement operator-(const RingElement& a, const RingElement& b) {
  return ring_sub(a, b);
}
inline RingElement operator*(const RingElement& a, const RingElement& b) {
  return ring_mul(a, b);
}

// Two's-complement encoding of v in [-2^(l-2), 2^(l-2) - 1].
RingElement encode_signed(std::int64_t v, BitWidth width);
std::int64_t decode_signed(const RingElement& e);
// Unchecked variants for batch paths; the caller guarantees the range.
std::uint64_t encode_signed_raw(std::int64_t v, BitWidth width);
std::int64_t decode_signed_raw(std::uint64_t v, BitWidth width);

bool in_signed_range(std::int64_t v, BitWidth width);

unsigned bit(const RingElement& e, unsigned q);
unsigned msb(const RingElement& e);

}  // namespace sdtree
