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

#include "sdtree/ring.h"

namespace sdtree {

namespace {

void require_same_width(const RingElement& a, const RingElement& b) {
  if (!(a.width() == b.width())) {
    throw UsageError("ring width mismatch: " + std::to_string(a.width().bits()) +
                     " vs " + std::to_string(b.width().bits()));
  }
}

}  // namespace

BitWidth BitWidth::of(unsigned bits) {
  if (bits != 8 && bits != 16 && bits != 32 && bits != 64) {
    throw UsageError("unsupported bit width " + std::to_string(bits) +
                     " (expected 8, 16, 32 or 64)");
  }
  return BitWidth(bits);
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_width(a, b);
  return RingElement(a.width(), a.value() + b.value());
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  require_same_width(a, b);
  return RingElement(a.width(), a.value() - b.value());
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_width(a, b);
  return RingElement(a.width(), a.value() * b.value());
}

RingElement ring_neg(const RingElement& a) {
  return RingElement(a.width(), std::uint64_t{0} - a.value());
}

bool in_signed_range(std::int64_t v, BitWidth width) {
  return v >= width.signed_min() && v <= width.signed_max();
}

std::uint64_t encode_signed_raw(std::int64_t v, BitWidth width) {
  return wrap(static_cast<std::uint64_t>(v), width);
}

std::int64_t decode_signed_raw(std::uint64_t v, BitWidth width) {
  v = wrap(v, width);
  const unsigned l = width.bits();
  if (l == 64) return static_cast<std::int64_t>(v);
  const std::uint64_t sign = std::uint64_t{1} << (l - 1);
  if (v & sign) {
    return static_cast<std::int64_t>(v) - (std::int64_t{1} << l);
  }
  return static_cast<std::int64_t>(v);
}

RingElement encode_signed(std::int64_t v, BitWidth width) {
  if (!in_signed_range(v, width)) {
    throw UsageError("value " + std::to_string(v) + " outside encodable range [" +
                     std::to_string(width.signed_min()) + ", " +
                     std::to_string(width.signed_max()) + "] for l=" +
                     std::to_string(width.bits()));
  }
  return RingElement(width, encode_signed_raw(v, width));
}

std::int64_t decode_signed(const RingElement& e) {
  return decode_signed_raw(e.value(), e.width());
}

unsigned bit(const RingElement& e, unsigned q) {
  if (q >= e.width().bits()) {
    throw UsageError("bit index " + std::to_string(q) + " out of range for l=" +
                     std::to_string(e.width().bits()));
  }
  return static_cast<unsigned>((e.value() >> q) & 1u);
}

unsigned msb(const RingElement& e) { return bit(e, e.width().bits() - 1); }

}  // namespace sdtree
