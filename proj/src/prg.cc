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

#include "sdtree/prg.h"

#include <sodium.h>

#include <cstring>
#include <mutex>
#include <string>

namespace sdtree {

namespace {

void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
  });
}

PrgKey hash_key(const std::uint8_t* material, std::size_t len, std::string_view label) {
  ensure_sodium();
  PrgKey key{};
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, key.size());
  crypto_generichash_update(&st, material, len);
  crypto_generichash_update(&st, reinterpret_cast<const unsigned char*>(label.data()),
                            label.size());
  crypto_generichash_final(&st, key.data(), key.size());
  return key;
}

std::array<std::uint8_t, 8> le64(std::uint64_t v) {
  std::array<std::uint8_t, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return out;
}

}  // namespace

PrgKey derive_key(std::uint64_t seed, std::string_view label) {
  const auto bytes = le64(seed);
  return hash_key(bytes.data(), bytes.size(), label);
}

PrgKey derive_key(const PrgKey& parent, std::string_view label) {
  return hash_key(parent.data(), parent.size(), label);
}

Prg::Prg(std::uint64_t seed, std::string_view label)
    : key_(derive_key(seed, label)), stream_(0) {}

Prg::Prg(const PrgKey& key, std::uint64_t stream) : key_(key), stream_(stream) {
  ensure_sodium();
}

void Prg::refill() {
  constexpr std::size_t kBytes = sizeof(buffer_);
  std::array<std::uint8_t, kBytes> zeros{};
  std::array<std::uint8_t, kBytes> raw{};
  const auto nonce = le64(stream_);
  crypto_stream_chacha20_xor_ic(raw.data(), zeros.data(), kBytes, nonce.data(), block_,
                                key_.data());
  block_ += kBytes / 64;
  for (std::size_t i = 0; i < buffer_.size(); ++i) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | raw[i * 8 + b];
    buffer_[i] = v;
  }
  pos_ = 0;
}

std::uint64_t Prg::next_u64() {
  if (pos_ == buffer_.size()) refill();
  return buffer_[pos_++];
}

std::uint64_t Prg::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("uniform_below: empty range");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

std::uint64_t Prg::uniform_between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw UsageError("uniform_between: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return next_u64();
  return lo + uniform_below(span + 1);
}

std::int64_t Prg::uniform_signed(std::int64_t lo, std::int64_t hi) {
  const auto ulo = static_cast<std::uint64_t>(lo);
  const auto span = static_cast<std::uint64_t>(hi) - ulo;
  return static_cast<std::int64_t>(ulo + uniform_between(0, span));
}

void Prg::fill(std::span<std::uint64_t> out) {
  for (auto& v : out) v = next_u64();
}

Prg Prg::fork(std::string_view label) const {
  return Prg(derive_key(key_, label), 0);
}

}  // namespace sdtree
