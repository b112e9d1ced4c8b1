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

#include "sdtree/bitvec.h"

#include <bit>

#include "sdtree/errors.h"

namespace sdtree {

void BitVec::trim() {
  if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

void BitVec::append(const BitVec& other) {
  if (other.size_ == 0) return;
  const std::size_t shift = size_ & 63;
  if (shift == 0) {
    words_.insert(words_.end(), other.words_.begin(), other.words_.end());
  } else {
    words_.reserve(word_count(size_ + other.size_));
    for (std::uint64_t w : other.words_) {
      words_.back() |= w << shift;
      words_.push_back(w >> (64 - shift));
    }
  }
  size_ += other.size_;
  words_.resize(word_count(size_));
  trim();
}

BitVec BitVec::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > size_) throw UsageError("BitVec::slice out of range");
  BitVec out(count);
  const std::size_t shift = offset & 63;
  const std::size_t base = offset >> 6;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t v = words_[base + w] >> shift;
    if (shift != 0 && base + w + 1 < words_.size()) {
      v |= words_[base + w + 1] << (64 - shift);
    }
    out.words_[w] = v;
  }
  out.trim();
  return out;
}

std::size_t BitVec::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw UsageError("BitVec size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.size_ != size_) throw UsageError("BitVec size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

BitVec concat(std::span<const BitVec> parts) {
  BitVec out;
  for (const auto& p : parts) out.append(p);
  return out;
}

}  // namespace sdtree
