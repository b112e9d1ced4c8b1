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
#include <vector>

namespace sdtree {

// Packed vector of bits, 64 per word, little-endian within a word. Unused
// high bits of the last word are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : words_(word_count(size), 0), size_(size) {}

  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  unsigned get(std::size_t i) const {
    return static_cast<unsigned>((words_[i >> 6] >> (i & 63)) & 1u);
  }
  void set(std::size_t i, unsigned b) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (b & 1u) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  // Clears the padding bits past size().
  void trim();

  // Appends all bits of `other`.
  void append(const BitVec& other);
  // Bits [offset, offset + count).
  BitVec slice(std::size_t offset, std::size_t count) const;

  std::size_t popcount() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

BitVec operator^(BitVec a, const BitVec& b);
BitVec operator&(BitVec a, const BitVec& b);

// Concatenation of several bit vectors, in order.
BitVec concat(std::span<const BitVec> parts);

}  // namespace sdtree
