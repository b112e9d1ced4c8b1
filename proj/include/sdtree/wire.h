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
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "sdtree/bitvec.h"
#include "sdtree/ring.h"

namespace sdtree {

using Bytes = std::vector<std::uint8_t>;

// Little-endian serializer. Ring elements occupy l/8 bytes each.
class ByteWriter {
 public:
  void put_u8(std::uint8_t v) { out_.push_back(v); }
  void put_u32(std::uint32_t v);
  void put_u64(std::uint64_t v);
  void put_magic(std::string_view magic);
  void put_element(std::uint64_t v, BitWidth width);
  void put_elements(std::span<const std::uint64_t> values, BitWidth width);
  // ceil(n/8) bytes, bit i at byte i/8, position i%8.
  void put_bits(const BitVec& bits);
  void put_bytes(std::span<const std::uint8_t> bytes);

  std::size_t size() const { return out_.size(); }
  Bytes take() { return std::move(out_); }
  const Bytes& bytes() const { return out_; }

 private:
  Bytes out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t get_u8();
  std::uint32_t get_u32();
  std::uint64_t get_u64();
  // Throws FormatError if the next bytes differ from `magic`.
  void expect_magic(std::string_view magic);
  std::uint64_t get_element(BitWidth width);
  std::vector<std::uint64_t> get_elements(std::size_t count, BitWidth width);
  BitVec get_bits(std::size_t count);
  std::span<const std::uint8_t> get_bytes(std::size_t count);

  std::size_t remaining() const { return in_.size() - pos_; }
  // Throws FormatError unless the whole input was consumed.
  void expect_end() const;

 private:
  void need(std::size_t n) const;

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data);

}  // namespace sdtree
