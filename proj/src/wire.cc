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

#include "sdtree/wire.h"

#include <fstream>
#include <iterator>
#include <string>

#include "sdtree/errors.h"

namespace sdtree {

void ByteWriter::put_u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::put_magic(std::string_view magic) {
  out_.insert(out_.end(), magic.begin(), magic.end());
}

void ByteWriter::put_element(std::uint64_t v, BitWidth width) {
  v = wrap(v, width);
  for (unsigned i = 0; i < width.bytes(); ++i) {
    out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void ByteWriter::put_elements(std::span<const std::uint64_t> values, BitWidth width) {
  out_.reserve(out_.size() + values.size() * width.bytes());
  for (std::uint64_t v : values) put_element(v, width);
}

void ByteWriter::put_bits(const BitVec& bits) {
  const std::size_t n = (bits.size() + 7) / 8;
  const auto words = bits.words();
  for (std::size_t i = 0; i < n; ++i) {
    out_.push_back(static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8))));
  }
}

void ByteWriter::put_bytes(std::span<const std::uint8_t> bytes) {
  out_.insert(out_.end(), bytes.begin(), bytes.end());
}

void ByteReader::need(std::size_t n) const {
  if (remaining() < n) {
    throw FormatError("truncated input: need " + std::to_string(n) + " bytes, have " +
                      std::to_string(remaining()));
  }
}

std::uint8_t ByteReader::get_u8() {
  need(1);
  return in_[pos_++];
}

std::uint32_t ByteReader::get_u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | in_[pos_ + i];
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::get_u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in_[pos_ + i];
  pos_ += 8;
  return v;
}

void ByteReader::expect_magic(std::string_view magic) {
  if (remaining() < magic.size()) throw FormatError("input too short for header");
  for (std::size_t i = 0; i < magic.size(); ++i) {
    if (in_[pos_ + i] != static_cast<std::uint8_t>(magic[i])) {
      throw FormatError("bad magic, expected " + std::string(magic));
    }
  }
  pos_ += magic.size();
}

std::uint64_t ByteReader::get_element(BitWidth width) {
  need(width.bytes());
  std::uint64_t v = 0;
  for (int i = static_cast<int>(width.bytes()) - 1; i >= 0; --i) v = (v << 8) | in_[pos_ + i];
  pos_ += width.bytes();
  return v;
}

std::vector<std::uint64_t> ByteReader::get_elements(std::size_t count, BitWidth width) {
  need(count * width.bytes());
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = get_element(width);
  return out;
}

BitVec ByteReader::get_bits(std::size_t count) {
  const std::size_t n = (count + 7) / 8;
  need(n);
  BitVec out(count);
  auto words = out.words();
  for (std::size_t i = 0; i < n; ++i) {
    words[i / 8] |= static_cast<std::uint64_t>(in_[pos_ + i]) << (8 * (i % 8));
  }
  pos_ += n;
  out.trim();
  return out;
}

std::span<const std::uint8_t> ByteReader::get_bytes(std::size_t count) {
  need(count);
  auto out = in_.subspan(pos_, count);
  pos_ += count;
  return out;
}

void ByteReader::expect_end() const {
  if (remaining() != 0) {
    throw FormatError(std::to_string(remaining()) + " trailing bytes");
  }
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace sdtree
