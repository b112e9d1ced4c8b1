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

#include "sdtree/preprocessing.h"

#include <string>

#include "sdtree/errors.h"
#include "sdtree/kernels.h"
#include "sdtree/prg.h"

namespace sdtree {

namespace {

constexpr std::string_view kMaterialMagic = "SDTPRE1";

[[noreturn]] void depleted(const char* kind, std::size_t want, std::size_t have) {
  throw DepletionError(std::string("preprocessing depleted: need ") + std::to_string(want) +
                       " " + kind + ", " + std::to_string(have) + " left");
}

}  // namespace

std::size_t compare_bool_triples(BitWidth width, CompareMode mode) {
  const std::size_t l = width.bits();
  return mode == CompareMode::kCarryLookahead ? 3 * l - 5 : 2 * l - 3;
}

Budget inference_budget(unsigned depth, std::uint32_t feature_dim, BitWidth width,
                        CompareMode mode) {
  if (depth < 1 || depth > 30) throw UsageError("tree depth out of range");
  const std::size_t decisions = (std::size_t{1} << depth) - 1;
  const std::size_t leaves = std::size_t{1} << depth;
  Budget b;
  b.bool_triples = decisions * compare_bool_triples(width, mode);
  // bit conversion + path products + inner product
  b.arith_triples = decisions + ((std::size_t{1} << (depth + 1)) - 4) + leaves;
  b.ot_per_direction = decisions;
  b.ot_size = feature_dim;
  return b;
}

ArithTriples PartyMaterial::take_arith(std::size_t n) {
  if (arith_remaining() < n) depleted("arithmetic triples", n, arith_remaining());
  ArithTriples out;
  const auto first = arith_.t1.begin() + static_cast<std::ptrdiff_t>(arith_used_);
  const auto last = first + static_cast<std::ptrdiff_t>(n);
  const auto off = static_cast<std::ptrdiff_t>(arith_used_);
  out.t1.assign(first, last);
  out.t2.assign(arith_.t2.begin() + off, arith_.t2.begin() + off + static_cast<std::ptrdiff_t>(n));
  out.t3.assign(arith_.t3.begin() + off, arith_.t3.begin() + off + static_cast<std::ptrdiff_t>(n));
  arith_used_ += n;
  return out;
}

BoolTriples PartyMaterial::take_bool(std::size_t n) {
  if (bool_remaining() < n) depleted("Boolean triples", n, bool_remaining());
  BoolTriples out{bool_.t1.slice(bool_used_, n), bool_.t2.slice(bool_used_, n),
                  bool_.t3.slice(bool_used_, n)};
  bool_used_ += n;
  return out;
}

OtSenderCorrelation PartyMaterial::take_ot_sender(std::uint32_t size) {
  if (ot_sender_remaining() == 0) depleted("OT sender correlations", 1, 0);
  auto& c = ot_send_[ot_send_used_];
  if (c.pads.size() != size) {
    throw UsageError("OT correlation size " + std::to_string(c.pads.size()) +
                     " does not match message count " + std::to_string(size));
  }
  ++ot_send_used_;
  return std::move(c);
}

OtReceiverCorrelation PartyMaterial::take_ot_receiver(std::uint32_t size) {
  if (ot_receiver_remaining() == 0) depleted("OT receiver correlations", 1, 0);
  const auto c = ot_recv_[ot_recv_used_];
  if (c.size != size) {
    throw UsageError("OT correlation size " + std::to_string(c.size) +
                     " does not match message count " + std::to_string(size));
  }
  ++ot_recv_used_;
  return c;
}

namespace {

void deal_ot_direction(const PrgKey& key, const Budget& budget, BitWidth width,
                       PartyMaterial& sender, PartyMaterial& receiver) {
  const std::size_t count = budget.ot_per_direction;
  const std::size_t n = budget.ot_size;
  if (count == 0) return;
  if (n == 0) throw UsageError("OT correlations need a nonzero size");
  std::vector<std::uint64_t> pads(count * n);
  std::vector<std::uint32_t> choices(count);
  std::vector<std::uint64_t> chosen(count);
  kernels::omp::deal_ot(key, 0, n, width, pads, choices, chosen);
  auto& send = sender.ot_sender();
  auto& recv = receiver.ot_receiver();
  send.reserve(count);
  recv.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    send.push_back({std::vector<std::uint64_t>(pads.begin() + static_cast<std::ptrdiff_t>(k * n),
                                               pads.begin() + static_cast<std::ptrdiff_t>((k + 1) * n))});
    recv.push_back({static_cast<std::uint32_t>(n), choices[k], chosen[k]});
  }
}

}  // namespace

std::pair<PartyMaterial, PartyMaterial> dealer_generate(const Budget& budget, BitWidth width,
                                                        std::uint64_t seed) {
  PartyMaterial m0(Party::kZero, width, seed);
  PartyMaterial m1(Party::kOne, width, seed);
  const PrgKey root = derive_key(seed, "sdtree/dealer");

  {
    const std::size_t n = budget.arith_triples;
    for (auto* m : {&m0, &m1}) {
      m->arith().t1.resize(n);
      m->arith().t2.resize(n);
      m->arith().t3.resize(n);
    }
    kernels::omp::deal_arith_triples(
        derive_key(root, "arith"), 0, width,
        {m0.arith().t1, m0.arith().t2, m0.arith().t3},
        {m1.arith().t1, m1.arith().t2, m1.arith().t3});
  }
  {
    const std::size_t n = budget.bool_triples;
    for (auto* m : {&m0, &m1}) m->boolean() = BoolTriples{BitVec(n), BitVec(n), BitVec(n)};
    kernels::omp::deal_bool_triples(
        derive_key(root, "bool"), 0,
        {m0.boolean().t1.words(), m0.boolean().t2.words(), m0.boolean().t3.words()},
        {m1.boolean().t1.words(), m1.boolean().t2.words(), m1.boolean().t3.words()});
    for (auto* m : {&m0, &m1}) {
      m->boolean().t1.trim();
      m->boolean().t2.trim();
      m->boolean().t3.trim();
    }
  }
  deal_ot_direction(derive_key(root, "ot/receiver0"), budget, width, m1, m0);
  deal_ot_direction(derive_key(root, "ot/receiver1"), budget, width, m0, m1);
  return {std::move(m0), std::move(m1)};
}

Bytes serialize_material(const PartyMaterial& m) {
  const BitWidth w = m.width();
  const std::size_t arith = m.arith_remaining();
  const std::size_t boolean = m.bool_remaining();
  const std::size_t ot_send = m.ot_sender_remaining();
  const std::size_t ot_recv = m.ot_receiver_remaining();
  std::uint32_t ot_size = 0;
  if (ot_send > 0) ot_size = static_cast<std::uint32_t>(m.ot_sender().back().pads.size());
  if (ot_recv > 0) ot_size = m.ot_receiver().back().size;

  ByteWriter out;
  out.put_magic(kMaterialMagic);
  out.put_u8(static_cast<std::uint8_t>(w.bits()));
  out.put_u8(static_cast<std::uint8_t>(index_of(m.party())));
  out.put_u64(m.seed());
  out.put_u64(arith);
  out.put_u64(boolean);
  out.put_u64(ot_send);
  out.put_u64(ot_recv);
  out.put_u32(ot_size);

  const std::size_t a0 = m.arith_consumed();
  for (std::size_t k = 0; k < arith; ++k) {
    out.put_u32(3 * w.bytes());
    out.put_element(m.arith().t1[a0 + k], w);
    out.put_element(m.arith().t2[a0 + k], w);
    out.put_element(m.arith().t3[a0 + k], w);
  }
  const BitVec t1 = m.boolean().t1.slice(m.bool_consumed(), boolean);
  const BitVec t2 = m.boolean().t2.slice(m.bool_consumed(), boolean);
  const BitVec t3 = m.boolean().t3.slice(m.bool_consumed(), boolean);
  for (std::size_t k = 0; k < t1.words().size(); ++k) {
    out.put_u32(24);
    out.put_u64(t1.words()[k]);
    out.put_u64(t2.words()[k]);
    out.put_u64(t3.words()[k]);
  }
  for (std::size_t k = m.ot_sender().size() - ot_send; k < m.ot_sender().size(); ++k) {
    const auto& pads = m.ot_sender()[k].pads;
    out.put_u32(static_cast<std::uint32_t>(pads.size() * w.bytes()));
    out.put_elements(pads, w);
  }
  for (std::size_t k = m.ot_receiver().size() - ot_recv; k < m.ot_receiver().size(); ++k) {
    const auto& c = m.ot_receiver()[k];
    out.put_u32(4 + w.bytes());
    out.put_u32(c.choice);
    out.put_element(c.chosen, w);
  }
  return out.take();
}

namespace {

void expect_record(ByteReader& in, std::size_t length) {
  const std::uint32_t got = in.get_u32();
  if (got != length) {
    throw FormatError("material record length " + std::to_string(got) + ", expected " +
                      std::to_string(length));
  }
}

}  // namespace

PartyMaterial deserialize_material(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  in.expect_magic(kMaterialMagic);
  const BitWidth w = BitWidth::of(in.get_u8());
  const std::uint8_t party = in.get_u8();
  if (party > 1) throw FormatError("bad party byte in material file");
  const std::uint64_t seed = in.get_u64();
  const std::uint64_t arith = in.get_u64();
  const std::uint64_t boolean = in.get_u64();
  const std::uint64_t ot_send = in.get_u64();
  const std::uint64_t ot_recv = in.get_u64();
  const std::uint32_t ot_size = in.get_u32();
  // Cheap sanity bound before allocating.
  if (arith * (4 + 3 * w.bytes()) > in.remaining()) throw FormatError("truncated material file");

  PartyMaterial m(party_from_index(party), w, seed);
  m.arith().t1.resize(arith);
  m.arith().t2.resize(arith);
  m.arith().t3.resize(arith);
  for (std::size_t k = 0; k < arith; ++k) {
    expect_record(in, 3 * w.bytes());
    m.arith().t1[k] = in.get_element(w);
    m.arith().t2[k] = in.get_element(w);
    m.arith().t3[k] = in.get_element(w);
  }
  const std::size_t bool_words = BitVec::word_count(boolean);
  if (bool_words * 28 > in.remaining()) throw FormatError("truncated material file");
  m.boolean() = BoolTriples{BitVec(boolean), BitVec(boolean), BitVec(boolean)};
  for (std::size_t k = 0; k < bool_words; ++k) {
    expect_record(in, 24);
    m.boolean().t1.words()[k] = in.get_u64();
    m.boolean().t2.words()[k] = in.get_u64();
    m.boolean().t3.words()[k] = in.get_u64();
  }
  m.boolean().t1.trim();
  m.boolean().t2.trim();
  m.boolean().t3.trim();
  for (std::size_t k = 0; k < ot_send; ++k) {
    expect_record(in, std::size_t{ot_size} * w.bytes());
    m.ot_sender().push_back({in.get_elements(ot_size, w)});
  }
  for (std::size_t k = 0; k < ot_recv; ++k) {
    expect_record(in, 4 + w.bytes());
    OtReceiverCorrelation c;
    c.size = ot_size;
    c.choice = in.get_u32();
    c.chosen = in.get_element(w);
    if (c.choice >= ot_size) throw FormatError("OT choice out of range");
    m.ot_receiver().push_back(c);
  }
  in.expect_end();
  return m;
}

}  // namespace sdtree
