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

#include "sdtree/sharing.h"

#include <string>

#include "sdtree/errors.h"

namespace sdtree {

namespace {

void require_same_party(Party a, Party b) {
  if (a != b) throw UsageError("local share operation across different parties");
}

void require_opposite(Party a, Party b) {
  if (a == b) throw UsageError("reconstruction needs shares from both parties");
}

void require_compatible(const ArithShares& a, const ArithShares& b) {
  require_same_party(a.party, b.party);
  if (!(a.width == b.width)) throw UsageError("share width mismatch");
  if (a.size() != b.size()) throw UsageError("share batch length mismatch");
}

}  // namespace

Party party_from_index(unsigned i) {
  if (i > 1) throw UsageError("party index must be 0 or 1");
  return static_cast<Party>(i);
}

std::pair<ArithShare, ArithShare> share_arith_with(const RingElement& secret,
                                                    const RingElement& r) {
  return {ArithShare{Party::kZero, secret - r}, ArithShare{Party::kOne, r}};
}

std::pair<ArithShare, ArithShare> share_arith(const RingElement& secret, Prg& prg) {
  return share_arith_with(secret, RingElement(secret.width(), prg.ring(secret.width())));
}

RingElement reconstruct_arith(const ArithShare& a, const ArithShare& b) {
  require_opposite(a.party, b.party);
  return a.value + b.value;
}

std::pair<BoolShare, BoolShare> share_bool_with(unsigned bit, unsigned r) {
  return {BoolShare{Party::kZero, static_cast<std::uint8_t>((bit ^ r) & 1u)},
          BoolShare{Party::kOne, static_cast<std::uint8_t>(r & 1u)}};
}

std::pair<BoolShare, BoolShare> share_bool(unsigned bit, Prg& prg) {
  return share_bool_with(bit, prg.next_bit());
}

unsigned reconstruct_bool(const BoolShare& a, const BoolShare& b) {
  require_opposite(a.party, b.party);
  return (a.bit ^ b.bit) & 1u;
}

ArithShare add_local(const ArithShare& a, const ArithShare& b) {
  require_same_party(a.party, b.party);
  return {a.party, a.value + b.value};
}

ArithShare sub_local(const ArithShare& a, const ArithShare& b) {
  require_same_party(a.party, b.party);
  return {a.party, a.value - b.value};
}

ArithShare scale_local(const ArithShare& a, const RingElement& gamma) {
  return {a.party, a.value * gamma};
}

ArithShare add_const(const ArithShare& a, const RingElement& gamma) {
  if (a.party == Party::kZero) return {a.party, a.value + gamma};
  if (!(a.value.width() == gamma.width())) throw UsageError("ring width mismatch");
  return a;
}

std::pair<ArithShares, ArithShares> share_arith_vec(std::span<const std::uint64_t> secrets,
                                                    BitWidth width, Prg& prg) {
  ArithShares s0{Party::kZero, width, std::vector<std::uint64_t>(secrets.size())};
  ArithShares s1{Party::kOne, width, std::vector<std::uint64_t>(secrets.size())};
  for (std::size_t i = 0; i < secrets.size(); ++i) {
    const std::uint64_t r = prg.ring(width);
    s0.values[i] = wrap(secrets[i] - r, width);
    s1.values[i] = r;
  }
  return {std::move(s0), std::move(s1)};
}

std::vector<std::uint64_t> reconstruct_arith_vec(const ArithShares& a, const ArithShares& b) {
  require_opposite(a.party, b.party);
  if (!(a.width == b.width) || a.size() != b.size()) {
    throw UsageError("cannot reconstruct mismatched share batches");
  }
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = wrap(a.values[i] + b.values[i], a.width);
  return out;
}

std::pair<BoolShares, BoolShares> share_bool_vec(const BitVec& secrets, Prg& prg) {
  BitVec r(secrets.size());
  prg.fill(r.words());
  r.trim();
  return {BoolShares{Party::kZero, secrets ^ r}, BoolShares{Party::kOne, std::move(r)}};
}

BitVec reconstruct_bool_vec(const BoolShares& a, const BoolShares& b) {
  require_opposite(a.party, b.party);
  return a.bits ^ b.bits;
}

ArithShares add_local(const ArithShares& a, const ArithShares& b) {
  require_compatible(a, b);
  ArithShares out{a.party, a.width, std::vector<std::uint64_t>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = wrap(a.values[i] + b.values[i], a.width);
  return out;
}

ArithShares sub_local(const ArithShares& a, const ArithShares& b) {
  require_compatible(a, b);
  ArithShares out{a.party, a.width, std::vector<std::uint64_t>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = wrap(a.values[i] - b.values[i], a.width);
  return out;
}

ArithShares add_const(const ArithShares& a, std::uint64_t gamma) {
  if (a.party == Party::kOne) return a;
  ArithShares out = a;
  for (auto& v : out.values) v = wrap(v + gamma, a.width);
  return out;
}

ArithShares scale_local(const ArithShares& a, std::uint64_t gamma) {
  ArithShares out = a;
  for (auto& v : out.values) v = wrap(v * gamma, a.width);
  return out;
}

}  // namespace sdtree
