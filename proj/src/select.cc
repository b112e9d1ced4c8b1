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

#include "sdtree/select.h"

#include <string>

#include "sdtree/errors.h"
#include "sdtree/kernels.h"
#include "sdtree/wire.h"

namespace sdtree {

namespace {

std::uint64_t max_shift(BitWidth width, std::size_t n) {
  return width.mask() - (n - 1);  // 2^l - n
}

std::vector<std::uint32_t> get_u32s(ByteReader& in, std::size_t count) {
  std::vector<std::uint32_t> out(count);
  for (auto& v : out) v = in.get_u32();
  return out;
}

ArithShares select_batch(Session& s, const ArithShares& features, const ArithShares& indices) {
  const BitWidth w = features.width;
  const std::uint64_t mask = w.mask();
  const std::size_t n = features.size();
  const std::size_t count = indices.size();
  const bool is_zero = s.party == Party::kZero;

  // Step 1: shifted and masked copy of our feature share for each selection.
  std::vector<std::uint64_t> shifts(count), masks(count);
  for (std::size_t j = 0; j < count; ++j) {
    const ShiftParams p = sample_shift_params(w, n, s.prg);
    shifts[j] = p.shift;
    masks[j] = p.mask;
  }
  std::vector<std::uint64_t> arrays(count * n);
  kernels::omp::shift_arrays(features.values, shifts, masks, mask, arrays);

  // Both directions run side by side: we query the peer's arrays, the peer
  // queries ours.
  std::vector<OtReceiverCorrelation> recv_corr;
  std::vector<OtSenderCorrelation> send_corr;
  recv_corr.reserve(count);
  send_corr.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    recv_corr.push_back(s.material.take_ot_receiver(static_cast<std::uint32_t>(n)));
    send_corr.push_back(s.material.take_ot_sender(static_cast<std::uint32_t>(n)));
  }

  // Flight 1: our index share under a fresh mask.
  std::vector<std::uint64_t> index_masks(count), out1(count);
  for (std::size_t j = 0; j < count; ++j) {
    index_masks[j] = s.prg.ring(w);
    out1[j] = wrap(indices.values[j] + index_masks[j], w);
  }
  ByteWriter m1;
  m1.put_elements(out1, w);
  Bytes r1 = s.channel.exchange(m1.bytes());
  ByteReader in1(r1);
  const auto peer_masked = in1.get_elements(count, w);
  in1.expect_end();

  // Flight 2: complete the peer's masked index with our share and shift.
  std::vector<std::uint64_t> out2(count);
  for (std::size_t j = 0; j < count; ++j) {
    out2[j] = wrap(peer_masked[j] + indices.values[j] + shifts[j], w);
  }
  ByteWriter m2;
  m2.put_elements(out2, w);
  Bytes r2 = s.channel.exchange(m2.bytes());
  ByteReader in2(r2);
  const auto revealed = in2.get_elements(count, w);
  in2.expect_end();
  std::vector<std::uint32_t> query(count);
  for (std::size_t j = 0; j < count; ++j) {
    query[j] = static_cast<std::uint32_t>(wrap(revealed[j] - index_masks[j], w) % n);
  }

  // Flight 3: OT offsets.
  ByteWriter m3;
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint32_t c = recv_corr[j].choice;
    m3.put_u32(static_cast<std::uint32_t>((query[j] + n - c) % n));
  }
  Bytes r3 = s.channel.exchange(m3.bytes());
  ByteReader in3(r3);
  const auto peer_offsets = get_u32s(in3, count);
  in3.expect_end();
  for (std::uint32_t off : peer_offsets) {
    if (off >= n) throw ProtocolError("OT offset out of range");
  }

  // Flight 4: OT responses over our shifted arrays.
  std::vector<std::uint64_t> pads(count * n);
  for (std::size_t j = 0; j < count; ++j) {
    std::copy(send_corr[j].pads.begin(), send_corr[j].pads.end(),
              pads.begin() + static_cast<std::ptrdiff_t>(j * n));
  }
  std::vector<std::uint64_t> responses(count * n);
  kernels::omp::ot_responses(arrays, pads, peer_offsets, n, mask, responses);
  ByteWriter m4;
  m4.put_elements(responses, w);
  Bytes r4 = s.channel.exchange(m4.bytes());
  ByteReader in4(r4);
  const auto peer_responses = in4.get_elements(count * n, w);
  in4.expect_end();
  // got[j] = p'_peer[query] = p_peer[index] + r_peer
  std::vector<std::uint64_t> got(count);
  for (std::size_t j = 0; j < count; ++j) {
    got[j] = wrap(peer_responses[j * n + query[j]] - recv_corr[j].chosen, w);
  }

  // Flight 5: party 1 re-shares what it received.
  ArithShares out{s.party, w, std::vector<std::uint64_t>(count)};
  if (is_zero) {
    Bytes r5 = s.channel.recv_flight();
    ByteReader in5(r5);
    const auto starred = in5.get_elements(count, w);
    in5.expect_end();
    for (std::size_t j = 0; j < count; ++j) {
      out.values[j] = wrap(starred[j] + got[j] - masks[j], w);
    }
  } else {
    std::vector<std::uint64_t> starred(count);
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint64_t fresh = s.prg.ring(w);
      starred[j] = wrap(got[j] - masks[j] - fresh, w);
      out.values[j] = fresh;
    }
    ByteWriter m5;
    m5.put_elements(starred, w);
    s.channel.send_flight(m5.bytes());
  }
  return out;
}

}  // namespace

ShiftParams sample_shift_params(BitWidth width, std::size_t feature_dim, Prg& prg) {
  if (feature_dim == 0) throw UsageError("empty feature array");
  ShiftParams p;
  p.shift = prg.uniform_between(0, max_shift(width, feature_dim));
  p.mask = prg.ring(width);
  return p;
}

std::size_t shifted_position(std::uint64_t index, std::uint64_t shift, BitWidth width,
                             std::size_t n) {
  return static_cast<std::size_t>(wrap(index + shift, width) % n);
}

std::vector<std::uint64_t> build_shifted_array(std::span<const std::uint64_t> share,
                                               BitWidth width, const ShiftParams& params) {
  const std::size_t n = share.size();
  if (n == 0) throw UsageError("empty feature array");
  if (params.shift > max_shift(width, n)) {
    throw UsageError("shift " + std::to_string(params.shift) + " lets the index window wrap");
  }
  std::vector<std::uint64_t> out(n);
  const std::uint64_t shift = params.shift;
  const std::uint64_t r = wrap(params.mask, width);
  kernels::serial::shift_arrays(share, std::span<const std::uint64_t>(&shift, 1),
                                std::span<const std::uint64_t>(&r, 1), width.mask(), out);
  return out;
}

std::uint64_t ot_1ofN_receive(Session& s, const OtReceiverCorrelation& corr,
                              std::uint32_t index) {
  const std::uint32_t n = corr.size;
  if (n == 0 || index >= n) throw UsageError("OT index out of range");
  const BitWidth w = s.material.width();
  ByteWriter m;
  m.put_u32((index + n - corr.choice) % n);
  s.channel.send_flight(m.bytes());
  Bytes reply = s.channel.recv_flight();
  ByteReader in(reply);
  const auto masked = in.get_elements(n, w);
  in.expect_end();
  return wrap(masked[index] - corr.chosen, w);
}

void ot_1ofN_send(Session& s, const OtSenderCorrelation& corr,
                  std::span<const std::uint64_t> messages) {
  const std::size_t n = corr.pads.size();
  if (messages.size() != n) {
    throw UsageError("OT has " + std::to_string(messages.size()) +
                     " messages but the correlation has size " + std::to_string(n));
  }
  const BitWidth w = s.material.width();
  Bytes req = s.channel.recv_flight();
  ByteReader in(req);
  const std::uint32_t offset = in.get_u32();
  in.expect_end();
  if (offset >= n) throw ProtocolError("OT offset out of range");
  std::vector<std::uint64_t> out(n);
  kernels::serial::ot_responses(messages, corr.pads, std::span<const std::uint32_t>(&offset, 1),
                                n, w.mask(), out);
  ByteWriter m;
  m.put_elements(out, w);
  s.channel.send_flight(m.bytes());
}

ArithShares oblivious_select(Session& s, const ArithShares& features,
                             const ArithShares& indices, const SelectOptions& options) {
  if (features.party != s.party || indices.party != s.party) {
    throw UsageError("selection inputs belong to another party");
  }
  if (!(features.width == indices.width) || !(features.width == s.material.width())) {
    throw UsageError("selection width mismatch");
  }
  if (features.size() == 0) throw UsageError("empty feature array");
  if (indices.size() == 0) return {s.party, features.width, {}};
  if (!options.sequential) return select_batch(s, features, indices);

  ArithShares out{s.party, features.width, std::vector<std::uint64_t>(indices.size())};
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const ArithShares one{s.party, indices.width, {indices.values[j]}};
    out.values[j] = select_batch(s, features, one).values[0];
  }
  return out;
}

}  // namespace sdtree
