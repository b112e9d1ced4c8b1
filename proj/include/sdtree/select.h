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

#include "sdtree/preprocessing.h"
#include "sdtree/session.h"
#include "sdtree/sharing.h"

namespace sdtree {

// Per-selection randomness of one server: the index shift s and the entry
// mask r. The shift stays within [0, 2^l - n] so that the window
// {i + s : i < n} never wraps and its residues mod n are all distinct.
struct ShiftParams {
  std::uint64_t shift = 0;
  std::uint64_t mask = 0;
};

ShiftParams sample_shift_params(BitWidth width, std::size_t feature_dim, Prg& prg);

// Position at which entry `index` lands: ((index + shift) mod 2^l) mod n.
std::size_t shifted_position(std::uint64_t index, std::uint64_t shift, BitWidth width,
                             std::size_t n);

// p'[((i + s) mod 2^l) mod n] = p[i] + r. Throws UsageError for a shift
// that would wrap.
std::vector<std::uint64_t> build_shifted_array(std::span<const std::uint64_t> share,
                                               BitWidth width, const ShiftParams& params);

// 1-of-n OT from a random OT correlation. The receiver sends the offset
// (index - c) mod n; the sender answers with messages[j] + R[(j - offset) mod n]
// for every j; the receiver removes R[c]. Two one-way flights.
std::uint64_t ot_1ofN_receive(Session& s, const OtReceiverCorrelation& corr,
                              std::uint32_t index);
void ot_1ofN_send(Session& s, const OtSenderCorrelation& corr,
                  std::span<const std::uint64_t> messages);

struct SelectOptions {
  // Run each selection on its own (5 rounds each) instead of sharing
  // flights across the batch. Debugging aid.
  bool sequential = false;
};

// Oblivious array read: for every shared index in `indices`, returns this
// party's share of features[index]. Consumes one sender and one receiver
// OT correlation of size n per selection. With batching the whole set costs
// five rounds: masked index, shifted index, OT offset, OT response and
// re-share. An index outside [0, n) yields an unspecified value.
ArithShares oblivious_select(Session& s, const ArithShares& features,
                             const ArithShares& indices, const SelectOptions& options = {});

}  // namespace sdtree
