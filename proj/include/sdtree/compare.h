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
#include <vector>

#include "sdtree/bitvec.h"
#include "sdtree/preprocessing.h"
#include "sdtree/session.h"
#include "sdtree/sharing.h"

namespace sdtree {

// A batch of shared (carry generate, carry propagate) pairs.
struct GpShares {
  BitVec g, p;
  std::size_t size() const { return g.size(); }
};

// (G*, P*) = high ⋄ low with G* = G'' + G'·P'' and P* = P''·P' over Z_2.
// Both products of every pair in the batch share one round.
GpShares gp_operator(Session& s, const GpShares& high, const GpShares& low);

// One round of the carry look-ahead tree: entry k of the next level is
// level[ops[k].high] ⋄ level[ops[k].low], or a copy of level[ops[k].low]
// when `passthrough` is set.
struct GpOp {
  std::size_t high = 0;
  std::size_t low = 0;
  bool passthrough = false;
};

struct ClaSchedule {
  // rounds[r] builds level r + 1 from level r; level 0 is (G_q, P_q).
  std::vector<std::vector<GpOp>> rounds;
  // The last round only needs the generate output (c_{l-1}).
};

// The reduction tree for an l-bit carry into position l - 1: round 1 copies
// (G_0, P_0) and pairs (G_2k, P_2k) ⋄ (G_2k-1, P_2k-1); later rounds pair
// neighbours (2k+1, 2k); the final round yields a single entry. log2(l)
// rounds. l must be a power of two, at least 4.
ClaSchedule cla_schedule(unsigned bits);

// A party's own share bits of Δ split into bit planes: planes[q] holds bit q
// of [Δ]_m for every comparison in the batch.
struct BitDecomposedShares {
  Party party;
  BitWidth width;
  std::size_t count = 0;
  std::vector<BitVec> planes;
};

BitDecomposedShares decompose(const ArithShares& delta);

// Shares of msb(Δ) via carry look-ahead: one setup round for all G_q, then
// log2(l) rounds over the schedule. 3l - 5 Boolean triples per comparison.
BitVec cla_msb(Session& s, const BitDecomposedShares& bits);

// Ripple-carry baseline: setup round for G_0..G_{l-2}, then one round per
// carry c_2..c_{l-1}. l - 1 rounds, 2l - 3 Boolean triples per comparison.
BitVec ripple_msb(Session& s, const BitDecomposedShares& bits);

struct CompareOptions {
  CompareMode mode = CompareMode::kCarryLookahead;
  // Fault injection for self-tests: compute Δ = y - x instead of x - y.
  bool flip_difference = false;
};

// Shares of v = (x < y) for every pair: the MSB of Δ = x - y. Correct for
// inputs in the encodable signed range.
BitVec secure_compare(Session& s, const ArithShares& x, const ArithShares& y,
                      const CompareOptions& options = {});

}  // namespace sdtree
