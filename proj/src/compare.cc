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

#include "sdtree/compare.h"

#include <string>

#include "sdtree/beaver.h"
#include "sdtree/errors.h"
#include "sdtree/kernels.h"

namespace sdtree {

GpShares gp_operator(Session& s, const GpShares& high, const GpShares& low) {
  const std::size_t n = high.size();
  if (high.p.size() != n || low.g.size() != n || low.p.size() != n) {
    throw UsageError("gp_operator batch size mismatch");
  }
  const BitVec lhs[] = {low.g, high.p};
  const BitVec rhs[] = {high.p, low.p};
  const BitVec prod = beaver_mul_bool(s, concat(lhs), concat(rhs));
  return {high.g ^ prod.slice(0, n), prod.slice(n, n)};
}

ClaSchedule cla_schedule(unsigned bits) {
  if (bits < 4 || (bits & (bits - 1)) != 0) {
    throw UsageError("carry look-ahead needs a power-of-two width >= 4, got " +
                     std::to_string(bits));
  }
  ClaSchedule sched;
  // Round 1: bit positions 0..l-2 fold into l/2 entries.
  std::vector<GpOp> first;
  first.push_back({0, 0, true});
  for (std::size_t k = 1; k < bits / 2; ++k) first.push_back({2 * k, 2 * k - 1, false});
  sched.rounds.push_back(std::move(first));
  for (std::size_t width = bits / 2; width > 1; width /= 2) {
    std::vector<GpOp> ops;
    for (std::size_t k = 0; k < width / 2; ++k) ops.push_back({2 * k + 1, 2 * k, false});
    sched.rounds.push_back(std::move(ops));
  }
  return sched;
}

BitDecomposedShares decompose(const ArithShares& delta) {
  BitDecomposedShares out{delta.party, delta.width, delta.size(), {}};
  out.planes.assign(delta.width.bits(), BitVec(delta.size()));
  kernels::omp::bit_planes(delta.values, out.planes);
  return out;
}

namespace {

// Party 0 contributes its bits as the left operand, party 1 as the right;
// the other side of each operand is the zero share.
BitVec generate_signals(Session& s, const BitDecomposedShares& bits, std::size_t positions) {
  BitVec own;
  for (std::size_t q = 0; q < positions; ++q) own.append(bits.planes[q]);
  const BitVec zero(own.size());
  return s.party == Party::kZero ? beaver_mul_bool(s, own, zero)
                                 : beaver_mul_bool(s, zero, own);
}

void check_decomposition(const Session& s, const BitDecomposedShares& bits) {
  if (bits.party != s.party) throw UsageError("decomposed shares belong to another party");
  if (bits.planes.size() != bits.width.bits()) throw UsageError("wrong number of bit planes");
}

}  // namespace

BitVec cla_msb(Session& s, const BitDecomposedShares& bits) {
  check_decomposition(s, bits);
  const unsigned l = bits.width.bits();
  const std::size_t count = bits.count;
  const ClaSchedule sched = cla_schedule(l);
  if (count == 0) return BitVec();

  // Setup round: <G_q> = <a_q>·<b_q> for every q; <P_q> is local.
  const BitVec g_all = generate_signals(s, bits, l);
  std::vector<BitVec> g(l), p(l);
  for (unsigned q = 0; q < l; ++q) {
    g[q] = g_all.slice(q * count, count);
    p[q] = bits.planes[q];
  }

  for (std::size_t r = 0; r + 1 < sched.rounds.size(); ++r) {
    const auto& ops = sched.rounds[r];
    std::vector<BitVec> hg, hp, lg, lp;
    for (const auto& op : ops) {
      if (op.passthrough) continue;
      hg.push_back(g[op.high]);
      hp.push_back(p[op.high]);
      lg.push_back(g[op.low]);
      lp.push_back(p[op.low]);
    }
    const GpShares combined =
        gp_operator(s, {concat(hg), concat(hp)}, {concat(lg), concat(lp)});
    std::vector<BitVec> ng, np;
    std::size_t k = 0;
    for (const auto& op : ops) {
      if (op.passthrough) {
        ng.push_back(g[op.low]);
        np.push_back(p[op.low]);
      } else {
        ng.push_back(combined.g.slice(k * count, count));
        np.push_back(combined.p.slice(k * count, count));
        ++k;
      }
    }
    g = std::move(ng);
    p = std::move(np);
  }

  // Final round: only the generate half, c_{l-1} = G_1 + G_0·P_1.
  const GpOp last = sched.rounds.back().front();
  const BitVec carry = g[last.high] ^ beaver_mul_bool(s, g[last.low], p[last.high]);
  // v = w_{l-1} + c_{l-1}, where <w_q> is the party's own bit.
  return bits.planes[l - 1] ^ carry;
}

BitVec ripple_msb(Session& s, const BitDecomposedShares& bits) {
  check_decomposition(s, bits);
  const unsigned l = bits.width.bits();
  const std::size_t count = bits.count;
  if (count == 0) return BitVec();

  // G_{l-1} never feeds a carry below the MSB, so the setup stops at l-2.
  const BitVec g_all = generate_signals(s, bits, l - 1);
  BitVec carry = g_all.slice(0, count);  // c_1 = G_0
  for (unsigned i = 1; i + 1 < l; ++i) {
    const BitVec gi = g_all.slice(i * count, count);
    carry = gi ^ beaver_mul_bool(s, bits.planes[i], carry);
  }
  return bits.planes[l - 1] ^ carry;
}

BitVec secure_compare(Session& s, const ArithShares& x, const ArithShares& y,
                      const CompareOptions& options) {
  const ArithShares delta = options.flip_difference ? sub_local(y, x) : sub_local(x, y);
  const BitDecomposedShares bits = decompose(delta);
  return options.mode == CompareMode::kCarryLookahead ? cla_msb(s, bits) : ripple_msb(s, bits);
}

}  // namespace sdtree
