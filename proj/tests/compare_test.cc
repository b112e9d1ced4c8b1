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

#include <gtest/gtest.h>

#include "oracles.h"
#include "sdtree/two_party.h"

namespace sdtree {
namespace {

struct Pair {
  unsigned g, p;
};

// The ⋄ operator from its definition.
Pair diamond(Pair high, Pair low) { return {high.g ^ (low.g & high.p), high.p & low.p}; }

// Evaluates the look-ahead schedule in the clear and returns c_{l-1}.
unsigned schedule_carry(std::uint64_t a, std::uint64_t b, unsigned bits) {
  std::vector<Pair> level(bits);
  for (unsigned q = 0; q < bits; ++q) {
    const unsigned aq = (a >> q) & 1u, bq = (b >> q) & 1u;
    level[q] = {aq & bq, aq ^ bq};
  }
  for (const auto& round : cla_schedule(bits).rounds) {
    std::vector<Pair> next;
    for (const auto& op : round) {
      next.push_back(op.passthrough ? level[op.low] : diamond(level[op.high], level[op.low]));
    }
    level = std::move(next);
  }
  EXPECT_EQ(level.size(), 1u);
  return level[0].g;
}

struct CompareRun {
  BitVec v;
  RunTranscript transcript;
  std::size_t triples = 0;
};

CompareRun compare(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
                   BitWidth w, CompareOptions opt, std::uint64_t seed = 1) {
  const std::size_t n = xs.size();
  Prg prg(seed, "compare-inputs");
  std::vector<std::uint64_t> xv(n), yv(n);
  for (std::size_t i = 0; i < n; ++i) {
    xv[i] = encode_signed(xs[i], w).value();
    yv[i] = encode_signed(ys[i], w).value();
  }
  auto [x0, x1] = share_arith_vec(xv, w, prg);
  auto [y0, y1] = share_arith_vec(yv, w, prg);
  Budget b;
  b.bool_triples = n * compare_bool_triples(w, opt.mode);
  auto [m0, m1] = dealer_generate(b, w, seed);
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return s.party == Party::kZero ? secure_compare(s, x0, y0, opt) : secure_compare(s, x1, y1, opt);
  });
  EXPECT_EQ(m0.bool_remaining(), 0u);
  EXPECT_EQ(m1.bool_remaining(), 0u);
  return {run.out0 ^ run.out1, run.transcript, m0.bool_consumed()};
}

const CompareOptions kCla{CompareMode::kCarryLookahead, false};
const CompareOptions kRipple{CompareMode::kRippleCarry, false};

TEST(Schedule, ShapeAtSixtyFour) {
  const ClaSchedule s = cla_schedule(64);
  ASSERT_EQ(s.rounds.size(), 6u);
  EXPECT_EQ(s.rounds[0].size(), 32u);
  EXPECT_TRUE(s.rounds[0][0].passthrough);
  EXPECT_EQ(s.rounds[0][1].high, 2u);
  EXPECT_EQ(s.rounds[0][1].low, 1u);
  const std::size_t sizes[] = {32, 16, 8, 4, 2, 1};
  for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(s.rounds[r].size(), sizes[r]);
  EXPECT_THROW(cla_schedule(6), UsageError);
  EXPECT_THROW(cla_schedule(2), UsageError);
}

TEST(Schedule, FourBitTrace) {
  // a = 0110, b = 0011
  EXPECT_EQ(testing::full_adder_carry(6, 3, 1), 0u);
  EXPECT_EQ(testing::full_adder_carry(6, 3, 2), 1u);
  EXPECT_EQ(testing::full_adder_carry(6, 3, 3), 1u);
  EXPECT_EQ(testing::full_adder_msb(6, 3, 4), 1u);
  EXPECT_EQ(schedule_carry(6, 3, 4), 1u);
}

TEST(Schedule, CarryFormulaTwoBits) {
  // c_2 = G_1 + P_1·G_0 for every pair of 2-bit inputs.
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      const unsigned g0 = a & b & 1u, g1 = (a >> 1) & (b >> 1) & 1u, p1 = ((a ^ b) >> 1) & 1u;
      EXPECT_EQ(testing::full_adder_carry(a, b, 2), g1 ^ (p1 & g0));
    }
  }
}

TEST(Schedule, MatchesFullAdderExhaustive) {
  for (unsigned bits : {4u, 8u}) {
    for (std::uint64_t a = 0; a < (1u << bits); ++a) {
      for (std::uint64_t b = 0; b < (1u << bits); ++b) {
        ASSERT_EQ(schedule_carry(a, b, bits), testing::full_adder_carry(a, b, bits - 1));
      }
    }
  }
  Prg prg(1);
  for (unsigned bits : {16u, 32u, 64u}) {
    const std::uint64_t mask = bits == 64 ? ~0ull : (1ull << bits) - 1;
    for (int i = 0; i < 5000; ++i) {
      const std::uint64_t a = prg.next_u64() & mask, b = prg.next_u64() & mask;
      ASSERT_EQ(schedule_carry(a, b, bits), testing::full_adder_carry(a, b, bits - 1));
    }
  }
}

TEST(Diamond, AssociativeWithIdentityPlaintext) {
  for (unsigned c = 0; c < 64; ++c) {
    const Pair x{c & 1, (c >> 1) & 1}, y{(c >> 2) & 1, (c >> 3) & 1}, z{(c >> 4) & 1, (c >> 5) & 1};
    const Pair l = diamond(diamond(x, y), z), r = diamond(x, diamond(y, z));
    ASSERT_EQ(l.g, r.g);
    ASSERT_EQ(l.p, r.p);
    const Pair id = diamond(x, {0, 1});
    ASSERT_EQ(id.g, x.g);
    ASSERT_EQ(id.p, x.p);
  }
}

// Secure ⋄ on every combination of secrets and share splits.
struct SharedPairs {
  GpShares p0, p1;
};

SharedPairs share_pairs(const std::vector<Pair>& secret, const std::vector<Pair>& r) {
  const std::size_t n = secret.size();
  SharedPairs s{{BitVec(n), BitVec(n)}, {BitVec(n), BitVec(n)}};
  for (std::size_t i = 0; i < n; ++i) {
    s.p0.g.set(i, secret[i].g ^ r[i].g);
    s.p0.p.set(i, secret[i].p ^ r[i].p);
    s.p1.g.set(i, r[i].g);
    s.p1.p.set(i, r[i].p);
  }
  return s;
}

TEST(Diamond, SecureOperatorTruthTable) {
  // 4 secret bits (G'', P'', G', P') x 4 share bits.
  constexpr std::size_t n = 256;
  std::vector<Pair> hs(n), ls(n), hr(n), lr(n);
  for (unsigned c = 0; c < n; ++c) {
    hs[c] = {c & 1u, (c >> 1) & 1u};
    ls[c] = {(c >> 2) & 1u, (c >> 3) & 1u};
    hr[c] = {(c >> 4) & 1u, (c >> 5) & 1u};
    lr[c] = {(c >> 6) & 1u, (c >> 7) & 1u};
  }
  const auto high = share_pairs(hs, hr), low = share_pairs(ls, lr);
  Budget b;
  b.bool_triples = 2 * n;
  auto [m0, m1] = dealer_generate(b, BitWidth::of(8), 2);
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return s.party == Party::kZero ? gp_operator(s, high.p0, low.p0) : gp_operator(s, high.p1, low.p1);
  });
  EXPECT_EQ(run.transcript.total_rounds(), 1u);
  for (unsigned c = 0; c < n; ++c) {
    const Pair want = diamond(hs[c], ls[c]);
    ASSERT_EQ(run.out0.g.get(c) ^ run.out1.g.get(c), want.g);
    ASSERT_EQ(run.out0.p.get(c) ^ run.out1.p.get(c), want.p);
  }
}

TEST(Diamond, SecureAssociativityAndIdentity) {
  // 6 secret bits x 6 share bits = 4096 cases.
  constexpr std::size_t n = 4096;
  std::vector<Pair> xs(n), ys(n), zs(n), xr(n), yr(n), zr(n), ids(n, {0, 1}), idr(n);
  Prg prg(3);
  for (unsigned c = 0; c < n; ++c) {
    xs[c] = {c & 1u, (c >> 1) & 1u};
    ys[c] = {(c >> 2) & 1u, (c >> 3) & 1u};
    zs[c] = {(c >> 4) & 1u, (c >> 5) & 1u};
    xr[c] = {(c >> 6) & 1u, (c >> 7) & 1u};
    yr[c] = {(c >> 8) & 1u, (c >> 9) & 1u};
    zr[c] = {(c >> 10) & 1u, (c >> 11) & 1u};
    idr[c] = {prg.next_bit(), prg.next_bit()};
  }
  const auto x = share_pairs(xs, xr), y = share_pairs(ys, yr), z = share_pairs(zs, zr),
             id = share_pairs(ids, idr);
  Budget b;
  b.bool_triples = 2 * n * 5;
  auto [m0, m1] = dealer_generate(b, BitWidth::of(8), 4);
  struct Out {
    GpShares left, right, ident;
  };
  auto run = run_two_party(m0, m1, [&](Session& s) {
    const bool zero = s.party == Party::kZero;
    const GpShares& X = zero ? x.p0 : x.p1;
    const GpShares& Y = zero ? y.p0 : y.p1;
    const GpShares& Z = zero ? z.p0 : z.p1;
    const GpShares& I = zero ? id.p0 : id.p1;
    const GpShares xy = gp_operator(s, X, Y);
    const GpShares yz = gp_operator(s, Y, Z);
    return Out{gp_operator(s, xy, Z), gp_operator(s, X, yz), gp_operator(s, X, I)};
  });
  const BitVec lg = run.out0.left.g ^ run.out1.left.g, lp = run.out0.left.p ^ run.out1.left.p;
  const BitVec rg = run.out0.right.g ^ run.out1.right.g, rp = run.out0.right.p ^ run.out1.right.p;
  EXPECT_EQ(lg, rg);
  EXPECT_EQ(lp, rp);
  for (unsigned c = 0; c < n; ++c) {
    const Pair want = diamond(diamond(xs[c], ys[c]), zs[c]);
    ASSERT_EQ(lg.get(c), want.g);
    ASSERT_EQ(lp.get(c), want.p);
    ASSERT_EQ(run.out0.ident.g.get(c) ^ run.out1.ident.g.get(c), xs[c].g);
    ASSERT_EQ(run.out0.ident.p.get(c) ^ run.out1.ident.p.get(c), xs[c].p);
  }
}

TEST(Decompose, PlanesHoldOwnShareBits) {
  Prg prg(5);
  const BitWidth w = BitWidth::of(16);
  ArithShares a{Party::kOne, w, std::vector<std::uint64_t>(100)};
  for (auto& v : a.values) v = prg.ring(w);
  const BitDecomposedShares d = decompose(a);
  ASSERT_EQ(d.planes.size(), 16u);
  EXPECT_EQ(d.count, 100u);
  for (unsigned q = 0; q < 16; ++q) {
    for (std::size_t k = 0; k < 100; ++k) ASSERT_EQ(d.planes[q].get(k), (a.values[k] >> q) & 1u);
  }
}

TEST(Compare, Examples) {
  const BitWidth w = BitWidth::of(8);
  for (auto opt : {kCla, kRipple}) {
    const auto r = compare({3, 5, 7, -64, 63}, {5, 3, 7, 63, -64}, w, opt);
    EXPECT_EQ(r.v.get(0), 1u);
    EXPECT_EQ(r.v.get(1), 0u);
    EXPECT_EQ(r.v.get(2), 0u);  // ties go left
    EXPECT_EQ(r.v.get(3), 1u);
    EXPECT_EQ(r.v.get(4), 0u);
  }
}

TEST(Compare, ExhaustiveSmallWidthBothModes) {
  const BitWidth w = BitWidth::of(8);
  std::vector<std::int64_t> xs, ys;
  for (std::int64_t x = w.signed_min(); x <= w.signed_max(); ++x) {
    for (std::int64_t y = w.signed_min(); y <= w.signed_max(); ++y) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  const auto cla = compare(xs, ys, w, kCla, 6);
  const auto ripple = compare(xs, ys, w, kRipple, 7);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ASSERT_EQ(cla.v.get(i), xs[i] < ys[i] ? 1u : 0u) << xs[i] << " " << ys[i];
  }
  EXPECT_EQ(cla.v, ripple.v);
}

TEST(Compare, RandomWideRing) {
  const BitWidth w = BitWidth::w64();
  Prg prg(8);
  std::vector<std::int64_t> xs(100000), ys(100000);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = testing::random_signed(prg, w);
    // Some near ties and exact ties.
    ys[i] = i % 10 == 0 ? xs[i] : (i % 10 == 1 ? xs[i] + 1 : testing::random_signed(prg, w));
  }
  const auto r = compare(xs, ys, w, kCla, 9);
  for (std::size_t i = 0; i < xs.size(); ++i) ASSERT_EQ(r.v.get(i), xs[i] < ys[i] ? 1u : 0u);
  xs.resize(5000);
  ys.resize(5000);
  const auto rr = compare(xs, ys, w, kRipple, 10);
  for (std::size_t i = 0; i < xs.size(); ++i) ASSERT_EQ(rr.v.get(i), xs[i] < ys[i] ? 1u : 0u);
}

TEST(Compare, RoundAndTripleCounts) {
  for (unsigned bits : {8u, 16u, 32u, 64u}) {
    const BitWidth w = BitWidth::of(bits);
    for (std::size_t J : {1u, 7u, 100u}) {
      const std::vector<std::int64_t> xs(J, 1), ys(J, 2);
      const auto cla = compare(xs, ys, w, kCla);
      EXPECT_EQ(cla.transcript.total_rounds(), w.log2() + 1);
      EXPECT_EQ(cla.triples, J * (3 * bits - 5));
      const auto ripple = compare(xs, ys, w, kRipple);
      EXPECT_EQ(ripple.transcript.total_rounds(), bits - 1);
      EXPECT_EQ(ripple.triples, J * (2 * bits - 3));
    }
  }
  const auto one = compare({0}, {0}, BitWidth::w64(), kCla);
  EXPECT_EQ(one.transcript.total_rounds(), 7u);
  EXPECT_EQ(one.triples, 187u);
  EXPECT_EQ(compare({0}, {0}, BitWidth::w64(), kRipple).transcript.total_rounds(), 63u);
}

TEST(Compare, FlippedDifferenceInvertsStrictOrder) {
  const auto r = compare({1, 2, 3}, {2, 1, 3}, BitWidth::of(8),
                         {CompareMode::kCarryLookahead, true});
  EXPECT_EQ(r.v.get(0), 0u);
  EXPECT_EQ(r.v.get(1), 1u);
  EXPECT_EQ(r.v.get(2), 0u);
}

TEST(Compare, DepletionSurfaces) {
  const BitWidth w = BitWidth::of(8);
  Budget b;
  b.bool_triples = 3 * 8 - 6;
  auto [m0, m1] = dealer_generate(b, w, 1);
  const ArithShares z0{Party::kZero, w, {0}}, z1{Party::kOne, w, {0}};
  EXPECT_THROW(run_two_party(m0, m1,
                             [&](Session& s) {
                               const auto& z = s.party == Party::kZero ? z0 : z1;
                               return secure_compare(s, z, z);
                             }),
               DepletionError);
}

TEST(Compare, EmptyBatch) {
  const BitWidth w = BitWidth::of(8);
  auto [m0, m1] = dealer_generate(Budget{}, w, 1);
  auto run = run_two_party(m0, m1, [&](Session& s) {
    const ArithShares e{s.party, w, {}};
    return secure_compare(s, e, e);
  });
  EXPECT_EQ(run.out0.size(), 0u);
  EXPECT_EQ(run.transcript.total_rounds(), 0u);
}

}  // namespace
}  // namespace sdtree
