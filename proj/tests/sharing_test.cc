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

#include <gtest/gtest.h>

#include "oracles.h"
#include "sdtree/beaver.h"
#include "sdtree/preprocessing.h"
#include "sdtree/two_party.h"
#include "sdtree/wire.h"

namespace sdtree {
namespace {

const BitWidth w8 = BitWidth::of(8);
RingElement r8(std::uint64_t v) { return RingElement(w8, v); }

TEST(Share, Examples) {
  auto [a0, a1] = share_arith_with(r8(5), r8(3));
  EXPECT_EQ(a0.value.value(), 2u);
  EXPECT_EQ(a1.value.value(), 3u);
  EXPECT_EQ(a0.party, Party::kZero);
  EXPECT_EQ(a1.party, Party::kOne);
  auto [b0, b1] = share_arith_with(r8(5), r8(200));
  EXPECT_EQ(b0.value.value(), 61u);
  EXPECT_EQ(b1.value.value(), 200u);
  EXPECT_EQ(reconstruct_arith(a0, a1).value(), 5u);
  EXPECT_EQ(reconstruct_bool({Party::kZero, 1}, {Party::kOne, 1}), 0u);
  EXPECT_EQ(reconstruct_bool({Party::kZero, 1}, {Party::kOne, 0}), 1u);
}

TEST(Share, SamePartyPairRejected) {
  EXPECT_THROW(reconstruct_arith({Party::kZero, r8(1)}, {Party::kZero, r8(2)}), UsageError);
  EXPECT_THROW(reconstruct_bool({Party::kOne, 1}, {Party::kOne, 0}), UsageError);
  EXPECT_THROW(add_local(ArithShare{Party::kZero, r8(1)}, ArithShare{Party::kOne, r8(2)}),
               UsageError);
}

TEST(Share, ReconstructExhaustive8) {
  Prg prg(1);
  for (unsigned a = 0; a < 256; ++a) {
    auto [s0, s1] = share_arith(r8(a), prg);
    ASSERT_EQ(reconstruct_arith(s0, s1).value(), a);
    ASSERT_EQ(reconstruct_arith(s1, s0).value(), a);
  }
  for (unsigned b = 0; b < 2; ++b) {
    for (int i = 0; i < 20; ++i) {
      auto [s0, s1] = share_bool(b, prg);
      ASSERT_EQ(reconstruct_bool(s0, s1), b);
    }
  }
}

TEST(Share, LocalOperations) {
  auto [a0, a1] = share_arith_with(r8(15), r8(13));  // (2, 13)
  auto [b0, b1] = share_arith_with(r8(20), r8(10));  // (10, 10)
  ASSERT_EQ(a0.value.value(), 2u);
  const auto s0 = add_local(a0, b0), s1 = add_local(a1, b1);
  EXPECT_EQ(s0.value.value(), 12u);
  EXPECT_EQ(s1.value.value(), 23u);
  EXPECT_EQ(reconstruct_arith(s0, s1).value(), 35u);
  EXPECT_EQ(reconstruct_arith(sub_local(a0, b0), sub_local(a1, b1)).value(), 251u);
  const auto z0 = scale_local(a0, r8(0)), z1 = scale_local(a1, r8(0));
  EXPECT_EQ(z0.value.value(), 0u);
  EXPECT_EQ(z1.value.value(), 0u);
  EXPECT_EQ(reconstruct_arith(scale_local(a0, r8(3)), scale_local(a1, r8(3))).value(), 45u);
  const auto c0 = add_const(a0, r8(7)), c1 = add_const(a1, r8(7));
  EXPECT_EQ(c1.value.value(), a1.value.value());
  EXPECT_EQ(reconstruct_arith(c0, c1).value(), 22u);
}

TEST(Share, LinearHomomorphismExhaustive8) {
  Prg prg(2);
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      auto [a0, a1] = share_arith(r8(a), prg);
      auto [b0, b1] = share_arith(r8(b), prg);
      ASSERT_EQ(reconstruct_arith(add_local(a0, b0), add_local(a1, b1)).value(), (a + b) & 255);
    }
  }
}

TEST(Share, VectorOperations) {
  Prg prg(3);
  const std::vector<std::uint64_t> xs = {1, 2, 250}, ys = {10, 20, 30};
  auto [x0, x1] = share_arith_vec(xs, w8, prg);
  auto [y0, y1] = share_arith_vec(ys, w8, prg);
  EXPECT_EQ(reconstruct_arith_vec(add_local(x0, y0), add_local(x1, y1)),
            (std::vector<std::uint64_t>{11, 22, 24}));
  EXPECT_EQ(reconstruct_arith_vec(sub_local(x0, y0), sub_local(x1, y1)),
            (std::vector<std::uint64_t>{247, 238, 220}));
  EXPECT_EQ(reconstruct_arith_vec(add_const(x0, 1), add_const(x1, 1)),
            (std::vector<std::uint64_t>{2, 3, 251}));
  EXPECT_EQ(reconstruct_arith_vec(scale_local(x0, 2), scale_local(x1, 2)),
            (std::vector<std::uint64_t>{2, 4, 244}));
  BitVec bits(70);
  for (std::size_t i = 0; i < 70; i += 3) bits.set(i, 1);
  auto [b0, b1] = share_bool_vec(bits, prg);
  EXPECT_EQ(reconstruct_bool_vec(b0, b1), bits);
}

// Marginal of one share over 10^5 sharings of a fixed secret.
TEST(Share, ShareIsUniformChiSquare) {
  Prg prg(4, "uniformity");
  for (unsigned secret : {0u, 77u, 255u}) {
    std::vector<std::uint64_t> c0(256, 0), c1(256, 0);
    for (int i = 0; i < 100000; ++i) {
      auto [s0, s1] = share_arith(r8(secret), prg);
      ++c0[s0.value.value()];
      ++c1[s1.value.value()];
    }
    EXPECT_LT(testing::chi_square_uniform(c0), testing::kChi2Crit001Df255);
    EXPECT_LT(testing::chi_square_uniform(c1), testing::kChi2Crit001Df255);
  }
}

// ---- preprocessing ----

TEST(Dealer, ArithmeticTriplesAreValid) {
  for (unsigned bits : {8u, 64u}) {
    const BitWidth w = BitWidth::of(bits);
    Budget b;
    b.arith_triples = 10000;
    auto [m0, m1] = dealer_generate(b, w, 9);
    for (std::size_t k = 0; k < 10000; ++k) {
      const auto t1 = wrap(m0.arith().t1[k] + m1.arith().t1[k], w);
      const auto t2 = wrap(m0.arith().t2[k] + m1.arith().t2[k], w);
      const auto t3 = wrap(m0.arith().t3[k] + m1.arith().t3[k], w);
      ASSERT_EQ(t3, wrap(t1 * t2, w));
    }
  }
}

TEST(Dealer, BooleanTriplesAreValidAndBalanced) {
  Budget b;
  b.bool_triples = 10007;
  auto [m0, m1] = dealer_generate(b, w8, 10);
  const BitVec t1 = m0.boolean().t1 ^ m1.boolean().t1;
  const BitVec t2 = m0.boolean().t2 ^ m1.boolean().t2;
  const BitVec t3 = m0.boolean().t3 ^ m1.boolean().t3;
  EXPECT_EQ(t3, t1 & t2);
  std::vector<std::uint64_t> counts(4, 0);
  for (std::size_t k = 0; k < t1.size(); ++k) ++counts[t1.get(k) * 2 + t2.get(k)];
  EXPECT_LT(testing::chi_square_uniform(counts), testing::kChi2Crit001Df3);
}

TEST(Dealer, OtCorrelationsAreConsistent) {
  Budget b;
  b.ot_per_direction = 300;
  b.ot_size = 9;
  auto [m0, m1] = dealer_generate(b, BitWidth::w64(), 11);
  ASSERT_EQ(m0.ot_receiver().size(), 300u);
  ASSERT_EQ(m1.ot_sender().size(), 300u);
  ASSERT_EQ(m1.ot_receiver().size(), 300u);
  std::vector<std::uint64_t> counts(9, 0);
  for (std::size_t k = 0; k < 300; ++k) {
    const auto& r = m0.ot_receiver()[k];
    const auto& s = m1.ot_sender()[k];
    ASSERT_EQ(r.size, 9u);
    ASSERT_LT(r.choice, 9u);
    ASSERT_EQ(s.pads[r.choice], r.chosen);
    ASSERT_EQ(m0.ot_sender()[k].pads[m1.ot_receiver()[k].choice], m1.ot_receiver()[k].chosen);
    ++counts[r.choice];
  }
  EXPECT_LT(testing::chi_square_uniform(counts), testing::kChi2Crit001Df8);
}

TEST(Dealer, DeterministicUnderSeed) {
  const Budget b = inference_budget(3, 13, BitWidth::w64(), CompareMode::kCarryLookahead);
  auto [a0, a1] = dealer_generate(b, BitWidth::w64(), 5);
  auto [b0, b1] = dealer_generate(b, BitWidth::w64(), 5);
  auto [c0, c1] = dealer_generate(b, BitWidth::w64(), 6);
  EXPECT_EQ(serialize_material(a0), serialize_material(b0));
  EXPECT_EQ(serialize_material(a1), serialize_material(b1));
  EXPECT_NE(serialize_material(a0), serialize_material(c0));
}

TEST(Dealer, BudgetFormulas) {
  const BitWidth w = BitWidth::w64();
  EXPECT_EQ(compare_bool_triples(w, CompareMode::kCarryLookahead), 187u);
  EXPECT_EQ(compare_bool_triples(w, CompareMode::kRippleCarry), 125u);
  const Budget b = inference_budget(3, 13, w, CompareMode::kCarryLookahead);
  EXPECT_EQ(b.bool_triples, 7u * 187u);
  EXPECT_EQ(b.arith_triples, 7u + 12u + 8u);
  EXPECT_EQ(b.ot_per_direction, 7u);
  EXPECT_EQ(b.ot_size, 13u);
}

TEST(Material, ConsumptionAndDepletion) {
  Budget b;
  b.arith_triples = 5;
  b.bool_triples = 3;
  b.ot_per_direction = 1;
  b.ot_size = 4;
  auto [m0, m1] = dealer_generate(b, w8, 1);
  EXPECT_EQ(m0.take_arith(3).size(), 3u);
  EXPECT_EQ(m0.arith_remaining(), 2u);
  EXPECT_THROW(m0.take_arith(3), DepletionError);
  EXPECT_EQ(m0.take_arith(2).t1, std::vector<std::uint64_t>(m0.arith().t1.begin() + 3,
                                                             m0.arith().t1.end()));
  EXPECT_THROW(m0.take_arith(1), DepletionError);
  EXPECT_EQ(m0.take_bool(3).size(), 3u);
  EXPECT_THROW(m0.take_bool(1), DepletionError);
  EXPECT_THROW(m0.take_ot_sender(5), UsageError);
  EXPECT_EQ(m0.take_ot_sender(4).pads.size(), 4u);
  EXPECT_THROW(m0.take_ot_sender(4), DepletionError);
  EXPECT_EQ(m0.take_ot_receiver(4).size, 4u);
  EXPECT_THROW(m0.take_ot_receiver(4), DepletionError);
  EXPECT_EQ(m0.arith_consumed(), 5u);
  EXPECT_EQ(m0.bool_consumed(), 3u);
  EXPECT_EQ(m0.ot_consumed(), 2u);
}

TEST(Material, FileRoundTrip) {
  Budget b;
  b.arith_triples = 17;
  b.bool_triples = 130;
  b.ot_per_direction = 3;
  b.ot_size = 5;
  auto [m0, m1] = dealer_generate(b, BitWidth::of(16), 21);
  const Bytes bytes = serialize_material(m1);
  ASSERT_GE(bytes.size(), 7u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 7), "SDTPRE1");
  PartyMaterial back = deserialize_material(bytes);
  EXPECT_EQ(back.party(), Party::kOne);
  EXPECT_EQ(back.width(), BitWidth::of(16));
  EXPECT_EQ(back.seed(), 21u);
  EXPECT_EQ(back.arith().t3, m1.arith().t3);
  EXPECT_EQ(back.boolean().t2, m1.boolean().t2);
  EXPECT_EQ(back.ot_sender()[2].pads, m1.ot_sender()[2].pads);
  EXPECT_EQ(back.ot_receiver()[1].chosen, m1.ot_receiver()[1].chosen);
  EXPECT_EQ(serialize_material(back), bytes);

  // Consumed items are not written.
  m1.take_arith(10);
  PartyMaterial rest = deserialize_material(serialize_material(m1));
  EXPECT_EQ(rest.arith_remaining(), 7u);
  EXPECT_EQ(rest.arith().t1[0], m1.arith().t1[10]);

  for (std::size_t cut : {std::size_t{0}, std::size_t{5}, bytes.size() / 2, bytes.size() - 1}) {
    EXPECT_THROW(deserialize_material(std::span(bytes).first(cut)), FormatError);
  }
  Bytes bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(deserialize_material(bad), FormatError);
  Bytes extra = bytes;
  extra.push_back(0);
  EXPECT_THROW(deserialize_material(extra), FormatError);
}

// ---- Beaver multiplication ----

TEST(Beaver, ArithmeticExamples) {
  Budget b;
  b.arith_triples = 3;
  auto [m0, m1] = dealer_generate(b, w8, 2);
  Prg prg(3);
  auto [x0, x1] = share_arith_vec(std::vector<std::uint64_t>{7, 0, 200}, w8, prg);
  auto [y0, y1] = share_arith_vec(std::vector<std::uint64_t>{9, 123, 3}, w8, prg);
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return s.party == Party::kZero ? beaver_mul_arith(s, x0, y0) : beaver_mul_arith(s, x1, y1);
  });
  const auto z = reconstruct_arith_vec(run.out0, run.out1);
  EXPECT_EQ(z[0], (r8(7) * r8(9)).value());
  EXPECT_EQ(z[0], 63u);
  EXPECT_EQ(z[1], 0u);
  EXPECT_EQ(z[2], (200u * 3u) & 255u);
  EXPECT_EQ(run.transcript.total_rounds(), 1u);
}

TEST(Beaver, ArithmeticRandom64) {
  const BitWidth w = BitWidth::w64();
  constexpr std::size_t n = 10000;
  Budget b;
  b.arith_triples = n;
  auto [m0, m1] = dealer_generate(b, w, 4);
  Prg prg(5);
  std::vector<std::uint64_t> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = prg.ring(w);
    ys[i] = prg.ring(w);
  }
  auto [x0, x1] = share_arith_vec(xs, w, prg);
  auto [y0, y1] = share_arith_vec(ys, w, prg);
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return s.party == Party::kZero ? beaver_mul_arith(s, x0, y0) : beaver_mul_arith(s, x1, y1);
  });
  const auto z = reconstruct_arith_vec(run.out0, run.out1);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(z[i], xs[i] * ys[i]);
  EXPECT_EQ(run.transcript.total_rounds(), 1u);
  EXPECT_EQ(run.transcript.phases[0].bytes_p0, 2 * n * 8);
}

// Every assignment of inputs, triple values and all share splits over Z_2.
TEST(Beaver, BooleanExhaustive) {
  constexpr std::size_t kCases = 1u << 9;
  PartyMaterial m0(Party::kZero, w8, 0), m1(Party::kOne, w8, 0);
  for (auto* m : {&m0, &m1}) m->boolean() = BoolTriples{BitVec(kCases), BitVec(kCases), BitVec(kCases)};
  BitVec a0(kCases), a1(kCases), b0(kCases), b1(kCases), want(kCases);
  for (std::size_t c = 0; c < kCases; ++c) {
    const unsigned alpha = c & 1, beta = (c >> 1) & 1, t1 = (c >> 2) & 1, t2 = (c >> 3) & 1;
    const unsigned ra = (c >> 4) & 1, rb = (c >> 5) & 1, r1 = (c >> 6) & 1, r2 = (c >> 7) & 1,
                   r3 = (c >> 8) & 1;
    a0.set(c, alpha ^ ra);
    a1.set(c, ra);
    b0.set(c, beta ^ rb);
    b1.set(c, rb);
    m0.boolean().t1.set(c, t1 ^ r1);
    m1.boolean().t1.set(c, r1);
    m0.boolean().t2.set(c, t2 ^ r2);
    m1.boolean().t2.set(c, r2);
    m0.boolean().t3.set(c, (t1 & t2) ^ r3);
    m1.boolean().t3.set(c, r3);
    want.set(c, alpha & beta);
  }
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return s.party == Party::kZero ? beaver_mul_bool(s, a0, b0) : beaver_mul_bool(s, a1, b1);
  });
  EXPECT_EQ(run.out0 ^ run.out1, want);
  EXPECT_EQ(run.transcript.total_rounds(), 1u);
}

TEST(Beaver, OneRoundForAnyBatchSize) {
  for (std::size_t k : {1u, 2u, 63u, 64u, 65u, 1000u}) {
    Budget b;
    b.arith_triples = k;
    b.bool_triples = k;
    auto [m0, m1] = dealer_generate(b, w8, k);
    ArithShares x0{Party::kZero, w8, std::vector<std::uint64_t>(k, 1)};
    ArithShares x1{Party::kOne, w8, std::vector<std::uint64_t>(k, 2)};
    auto arith = run_two_party(m0, m1, [&](Session& s) {
      return beaver_mul_arith(s, s.party == Party::kZero ? x0 : x1,
                              s.party == Party::kZero ? x0 : x1);
    });
    EXPECT_EQ(arith.transcript.total_rounds(), 1u);
    for (auto v : reconstruct_arith_vec(arith.out0, arith.out1)) ASSERT_EQ(v, 9u);
    const BitVec ones = [&] {
      BitVec v(k);
      for (std::size_t i = 0; i < k; ++i) v.set(i, 1);
      return v;
    }();
    auto boolean = run_two_party(m0, m1, [&](Session& s) {
      return beaver_mul_bool(s, ones, s.party == Party::kZero ? ones : BitVec(k));
    });
    EXPECT_EQ(boolean.transcript.total_rounds(), 1u);
    EXPECT_EQ(boolean.out0 ^ boolean.out1, BitVec(k));  // 0 * 1
  }
}

TEST(Beaver, ZeroTimesAnything) {
  Budget b;
  b.arith_triples = 50;
  auto [m0, m1] = dealer_generate(b, BitWidth::w64(), 8);
  Prg prg(8);
  std::vector<std::uint64_t> ys(50);
  for (auto& y : ys) y = prg.next_u64();
  auto [x0, x1] = share_arith_vec(std::vector<std::uint64_t>(50, 0), BitWidth::w64(), prg);
  auto [y0, y1] = share_arith_vec(ys, BitWidth::w64(), prg);
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return s.party == Party::kZero ? beaver_mul_arith(s, x0, y0) : beaver_mul_arith(s, x1, y1);
  });
  for (auto v : reconstruct_arith_vec(run.out0, run.out1)) EXPECT_EQ(v, 0u);
}

TEST(Beaver, EmptyBudgetDepletes) {
  auto [m0, m1] = dealer_generate(Budget{}, w8, 1);
  EXPECT_THROW(run_two_party(m0, m1,
                             [&](Session& s) {
                               ArithShares mine{s.party, w8, {1}};
                               return beaver_mul_arith(s, mine, mine);
                             }),
               DepletionError);
}

TEST(Beaver, LengthAndWidthMismatchRejected) {
  Budget b;
  b.arith_triples = 4;
  auto [m0, m1] = dealer_generate(b, w8, 1);
  auto [c0, c1] = make_memory_channel_pair();
  Session s(*c0, m0, Prg(1));
  ArithShares two{Party::kZero, w8, {1, 2}}, one{Party::kZero, w8, {1}};
  ArithShares wide{Party::kZero, BitWidth::of(16), {1}};
  EXPECT_THROW(beaver_mul_arith(s, two, one), UsageError);
  EXPECT_THROW(beaver_mul_arith(s, wide, wide), UsageError);
  EXPECT_THROW(beaver_mul_bool(s, BitVec(2), BitVec(3)), UsageError);
  EXPECT_EQ(m0.arith_consumed(), 0u);
}

}  // namespace
}  // namespace sdtree
