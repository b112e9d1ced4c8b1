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

#include "sdtree/prg.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.h"

namespace sdtree {
namespace {

TEST(Prg, DeterministicPerSeedAndLabel) {
  Prg a(7, "x"), b(7, "x"), c(7, "y"), d(8, "x");
  std::vector<std::uint64_t> va, vb, vc, vd;
  for (int i = 0; i < 100; ++i) {
    va.push_back(a.next_u64());
    vb.push_back(b.next_u64());
    vc.push_back(c.next_u64());
    vd.push_back(d.next_u64());
  }
  EXPECT_EQ(va, vb);
  EXPECT_NE(va, vc);
  EXPECT_NE(va, vd);
}

TEST(Prg, StreamsOfOneKeyDiffer) {
  const PrgKey key = derive_key(3, "k");
  Prg s0(key, 0), s1(key, 1), again(key, 1);
  const std::uint64_t a = s0.next_u64(), b = s1.next_u64();
  EXPECT_NE(a, b);
  EXPECT_EQ(again.next_u64(), b);
}

TEST(Prg, ForkIsIndependentOfParentPosition) {
  Prg p(1, "root");
  Prg f1 = p.fork("child");
  p.next_u64();
  Prg f2 = p.fork("child");
  EXPECT_EQ(f1.next_u64(), f2.next_u64());
  EXPECT_NE(derive_key(p.key(), "a"), derive_key(p.key(), "b"));
}

TEST(Prg, FillMatchesSequentialDraws) {
  Prg a(9), b(9);
  std::vector<std::uint64_t> buf(77);
  a.fill(buf);
  for (auto v : buf) EXPECT_EQ(v, b.next_u64());
  EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Prg, UniformBelowStaysInRangeAndIsUniform) {
  Prg prg(2, "ub");
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 9ull, 57ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(prg.uniform_below(bound), bound);
  }
  EXPECT_THROW(prg.uniform_below(0), UsageError);
  std::vector<std::uint64_t> counts(9, 0);
  for (int i = 0; i < 90000; ++i) ++counts[prg.uniform_below(9)];
  EXPECT_LT(testing::chi_square_uniform(counts), testing::kChi2Crit001Df8);
}

TEST(Prg, UniformBetweenAndSignedInclusive) {
  Prg prg(4);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = prg.uniform_between(5, 8);
    ASSERT_GE(v, 5u);
    ASSERT_LE(v, 8u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_NO_THROW(prg.uniform_between(0, ~std::uint64_t{0}));
  EXPECT_THROW(prg.uniform_between(3, 2), UsageError);
  std::set<std::int64_t> signed_seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = prg.uniform_signed(-2, 1);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 1);
    signed_seen.insert(v);
  }
  EXPECT_EQ(signed_seen.size(), 4u);
}

TEST(Prg, BitsAreBalanced) {
  Prg prg(6, "bits");
  std::vector<std::uint64_t> counts(2, 0);
  for (int i = 0; i < 100000; ++i) ++counts[prg.next_bit()];
  EXPECT_LT(testing::chi_square_uniform(counts), testing::kChi2Crit001Df1);
}

}  // namespace
}  // namespace sdtree
