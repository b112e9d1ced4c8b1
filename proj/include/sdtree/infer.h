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

#include <chrono>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sdtree/compare.h"
#include "sdtree/model.h"
#include "sdtree/preprocessing.h"
#include "sdtree/select.h"
#include "sdtree/session.h"
#include "sdtree/transport.h"

namespace sdtree {

namespace phase {
inline constexpr std::string_view kSelection = "selection";
inline constexpr std::string_view kComparison = "comparison";
inline constexpr std::string_view kConversion = "conversion";
inline constexpr std::string_view kPathProducts = "path_products";
inline constexpr std::string_view kAggregation = "aggregation";
}  // namespace phase

// Z_2 -> Z_{2^l}: with <v> = (t1, t2), [v] = [t1] + [t2] - 2[t1][t2].
// One arithmetic triple per bit, one round.
ArithShares bool_to_arith(Session& s, const BitVec& v);

// Outgoing edge values of each decision node: left = 1 - v, right = v.
struct EdgeShares {
  ArithShares left, right;
};

EdgeShares edge_shares(const ArithShares& v);

// Per-leaf products of the edge values along the root-to-leaf path, in leaf
// order. Computed level by level so every node below depth 1 costs one
// multiplication: d - 1 rounds, 2^(d+1) - 4 triples.
ArithShares path_products(Session& s, const EdgeShares& edges, unsigned depth);

// [u*] = sum_z [g_z]·[u_z]; one round.
ArithShare inference_result(Session& s, const ArithShares& leaf_terms,
                            const ArithShares& leaf_values);

struct InferenceOptions {
  CompareOptions compare;
  SelectOptions select;
};

// The online protocol of one server. Phases are labelled in the channel's
// transcript; errors are rethrown with the phase name attached.
ArithShare run_party(Session& s, const EncryptedModelShare& model,
                     const EncryptedFeatureShare& features,
                     const InferenceOptions& options = {},
                     std::vector<std::uint64_t>* leaf_terms = nullptr);

struct RunConfig {
  InferenceOptions options;
  LinkModel link;
  std::chrono::milliseconds timeout{60000};
  bool log_messages = false;
  bool keep_leaf_terms = false;  // fills InferenceRun::leaf_terms0/1
  std::uint64_t seed = 1;  // servers' local randomness
};

struct InferenceRun {
  ArithShare result0{Party::kZero, RingElement(BitWidth::w64(), 0)};
  ArithShare result1{Party::kOne, RingElement(BitWidth::w64(), 0)};
  Transcript transcript0;
  Transcript transcript1;
  RunTranscript transcript;
  double wall_ms = 0.0;
  std::size_t arith_consumed = 0;
  std::size_t bool_consumed = 0;
  std::size_t ot_consumed = 0;
  std::vector<std::uint64_t> leaf_terms0;  // shares of g, if requested
  std::vector<std::uint64_t> leaf_terms1;

  RingElement reconstruct() const { return reconstruct_arith(result0, result1); }
};

// Runs both servers on separate threads over an in-memory channel.
// Parameters are validated before any message is sent.
InferenceRun run_inference(const EncryptedModelShare& model0, const EncryptedModelShare& model1,
                           const EncryptedFeatureShare& features0,
                           const EncryptedFeatureShare& features1, PartyMaterial& material0,
                           PartyMaterial& material1, const RunConfig& config = {});

// Both servers' sessions over caller-provided channels, one thread each.
InferenceRun run_inference_on(Channel& channel0, Channel& channel1,
                              const EncryptedModelShare& model0,
                              const EncryptedModelShare& model1,
                              const EncryptedFeatureShare& features0,
                              const EncryptedFeatureShare& features1, PartyMaterial& material0,
                              PartyMaterial& material1, const RunConfig& config);

// End to end: dealer, provider and client encryption, upload, both servers,
// download and reconstruction, checked against plaintext_infer.
struct OutsourcedRun {
  std::int64_t result = 0;
  std::int64_t expected = 0;
  bool verified = false;
  Budget budget;
  LinkTraffic provider;     // provider -> both servers
  LinkTraffic client_up;    // client -> both servers
  LinkTraffic client_down;  // both servers -> client
  InferenceRun run;
};

OutsourcedRun run_outsourced(const DecisionTreeModel& tree, const FeatureVector& x,
                             const RunConfig& config, std::uint64_t seed);

// Result file: "SDTRES1", u8 l, [u*]_0, [u*]_1.
Bytes serialize_result(const ArithShare& s0, const ArithShare& s1);
std::pair<ArithShare, ArithShare> deserialize_result(std::span<const std::uint8_t> data);

}  // namespace sdtree
