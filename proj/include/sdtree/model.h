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
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "sdtree/prg.h"
#include "sdtree/ring.h"
#include "sdtree/sharing.h"
#include "sdtree/wire.h"

namespace sdtree {

// Complete binary decision tree of depth d, stored in level order.
// Decision node j has children 2j+1 (left, taken when x[index[j]] >=
// threshold[j]) and 2j+2 (right, taken when x[index[j]] < threshold[j]).
// Leaf z, counted left to right, sits at heap position J + z.
struct DecisionTreeModel {
  BitWidth width = BitWidth::w64();
  unsigned depth = 1;
  std::uint32_t feature_dim = 1;
  std::vector<std::int64_t> thresholds;     // J
  std::vector<std::uint32_t> feature_index; // J
  std::vector<std::int64_t> leaf_values;    // Z

  std::size_t decision_count() const { return (std::size_t{1} << depth) - 1; }
  std::size_t leaf_count() const { return std::size_t{1} << depth; }

  // Throws UsageError unless sizes, indices and value ranges are consistent.
  void validate() const;

  friend bool operator==(const DecisionTreeModel&, const DecisionTreeModel&) = default;
};

struct FeatureVector {
  BitWidth width = BitWidth::w64();
  std::vector<std::int64_t> values;

  void validate() const;
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// A server's share of the provider's model: thresholds y, index vector and
// leaf values, each element-wise additively shared.
struct EncryptedModelShare {
  Party party = Party::kZero;
  BitWidth width = BitWidth::w64();
  unsigned depth = 1;
  std::uint32_t feature_dim = 1;
  std::vector<std::uint64_t> thresholds;
  std::vector<std::uint64_t> indices;
  std::vector<std::uint64_t> leaves;

  ArithShares threshold_shares() const { return {party, width, thresholds}; }
  ArithShares index_shares() const { return {party, width, indices}; }
  ArithShares leaf_shares() const { return {party, width, leaves}; }
};

struct EncryptedFeatureShare {
  Party party = Party::kZero;
  BitWidth width = BitWidth::w64();
  std::vector<std::uint64_t> values;

  ArithShares shares() const { return {party, width, values}; }
};

// Comparison bit at a decision node: 1 iff x < threshold (right branch).
inline unsigned node_bit(std::int64_t x, std::int64_t threshold) {
  return x < threshold ? 1u : 0u;
}

// The plaintext reference: walks from the root and returns the reached
// leaf's value.
std::int64_t plaintext_infer(const DecisionTreeModel& tree, const FeatureVector& x);
// Index z of the leaf plaintext_infer reaches.
std::size_t plaintext_leaf(const DecisionTreeModel& tree, const FeatureVector& x);

// Arbitrary (not necessarily complete) binary tree, for padding.
struct TreeNode {
  bool is_leaf = true;
  std::int64_t value = 0;        // leaf
  std::uint32_t feature = 0;     // decision
  std::int64_t threshold = 0;    // decision
  std::unique_ptr<TreeNode> left, right;

  static std::unique_ptr<TreeNode> leaf(std::int64_t value);
  static std::unique_ptr<TreeNode> decision(std::uint32_t feature, std::int64_t threshold,
                                            std::unique_ptr<TreeNode> left,
                                            std::unique_ptr<TreeNode> right);
  unsigned height() const;
};

// Recursive evaluation of an arbitrary tree, same branch convention.
std::int64_t evaluate_tree(const TreeNode& root, const FeatureVector& x);

// Pads to a complete tree of the given depth computing the same function.
// A leaf above the bottom level is replaced by a subtree of dummy decision
// nodes (threshold 0, feature 0) whose leaves all repeat the leaf's value.
DecisionTreeModel pad_to_complete(const TreeNode& root, unsigned depth,
                                  std::uint32_t feature_dim, BitWidth width);

std::pair<EncryptedModelShare, EncryptedModelShare> provider_encrypt(
    const DecisionTreeModel& tree, Prg& prg);
std::pair<EncryptedFeatureShare, EncryptedFeatureShare> client_encrypt(const FeatureVector& x,
                                                                       Prg& prg);
DecisionTreeModel reconstruct_model(const EncryptedModelShare& a, const EncryptedModelShare& b);
FeatureVector reconstruct_features(const EncryptedFeatureShare& a,
                                   const EncryptedFeatureShare& b);

// Random complete tree and feature vector with values uniform in the
// encodable signed range.
std::pair<DecisionTreeModel, FeatureVector> gen_synthetic(unsigned depth,
                                                          std::uint32_t feature_dim,
                                                          BitWidth width, Prg& prg);

// File formats (all little-endian; ring elements take l/8 bytes):
//   tree     "SDTREE1" u8 l, u8 d, u32 I_dim, y[J], index[J], u[Z]
//   features "SDVECT1" u8 l, u32 I_dim, x[I_dim]
// Share files use the same layout with a party byte after the header.
Bytes serialize_tree(const DecisionTreeModel& tree);
DecisionTreeModel deserialize_tree(std::span<const std::uint8_t> data);
Bytes serialize_features(const FeatureVector& x);
FeatureVector deserialize_features(std::span<const std::uint8_t> data);
Bytes serialize_model_share(const EncryptedModelShare& share);
EncryptedModelShare deserialize_model_share(std::span<const std::uint8_t> data);
Bytes serialize_feature_share(const EncryptedFeatureShare& share);
EncryptedFeatureShare deserialize_feature_share(std::span<const std::uint8_t> data);

// Size of a serialized model share: header + (2J + Z) ring elements.
std::size_t model_share_size(unsigned depth, BitWidth width);

}  // namespace sdtree
