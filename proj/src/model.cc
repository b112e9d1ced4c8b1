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

#include "sdtree/model.h"

#include <algorithm>
#include <string>

#include "sdtree/errors.h"

namespace sdtree {

namespace {

constexpr std::string_view kTreeMagic = "SDTREE1";
constexpr std::string_view kVectorMagic = "SDVECT1";
constexpr unsigned kMaxDepth = 30;

void check_depth(unsigned depth) {
  if (depth < 1 || depth > kMaxDepth) {
    throw UsageError("tree depth " + std::to_string(depth) + " outside [1, " +
                     std::to_string(kMaxDepth) + "]");
  }
}

}  // namespace

void DecisionTreeModel::validate() const {
  check_depth(depth);
  if (feature_dim == 0) throw UsageError("feature dimension must be positive");
  if (thresholds.size() != decision_count() || feature_index.size() != decision_count()) {
    throw UsageError("tree of depth " + std::to_string(depth) + " needs " +
                     std::to_string(decision_count()) + " decision nodes");
  }
  if (leaf_values.size() != leaf_count()) {
    throw UsageError("tree of depth " + std::to_string(depth) + " needs " +
                     std::to_string(leaf_count()) + " leaves");
  }
  for (std::size_t j = 0; j < thresholds.size(); ++j) {
    if (feature_index[j] >= feature_dim) {
      throw UsageError("feature index " + std::to_string(feature_index[j]) + " at node " +
                       std::to_string(j) + " exceeds dimension " + std::to_string(feature_dim));
    }
    if (!in_signed_range(thresholds[j], width)) {
      throw UsageError("threshold at node " + std::to_string(j) + " out of range");
    }
  }
  for (std::int64_t u : leaf_values) {
    if (!in_signed_range(u, width)) throw UsageError("leaf value out of range");
  }
}

void FeatureVector::validate() const {
  if (values.empty()) throw UsageError("empty feature vector");
  for (std::int64_t v : values) {
    if (!in_signed_range(v, width)) throw UsageError("feature value out of range");
  }
}

std::size_t plaintext_leaf(const DecisionTreeModel& tree, const FeatureVector& x) {
  if (x.values.size() != tree.feature_dim) {
    throw UsageError("feature vector has " + std::to_string(x.values.size()) +
                     " entries, tree expects " + std::to_string(tree.feature_dim));
  }
  const std::size_t decisions = tree.decision_count();
  std::size_t j = 0;
  while (j < decisions) {
    const unsigned v = node_bit(x.values[tree.feature_index[j]], tree.thresholds[j]);
    j = 2 * j + 1 + v;
  }
  return j - decisions;
}

std::int64_t plaintext_infer(const DecisionTreeModel& tree, const FeatureVector& x) {
  return tree.leaf_values[plaintext_leaf(tree, x)];
}

std::unique_ptr<TreeNode> TreeNode::leaf(std::int64_t value) {
  auto n = std::make_unique<TreeNode>();
  n->value = value;
  return n;
}

std::unique_ptr<TreeNode> TreeNode::decision(std::uint32_t feature, std::int64_t threshold,
                                             std::unique_ptr<TreeNode> left,
                                             std::unique_ptr<TreeNode> right) {
  if (!left || !right) throw UsageError("decision node needs two children");
  auto n = std::make_unique<TreeNode>();
  n->is_leaf = false;
  n->feature = feature;
  n->threshold = threshold;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

unsigned TreeNode::height() const {
  if (is_leaf) return 0;
  return 1 + std::max(left->height(), right->height());
}

std::int64_t evaluate_tree(const TreeNode& root, const FeatureVector& x) {
  if (root.is_leaf) return root.value;
  const bool right = node_bit(x.values.at(root.feature), root.threshold) == 1;
  return evaluate_tree(right ? *root.right : *root.left, x);
}

namespace {

void place(const TreeNode& node, std::size_t pos, unsigned level, DecisionTreeModel& out) {
  const std::size_t decisions = out.decision_count();
  if (level == out.depth) {
    if (!node.is_leaf) {
      throw UsageError("tree is deeper than the target depth " + std::to_string(out.depth));
    }
    out.leaf_values[pos - decisions] = node.value;
    return;
  }
  if (node.is_leaf) {
    // Dummy decision: both children repeat this leaf, so the comparison
    // outcome cannot change the result.
    out.thresholds[pos] = 0;
    out.feature_index[pos] = 0;
    place(node, 2 * pos + 1, level + 1, out);
    place(node, 2 * pos + 2, level + 1, out);
    return;
  }
  out.thresholds[pos] = node.threshold;
  out.feature_index[pos] = node.feature;
  place(*node.left, 2 * pos + 1, level + 1, out);
  place(*node.right, 2 * pos + 2, level + 1, out);
}

}  // namespace

DecisionTreeModel pad_to_complete(const TreeNode& root, unsigned depth,
                                  std::uint32_t feature_dim, BitWidth width) {
  check_depth(depth);
  DecisionTreeModel out;
  out.width = width;
  out.depth = depth;
  out.feature_dim = feature_dim;
  out.thresholds.assign(out.decision_count(), 0);
  out.feature_index.assign(out.decision_count(), 0);
  out.leaf_values.assign(out.leaf_count(), 0);
  place(root, 0, 0, out);
  out.validate();
  return out;
}

namespace {

std::vector<std::uint64_t> encode_all(std::span<const std::int64_t> values, BitWidth w) {
  std::vector<std::uint64_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = encode_signed(values[i], w).value();
  return out;
}

std::vector<std::int64_t> decode_all(std::span<const std::uint64_t> values, BitWidth w) {
  std::vector<std::int64_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = decode_signed_raw(values[i], w);
  return out;
}

}  // namespace

std::pair<EncryptedModelShare, EncryptedModelShare> provider_encrypt(
    const DecisionTreeModel& tree, Prg& prg) {
  tree.validate();
  const BitWidth w = tree.width;
  std::vector<std::uint64_t> idx(tree.feature_index.begin(), tree.feature_index.end());
  auto [y0, y1] = share_arith_vec(encode_all(tree.thresholds, w), w, prg);
  auto [i0, i1] = share_arith_vec(idx, w, prg);
  auto [u0, u1] = share_arith_vec(encode_all(tree.leaf_values, w), w, prg);
  EncryptedModelShare s0{Party::kZero, w, tree.depth, tree.feature_dim,
                         std::move(y0.values), std::move(i0.values), std::move(u0.values)};
  EncryptedModelShare s1{Party::kOne, w, tree.depth, tree.feature_dim,
                         std::move(y1.values), std::move(i1.values), std::move(u1.values)};
  return {std::move(s0), std::move(s1)};
}

std::pair<EncryptedFeatureShare, EncryptedFeatureShare> client_encrypt(const FeatureVector& x,
                                                                       Prg& prg) {
  x.validate();
  auto [x0, x1] = share_arith_vec(encode_all(x.values, x.width), x.width, prg);
  return {EncryptedFeatureShare{Party::kZero, x.width, std::move(x0.values)},
          EncryptedFeatureShare{Party::kOne, x.width, std::move(x1.values)}};
}

DecisionTreeModel reconstruct_model(const EncryptedModelShare& a,
                                    const EncryptedModelShare& b) {
  if (a.party == b.party) throw UsageError("reconstruction needs shares from both parties");
  if (!(a.width == b.width) || a.depth != b.depth || a.feature_dim != b.feature_dim) {
    throw UsageError("model shares have different parameters");
  }
  const BitWidth w = a.width;
  DecisionTreeModel t;
  t.width = w;
  t.depth = a.depth;
  t.feature_dim = a.feature_dim;
  const auto y = reconstruct_arith_vec(a.threshold_shares(), b.threshold_shares());
  const auto idx = reconstruct_arith_vec(a.index_shares(), b.index_shares());
  const auto u = reconstruct_arith_vec(a.leaf_shares(), b.leaf_shares());
  t.thresholds = decode_all(y, w);
  t.feature_index.assign(idx.begin(), idx.end());
  t.leaf_values = decode_all(u, w);
  return t;
}

FeatureVector reconstruct_features(const EncryptedFeatureShare& a,
                                   const EncryptedFeatureShare& b) {
  const auto x = reconstruct_arith_vec(a.shares(), b.shares());
  return FeatureVector{a.width, decode_all(x, a.width)};
}

std::pair<DecisionTreeModel, FeatureVector> gen_synthetic(unsigned depth,
                                                          std::uint32_t feature_dim,
                                                          BitWidth width, Prg& prg) {
  check_depth(depth);
  if (feature_dim == 0) throw UsageError("feature dimension must be positive");
  DecisionTreeModel t;
  t.width = width;
  t.depth = depth;
  t.feature_dim = feature_dim;
  const std::int64_t lo = width.signed_min();
  const std::int64_t hi = width.signed_max();
  t.thresholds.resize(t.decision_count());
  t.feature_index.resize(t.decision_count());
  for (std::size_t j = 0; j < t.decision_count(); ++j) {
    t.thresholds[j] = prg.uniform_signed(lo, hi);
    t.feature_index[j] = static_cast<std::uint32_t>(prg.uniform_below(feature_dim));
  }
  t.leaf_values.resize(t.leaf_count());
  for (auto& u : t.leaf_values) u = prg.uniform_signed(lo, hi);
  FeatureVector x{width, std::vector<std::int64_t>(feature_dim)};
  for (auto& v : x.values) v = prg.uniform_signed(lo, hi);
  return {std::move(t), std::move(x)};
}

namespace {

void put_tree_header(ByteWriter& out, BitWidth w, unsigned depth, std::uint32_t dim) {
  out.put_magic(kTreeMagic);
  out.put_u8(static_cast<std::uint8_t>(w.bits()));
  out.put_u8(static_cast<std::uint8_t>(depth));
  out.put_u32(dim);
}

struct TreeHeader {
  BitWidth width;
  unsigned depth;
  std::uint32_t feature_dim;
};

TreeHeader get_tree_header(ByteReader& in) {
  in.expect_magic(kTreeMagic);
  const std::uint8_t bits = in.get_u8();
  const std::uint8_t depth = in.get_u8();
  const std::uint32_t dim = in.get_u32();
  if (bits != 8 && bits != 16 && bits != 32 && bits != 64) {
    throw FormatError("unsupported bit width in tree header");
  }
  if (depth < 1 || depth > kMaxDepth) throw FormatError("bad depth in tree header");
  if (dim == 0) throw FormatError("zero feature dimension in tree header");
  return {BitWidth::of(bits), depth, dim};
}

void put_vector_header(ByteWriter& out, BitWidth w, std::uint32_t dim) {
  out.put_magic(kVectorMagic);
  out.put_u8(static_cast<std::uint8_t>(w.bits()));
  out.put_u32(dim);
}

std::pair<BitWidth, std::uint32_t> get_vector_header(ByteReader& in) {
  in.expect_magic(kVectorMagic);
  const std::uint8_t bits = in.get_u8();
  const std::uint32_t dim = in.get_u32();
  if (bits != 8 && bits != 16 && bits != 32 && bits != 64) {
    throw FormatError("unsupported bit width in vector header");
  }
  if (dim == 0) throw FormatError("zero dimension in vector header");
  return {BitWidth::of(bits), dim};
}

Party get_party(ByteReader& in) {
  const std::uint8_t p = in.get_u8();
  if (p > 1) throw FormatError("bad party byte");
  return party_from_index(p);
}

std::size_t expected_payload(std::size_t elements, BitWidth w, const ByteReader& in) {
  const std::size_t bytes = elements * w.bytes();
  if (in.remaining() != bytes) {
    throw FormatError("payload is " + std::to_string(in.remaining()) + " bytes, expected " +
                      std::to_string(bytes));
  }
  return elements;
}

}  // namespace

Bytes serialize_tree(const DecisionTreeModel& tree) {
  tree.validate();
  ByteWriter out;
  put_tree_header(out, tree.width, tree.depth, tree.feature_dim);
  out.put_elements(encode_all(tree.thresholds, tree.width), tree.width);
  for (std::uint32_t i : tree.feature_index) out.put_element(i, tree.width);
  out.put_elements(encode_all(tree.leaf_values, tree.width), tree.width);
  return out.take();
}

DecisionTreeModel deserialize_tree(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  const TreeHeader h = get_tree_header(in);
  DecisionTreeModel t;
  t.width = h.width;
  t.depth = h.depth;
  t.feature_dim = h.feature_dim;
  const std::size_t J = t.decision_count();
  expected_payload(2 * J + t.leaf_count(), h.width, in);
  t.thresholds = decode_all(in.get_elements(J, h.width), h.width);
  const auto idx = in.get_elements(J, h.width);
  t.feature_index.resize(J);
  for (std::size_t j = 0; j < J; ++j) {
    if (idx[j] >= h.feature_dim) throw FormatError("feature index out of range in tree file");
    t.feature_index[j] = static_cast<std::uint32_t>(idx[j]);
  }
  t.leaf_values = decode_all(in.get_elements(t.leaf_count(), h.width), h.width);
  try {
    t.validate();
  } catch (const UsageError& e) {
    throw FormatError(std::string("invalid tree file: ") + e.what());
  }
  return t;
}

Bytes serialize_features(const FeatureVector& x) {
  x.validate();
  ByteWriter out;
  put_vector_header(out, x.width, static_cast<std::uint32_t>(x.values.size()));
  out.put_elements(encode_all(x.values, x.width), x.width);
  return out.take();
}

FeatureVector deserialize_features(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  const auto [w, dim] = get_vector_header(in);
  expected_payload(dim, w, in);
  FeatureVector x{w, decode_all(in.get_elements(dim, w), w)};
  try {
    x.validate();
  } catch (const UsageError& e) {
    throw FormatError(std::string("invalid feature file: ") + e.what());
  }
  return x;
}

Bytes serialize_model_share(const EncryptedModelShare& s) {
  const std::size_t J = (std::size_t{1} << s.depth) - 1;
  if (s.thresholds.size() != J || s.indices.size() != J || s.leaves.size() != J + 1) {
    throw UsageError("model share sizes do not match its depth");
  }
  ByteWriter out;
  put_tree_header(out, s.width, s.depth, s.feature_dim);
  out.put_u8(static_cast<std::uint8_t>(index_of(s.party)));
  out.put_elements(s.thresholds, s.width);
  out.put_elements(s.indices, s.width);
  out.put_elements(s.leaves, s.width);
  return out.take();
}

EncryptedModelShare deserialize_model_share(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  const TreeHeader h = get_tree_header(in);
  EncryptedModelShare s;
  s.party = get_party(in);
  s.width = h.width;
  s.depth = h.depth;
  s.feature_dim = h.feature_dim;
  const std::size_t J = (std::size_t{1} << h.depth) - 1;
  expected_payload(3 * J + 1, h.width, in);
  s.thresholds = in.get_elements(J, h.width);
  s.indices = in.get_elements(J, h.width);
  s.leaves = in.get_elements(J + 1, h.width);
  return s;
}

Bytes serialize_feature_share(const EncryptedFeatureShare& s) {
  ByteWriter out;
  put_vector_header(out, s.width, static_cast<std::uint32_t>(s.values.size()));
  out.put_u8(static_cast<std::uint8_t>(index_of(s.party)));
  out.put_elements(s.values, s.width);
  return out.take();
}

EncryptedFeatureShare deserialize_feature_share(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  const auto [w, dim] = get_vector_header(in);
  EncryptedFeatureShare s;
  s.party = get_party(in);
  s.width = w;
  expected_payload(dim, w, in);
  s.values = in.get_elements(dim, w);
  return s;
}

std::size_t model_share_size(unsigned depth, BitWidth width) {
  const std::size_t J = (std::size_t{1} << depth) - 1;
  return kTreeMagic.size() + 1 + 1 + 4 + 1 + (3 * J + 1) * width.bytes();
}

}  // namespace sdtree
