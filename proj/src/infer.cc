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

#include "sdtree/infer.h"

#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "sdtree/beaver.h"
#include "sdtree/errors.h"

namespace sdtree {

ArithShares bool_to_arith(Session& s, const BitVec& v) {
  const BitWidth w = s.material.width();
  const std::size_t n = v.size();
  // Party 0 holds t1 (its bit) with the peer share of t1 being 0, and
  // symmetrically for party 1 and t2.
  ArithShares own{s.party, w, std::vector<std::uint64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) own.values[i] = v.get(i);
  const ArithShares zero{s.party, w, std::vector<std::uint64_t>(n, 0)};
  const ArithShares prod = s.party == Party::kZero ? beaver_mul_arith(s, own, zero)
                                                   : beaver_mul_arith(s, zero, own);
  ArithShares out{s.party, w, std::vector<std::uint64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) out.values[i] = wrap(own.values[i] - 2 * prod.values[i], w);
  return out;
}

EdgeShares edge_shares(const ArithShares& v) {
  // left = 1 - v: both parties negate, party 0 adds the constant.
  ArithShares left = add_const(scale_local(v, v.width.mask()), 1);
  return {std::move(left), v};
}

ArithShares path_products(Session& s, const EdgeShares& edges, unsigned depth) {
  const std::size_t decisions = (std::size_t{1} << depth) - 1;
  if (edges.left.size() != decisions || edges.right.size() != decisions) {
    throw UsageError("edge shares do not match a tree of depth " + std::to_string(depth));
  }
  const BitWidth w = edges.left.width;
  // partial[n] for heap positions 1 .. 2J; position 0 (the root) is unused.
  std::vector<std::uint64_t> partial(2 * decisions + 1, 0);
  auto edge = [&](std::size_t node) {
    const std::size_t parent = (node - 1) / 2;
    return (node & 1) ? edges.left.values[parent] : edges.right.values[parent];
  };
  partial[1] = edge(1);
  partial[2] = edge(2);
  for (unsigned level = 2; level <= depth; ++level) {
    const std::size_t first = (std::size_t{1} << level) - 1;
    const std::size_t count = std::size_t{1} << level;
    ArithShares a{s.party, w, std::vector<std::uint64_t>(count)};
    ArithShares b{s.party, w, std::vector<std::uint64_t>(count)};
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t node = first + k;
      a.values[k] = partial[(node - 1) / 2];
      b.values[k] = edge(node);
    }
    const ArithShares prod = beaver_mul_arith(s, a, b);
    std::copy(prod.values.begin(), prod.values.end(),
              partial.begin() + static_cast<std::ptrdiff_t>(first));
  }
  return {s.party, w,
          std::vector<std::uint64_t>(partial.begin() + static_cast<std::ptrdiff_t>(decisions),
                                     partial.end())};
}

ArithShare inference_result(Session& s, const ArithShares& leaf_terms,
                            const ArithShares& leaf_values) {
  if (leaf_terms.size() != leaf_values.size()) {
    throw UsageError("leaf term and leaf value counts differ");
  }
  const ArithShares prod = beaver_mul_arith(s, leaf_terms, leaf_values);
  std::uint64_t sum = 0;
  for (std::uint64_t v : prod.values) sum += v;
  return {s.party, RingElement(leaf_terms.width, sum)};
}

namespace {

template <typename F>
auto in_phase(Session& s, std::string_view label, F&& body) {
  s.channel.begin_phase(label);
  try {
    return body();
  } catch (const Error& e) {
    rethrow_with_context(e, std::string(label));
  }
}

}  // namespace

ArithShare run_party(Session& s, const EncryptedModelShare& model,
                     const EncryptedFeatureShare& features, const InferenceOptions& options,
                     std::vector<std::uint64_t>* leaf_terms) {
  const ArithShares selected = in_phase(s, phase::kSelection, [&] {
    return oblivious_select(s, features.shares(), model.index_shares(), options.select);
  });
  const BitVec bits = in_phase(s, phase::kComparison, [&] {
    return secure_compare(s, selected, model.threshold_shares(), options.compare);
  });
  const ArithShares v = in_phase(s, phase::kConversion, [&] { return bool_to_arith(s, bits); });
  const ArithShares terms = in_phase(s, phase::kPathProducts, [&] {
    return path_products(s, edge_shares(v), model.depth);
  });
  if (leaf_terms) *leaf_terms = terms.values;
  const ArithShare result = in_phase(s, phase::kAggregation, [&] {
    return inference_result(s, terms, model.leaf_shares());
  });
  s.channel.end_phase();
  return result;
}

namespace {

void validate_inputs(const EncryptedModelShare& m0, const EncryptedModelShare& m1,
                     const EncryptedFeatureShare& f0, const EncryptedFeatureShare& f1,
                     const PartyMaterial& p0, const PartyMaterial& p1) {
  if (m0.party != Party::kZero || f0.party != Party::kZero || p0.party() != Party::kZero ||
      m1.party != Party::kOne || f1.party != Party::kOne || p1.party() != Party::kOne) {
    throw UsageError("inputs assigned to the wrong server");
  }
  const BitWidth w = m0.width;
  for (BitWidth other : {m1.width, f0.width, f1.width, p0.width(), p1.width()}) {
    if (!(other == w)) throw UsageError("bit width differs between inputs");
  }
  if (m0.depth != m1.depth || m0.feature_dim != m1.feature_dim) {
    throw UsageError("model shares disagree on depth or feature dimension");
  }
  if (f0.values.size() != m0.feature_dim || f1.values.size() != m0.feature_dim) {
    throw UsageError("feature vector length does not match the model's dimension");
  }
  const std::size_t J = (std::size_t{1} << m0.depth) - 1;
  for (const auto* m : {&m0, &m1}) {
    if (m->thresholds.size() != J || m->indices.size() != J || m->leaves.size() != J + 1) {
      throw UsageError("model share sizes do not match its depth");
    }
  }
}

}  // namespace

InferenceRun run_inference_on(Channel& channel0, Channel& channel1,
                              const EncryptedModelShare& model0,
                              const EncryptedModelShare& model1,
                              const EncryptedFeatureShare& features0,
                              const EncryptedFeatureShare& features1, PartyMaterial& material0,
                              PartyMaterial& material1, const RunConfig& config) {
  validate_inputs(model0, model1, features0, features1, material0, material1);
  Channel* channels[2] = {&channel0, &channel1};
  for (Channel* c : channels) {
    c->set_timeout(config.timeout);
    c->transcript().set_logging(config.log_messages);
  }

  std::optional<ArithShare> results[2];
  std::vector<std::uint64_t> terms[2];
  std::mutex error_mu;
  std::exception_ptr first_error;
  auto party_main = [&](unsigned m) {
    try {
      Session s(*channels[m], m == 0 ? material0 : material1,
                Prg(config.seed, m == 0 ? "sdtree/server0" : "sdtree/server1"));
      results[m] = run_party(s, m == 0 ? model0 : model1, m == 0 ? features0 : features1,
                             config.options, config.keep_leaf_terms ? &terms[m] : nullptr);
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
      // Unblock the peer.
      channels[m]->close();
    }
  };

  const auto start = std::chrono::steady_clock::now();
  std::thread t0(party_main, 0);
  std::thread t1(party_main, 1);
  t0.join();
  t1.join();
  const auto stop = std::chrono::steady_clock::now();
  if (first_error) std::rethrow_exception(first_error);

  InferenceRun run;
  run.result0 = *results[0];
  run.result1 = *results[1];
  run.transcript0 = channel0.transcript();
  run.transcript1 = channel1.transcript();
  run.transcript = merge_transcripts(channel0.transcript(), channel1.transcript());
  run.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  run.arith_consumed = material0.arith_consumed();
  run.bool_consumed = material0.bool_consumed();
  run.ot_consumed = material0.ot_consumed();  // both directions
  run.leaf_terms0 = std::move(terms[0]);
  run.leaf_terms1 = std::move(terms[1]);
  return run;
}

InferenceRun run_inference(const EncryptedModelShare& model0, const EncryptedModelShare& model1,
                           const EncryptedFeatureShare& features0,
                           const EncryptedFeatureShare& features1, PartyMaterial& material0,
                           PartyMaterial& material1, const RunConfig& config) {
  validate_inputs(model0, model1, features0, features1, material0, material1);
  auto [c0, c1] = make_memory_channel_pair(config.link);
  return run_inference_on(*c0, *c1, model0, model1, features0, features1, material0, material1,
                          config);
}

namespace {

// A one-way link from the provider or client; records what crosses it.
Bytes deliver(LinkTraffic& link, Bytes payload, std::size_t elements) {
  link.bytes += payload.size();
  link.elements += elements;
  ++link.messages;
  return payload;
}

}  // namespace

OutsourcedRun run_outsourced(const DecisionTreeModel& tree, const FeatureVector& x,
                             const RunConfig& config, std::uint64_t seed) {
  tree.validate();
  x.validate();
  if (x.values.size() != tree.feature_dim || !(x.width == tree.width)) {
    throw UsageError("feature vector does not match the tree's parameters");
  }
  const BitWidth w = tree.width;
  OutsourcedRun out;
  out.budget = inference_budget(tree.depth, tree.feature_dim, w, config.options.compare.mode);
  auto [mat0, mat1] = dealer_generate(out.budget, w, seed);

  Prg provider(seed, "sdtree/provider");
  auto [ms0, ms1] = provider_encrypt(tree, provider);
  const std::size_t model_elements = 3 * tree.decision_count() + 1;
  const EncryptedModelShare model0 = deserialize_model_share(
      deliver(out.provider, serialize_model_share(ms0), model_elements));
  const EncryptedModelShare model1 = deserialize_model_share(
      deliver(out.provider, serialize_model_share(ms1), model_elements));

  Prg client(seed, "sdtree/client");
  auto [fs0, fs1] = client_encrypt(x, client);
  auto upload = [&](const EncryptedFeatureShare& share) {
    ByteWriter payload;
    payload.put_elements(share.values, w);
    const Bytes wire = deliver(out.client_up, payload.take(), share.values.size());
    ByteReader in(wire);
    EncryptedFeatureShare received{share.party, w, in.get_elements(share.values.size(), w)};
    in.expect_end();
    return received;
  };
  const EncryptedFeatureShare features0 = upload(fs0);
  const EncryptedFeatureShare features1 = upload(fs1);

  RunConfig cfg = config;
  cfg.seed = seed;
  out.run = run_inference(model0, model1, features0, features1, mat0, mat1, cfg);

  auto download = [&](const ArithShare& share) {
    ByteWriter payload;
    payload.put_element(share.value.value(), w);
    const Bytes wire = deliver(out.client_down, payload.take(), 1);
    ByteReader in(wire);
    return ArithShare{share.party, RingElement(w, in.get_element(w))};
  };
  const ArithShare r0 = download(out.run.result0);
  const ArithShare r1 = download(out.run.result1);
  out.result = decode_signed(reconstruct_arith(r0, r1));
  out.expected = plaintext_infer(tree, x);
  out.verified = out.result == out.expected;
  return out;
}

Bytes serialize_result(const ArithShare& s0, const ArithShare& s1) {
  if (!(s0.value.width() == s1.value.width())) throw UsageError("result share width mismatch");
  if (s0.party != Party::kZero || s1.party != Party::kOne) {
    throw UsageError("result shares out of order");
  }
  const BitWidth w = s0.value.width();
  ByteWriter out;
  out.put_magic("SDTRES1");
  out.put_u8(static_cast<std::uint8_t>(w.bits()));
  out.put_element(s0.value.value(), w);
  out.put_element(s1.value.value(), w);
  return out.take();
}

std::pair<ArithShare, ArithShare> deserialize_result(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  in.expect_magic("SDTRES1");
  const std::uint8_t bits = in.get_u8();
  if (bits != 8 && bits != 16 && bits != 32 && bits != 64) {
    throw FormatError("unsupported bit width in result file");
  }
  const BitWidth w = BitWidth::of(bits);
  const std::uint64_t a = in.get_element(w);
  const std::uint64_t b = in.get_element(w);
  in.expect_end();
  return {ArithShare{Party::kZero, RingElement(w, a)}, ArithShare{Party::kOne, RingElement(w, b)}};
}

}  // namespace sdtree
