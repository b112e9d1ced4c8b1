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

#include "sdtree/cli.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sdtree/errors.h"
#include "sdtree/infer.h"
#include "sdtree/model.h"
#include "sdtree/tcp_channel.h"
#include "sdtree/two_party.h"

namespace sdtree {
namespace {

const std::map<std::string, CompareMode> kCompareModes = {
    {"cla", CompareMode::kCarryLookahead}, {"ripple", CompareMode::kRippleCarry}};

const char* mode_name(CompareMode m) {
  return m == CompareMode::kCarryLookahead ? "cla" : "ripple";
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  unsigned depth = 3;
  std::uint32_t features = 13;
  unsigned bitlen = 64;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const BitWidth w = BitWidth::of(a.bitlen);
  if (a.depth < 1 || a.depth > 20) throw UsageError("--depth must be in [1, 20]");
  if (a.features < 1) throw UsageError("--features must be at least 1");
  Prg prg(a.seed, "sdtree/gen");
  auto [tree, x] = gen_synthetic(a.depth, a.features, w, prg);
  const Bytes tree_bytes = serialize_tree(tree);
  const Bytes vec_bytes = serialize_features(x);
  const std::string tree_path = a.out + ".tree";
  const std::string vec_path = a.out + ".vec";
  write_file(tree_path, tree_bytes);
  write_file(vec_path, vec_bytes);
  out << "J=" << tree.decision_count() << " Z=" << tree.decision_count() + 1 << " l=" << a.bitlen
      << " I_dim=" << a.features << "\n"
      << "tree: " << tree_path << " (" << tree_bytes.size() << " bytes)\n"
      << "features: " << vec_path << " (" << vec_bytes.size() << " bytes)\n"
      << "provider share per server: " << model_share_size(a.depth, w) << " bytes\n"
      << "plaintext result: " << plaintext_infer(tree, x) << "\n";
  return 0;
}

// ---- run ------------------------------------------------------------------

struct RunArgs {
  std::string tree;
  std::string vector;
  std::optional<unsigned> bitlen;
  double latency_ms = 75.0;
  double bandwidth_mbps = 0.0;
  bool exclude_compute = false;
  std::string transport = "mem";
  int party = -1;
  std::string host = "127.0.0.1";
  std::uint16_t port = 7000;
  std::string compare = "cla";
  std::uint64_t seed = 1;
  unsigned timeout_ms = 60000;
  std::string transcript_csv;
  std::string result_out;
};

void print_phases(std::ostream& out, const RunTranscript& t) {
  out << std::left << std::setw(16) << "phase" << std::right << std::setw(8) << "rounds"
      << std::setw(14) << "bytes_p0" << std::setw(14) << "bytes_p1" << std::setw(16)
      << "sim_elapsed_ms" << "\n";
  for (const auto& p : t.phases) {
    out << std::left << std::setw(16) << p.label << std::right << std::setw(8) << p.rounds
        << std::setw(14) << p.bytes_p0 << std::setw(14) << p.bytes_p1 << std::setw(16)
        << fixed(p.sim_elapsed_ms) << "\n";
  }
  std::uint64_t b0 = 0, b1 = 0;
  for (const auto& p : t.phases) {
    b0 += p.bytes_p0;
    b1 += p.bytes_p1;
  }
  out << std::left << std::setw(16) << "total" << std::right << std::setw(8) << t.total_rounds()
      << std::setw(14) << b0 << std::setw(14) << b1 << std::setw(16)
      << fixed(t.total_elapsed_ms()) << "\n";
}

RunConfig run_config(const RunArgs& a) {
  RunConfig cfg;
  cfg.options.compare.mode = kCompareModes.at(a.compare);
  cfg.link = {a.latency_ms, a.bandwidth_mbps, !a.exclude_compute};
  cfg.timeout = std::chrono::milliseconds(a.timeout_ms);
  cfg.seed = a.seed;
  return cfg;
}

std::pair<DecisionTreeModel, FeatureVector> load_instance(const RunArgs& a) {
  DecisionTreeModel tree = deserialize_tree(read_file(a.tree));
  FeatureVector x = deserialize_features(read_file(a.vector));
  if (a.bitlen && *a.bitlen != tree.width.bits()) {
    throw UsageError("--bitlen does not match the tree file's bit width");
  }
  if (!(x.width == tree.width)) throw UsageError("tree and feature files use different bit widths");
  if (x.values.size() != tree.feature_dim) {
    throw UsageError("feature file has " + std::to_string(x.values.size()) +
                     " values, tree expects " + std::to_string(tree.feature_dim));
  }
  return {std::move(tree), std::move(x)};
}

int cmd_run_mem(const RunArgs& a, std::ostream& out) {
  auto [tree, x] = load_instance(a);
  const OutsourcedRun r = run_outsourced(tree, x, run_config(a), a.seed);
  out << "result: " << r.result << "\n"
      << "expected: " << r.expected << "\n";
  print_phases(out, r.run.transcript);
  out << "provider bytes: " << r.provider.bytes << "\n"
      << "client upload: " << r.client_up.elements << " elements, " << r.client_up.bytes
      << " bytes\n"
      << "client download: " << r.client_down.elements << " elements, " << r.client_down.bytes
      << " bytes\n"
      << "wall: " << fixed(r.run.wall_ms) << " ms\n";
  if (!a.transcript_csv.empty()) {
    std::ofstream f(a.transcript_csv);
    if (!f) throw IoError("cannot open " + a.transcript_csv);
    write_transcript_csv(f, r.run.transcript);
    if (!f) throw IoError("failed writing " + a.transcript_csv);
  }
  if (!a.result_out.empty()) {
    write_file(a.result_out, serialize_result(r.run.result0, r.run.result1));
  }
  if (!r.verified) throw MismatchError("secure result differs from the plaintext oracle");
  out << "VERIFIED\n";
  return 0;
}

// One server process over TCP. Both processes derive the dealer material and
// the provider and client shares from the shared seed and keep only their
// own; after the protocol the servers swap their result shares so that each
// can verify.
int cmd_run_tcp(const RunArgs& a, std::ostream& out) {
  if (a.party != 0 && a.party != 1) throw UsageError("--party 0|1 is required with tcp");
  auto [tree, x] = load_instance(a);
  const Party me = party_from_index(static_cast<unsigned>(a.party));
  const RunConfig cfg = run_config(a);
  const BitWidth w = tree.width;

  const Budget budget =
      inference_budget(tree.depth, tree.feature_dim, w, cfg.options.compare.mode);
  auto materials = dealer_generate(budget, w, a.seed);
  PartyMaterial& material = me == Party::kZero ? materials.first : materials.second;
  Prg provider(a.seed, "sdtree/provider");
  auto models = provider_encrypt(tree, provider);
  Prg client(a.seed, "sdtree/client");
  auto features = client_encrypt(x, client);

  const auto connect_timeout = std::chrono::milliseconds(a.timeout_ms);
  std::unique_ptr<Channel> channel;
  if (me == Party::kZero) {
    channel = TcpChannel::listen(a.port, cfg.link, connect_timeout);
  } else {
    channel = TcpChannel::connect(a.host, a.port, cfg.link, connect_timeout);
  }
  channel->set_timeout(cfg.timeout);
  Session s(*channel, material,
            Prg(a.seed, me == Party::kZero ? "sdtree/server0" : "sdtree/server1"));
  const auto start = std::chrono::steady_clock::now();
  const ArithShare mine =
      run_party(s, me == Party::kZero ? models.first : models.second,
                me == Party::kZero ? features.first : features.second, cfg.options);
  const auto stop = std::chrono::steady_clock::now();

  channel->begin_phase("result_swap");
  ByteWriter wr;
  wr.put_element(mine.value.value(), w);
  const Bytes got = channel->exchange(wr.bytes());
  channel->end_phase();
  ByteReader rd(got);
  const ArithShare theirs{peer_of(me), RingElement(w, rd.get_element(w))};
  rd.expect_end();
  const ArithShare& s0 = me == Party::kZero ? mine : theirs;
  const ArithShare& s1 = me == Party::kZero ? theirs : mine;
  const std::int64_t result = decode_signed(reconstruct_arith(s0, s1));
  const std::int64_t expected = plaintext_infer(tree, x);

  out << "party: " << a.party << "\n"
      << "result: " << result << "\n"
      << "expected: " << expected << "\n";
  out << std::left << std::setw(16) << "phase" << std::right << std::setw(8) << "rounds"
      << std::setw(14) << "bytes_sent" << std::setw(16) << "elapsed_ms" << "\n";
  for (const auto& p : channel->transcript().phases()) {
    out << std::left << std::setw(16) << p.label << std::right << std::setw(8) << p.rounds
        << std::setw(14) << p.bytes_sent << std::setw(16) << fixed(p.sim_end_ms - p.sim_start_ms)
        << "\n";
  }
  out << "wall: " << fixed(std::chrono::duration<double, std::milli>(stop - start).count())
      << " ms\n";
  if (!a.result_out.empty()) write_file(a.result_out, serialize_result(s0, s1));
  if (result != expected) throw MismatchError("secure result differs from the plaintext oracle");
  out << "VERIFIED\n";
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> grid;
  bool include_d17 = false;
  unsigned bitlen = 64;
  double latency_ms = 75.0;
  double bandwidth_mbps = 0.0;
  bool include_compute = false;
  std::string compare = "both";
  std::uint64_t seed = 1;
  unsigned reps = 1;
  std::string out;
};

std::vector<std::pair<unsigned, std::uint32_t>> bench_grid(const BenchArgs& a) {
  std::vector<std::pair<unsigned, std::uint32_t>> grid;
  if (a.grid.empty()) {
    grid = {{3, 13}, {4, 15}, {8, 9}, {13, 13}};
  } else {
    for (const auto& item : a.grid) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw UsageError("--grid entries are DEPTH:FEATURES");
      try {
        grid.emplace_back(static_cast<unsigned>(std::stoul(item.substr(0, colon))),
                          static_cast<std::uint32_t>(std::stoul(item.substr(colon + 1))));
      } catch (const std::logic_error&) {
        throw UsageError("bad --grid entry '" + item + "'");
      }
    }
  }
  if (a.include_d17) grid.emplace_back(17, 15);
  for (auto [d, n] : grid) {
    if (d < 1 || d > 20 || n < 1) throw UsageError("grid entry out of range");
  }
  return grid;
}

void write_bench(std::ostream& csv, const BenchArgs& a) {
  if (a.reps < 1) throw UsageError("--reps must be at least 1");
  const BitWidth w = BitWidth::of(a.bitlen);
  std::vector<CompareMode> modes;
  if (a.compare == "both") {
    modes = {CompareMode::kCarryLookahead, CompareMode::kRippleCarry};
  } else {
    modes = {kCompareModes.at(a.compare)};
  }
  csv << "d,I_dim,l,compare,phase,rounds,bytes_p0,bytes_p1,sim_elapsed_ms,provider_bytes,"
         "client_up_bytes,client_down_bytes\n";
  for (auto [d, n] : bench_grid(a)) {
    for (CompareMode mode : modes) {
      RunConfig cfg;
      cfg.options.compare.mode = mode;
      cfg.link = {a.latency_ms, a.bandwidth_mbps, a.include_compute};
      std::vector<PhaseSummary> sum;
      OutsourcedRun last;
      for (unsigned rep = 0; rep < a.reps; ++rep) {
        const std::uint64_t seed = a.seed + rep;
        Prg prg(seed, "sdtree/gen");
        auto [tree, x] = gen_synthetic(d, n, w, prg);
        cfg.seed = seed;
        last = run_outsourced(tree, x, cfg, seed);
        if (!last.verified) throw MismatchError("bench instance failed verification");
        const auto& phases = last.run.transcript.phases;
        if (rep == 0) {
          sum = phases;
        } else {
          for (std::size_t i = 0; i < sum.size(); ++i) {
            if (sum[i].rounds != phases[i].rounds || sum[i].bytes_p0 != phases[i].bytes_p0 ||
                sum[i].bytes_p1 != phases[i].bytes_p1) {
              throw ProtocolError("communication differs between repetitions");
            }
            sum[i].sim_elapsed_ms += phases[i].sim_elapsed_ms;
          }
        }
      }
      PhaseSummary total{"total", 0, 0, 0, 0, 0.0};
      for (auto& p : sum) {
        p.sim_elapsed_ms /= a.reps;
        total.rounds += p.rounds;
        total.bytes_p0 += p.bytes_p0;
        total.bytes_p1 += p.bytes_p1;
        total.sim_elapsed_ms += p.sim_elapsed_ms;
      }
      sum.push_back(total);
      for (const auto& p : sum) {
        csv << d << ',' << n << ',' << a.bitlen << ',' << mode_name(mode) << ',' << p.label << ','
            << p.rounds << ',' << p.bytes_p0 << ',' << p.bytes_p1 << ',' << fixed(p.sim_elapsed_ms)
            << ',' << last.provider.bytes << ',' << last.client_up.bytes << ','
            << last.client_down.bytes << '\n';
      }
    }
  }
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.out.empty()) {
    write_bench(out, a);
    return 0;
  }
  std::ofstream f(a.out);
  if (!f) throw IoError("cannot open " + a.out);
  write_bench(f, a);
  f.close();
  if (!f) throw IoError("failed writing " + a.out);
  out << "wrote " << a.out << "\n";
  return 0;
}

// ---- selftest -------------------------------------------------------------

enum class Fault { kNone, kSignFlip, kDeplete };

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;
};

// All pairs of the encodable signed range at l = 8.
SuiteResult compare_suite(CompareMode mode, Fault fault, std::uint64_t seed) {
  const BitWidth w = BitWidth::of(8);
  std::vector<std::int64_t> xs, ys;
  for (std::int64_t x = w.signed_min(); x <= w.signed_max(); ++x) {
    for (std::int64_t y = w.signed_min(); y <= w.signed_max(); ++y) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  const std::size_t n = xs.size();
  Prg prg(seed, "sdtree/selftest/compare");
  std::vector<std::uint64_t> xv(n), yv(n);
  for (std::size_t i = 0; i < n; ++i) {
    xv[i] = encode_signed(xs[i], w).value();
    yv[i] = encode_signed(ys[i], w).value();
  }
  auto [x0, x1] = share_arith_vec(xv, w, prg);
  auto [y0, y1] = share_arith_vec(yv, w, prg);
  Budget budget;
  budget.bool_triples = n * compare_bool_triples(w, mode);
  if (fault == Fault::kDeplete) budget.bool_triples -= 1;
  auto [m0, m1] = dealer_generate(budget, w, seed);
  CompareOptions opt{mode, fault == Fault::kSignFlip};
  auto run = run_two_party(m0, m1, [&](Session& s) {
    return secure_compare(s, s.party == Party::kZero ? x0 : x1, s.party == Party::kZero ? y0 : y1,
                          opt);
  });
  const BitVec v = run.out0 ^ run.out1;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < n; ++i) wrong += v.get(i) != node_bit(xs[i], ys[i]);
  return {std::string("compare l=8 ") + mode_name(mode), wrong == 0,
          std::to_string(n - wrong) + "/" + std::to_string(n) + " pairs"};
}

SuiteResult select_suite(std::uint32_t dim, Fault fault, std::uint64_t seed) {
  const BitWidth w = BitWidth::of(8);
  constexpr unsigned kTrials = 50;
  Prg prg(seed, "sdtree/selftest/select/" + std::to_string(dim));
  std::size_t checked = 0, wrong = 0;
  for (unsigned t = 0; t < kTrials; ++t) {
    std::vector<std::uint64_t> features(dim), indices(dim);
    for (auto& f : features) f = prg.ring(w);
    for (std::uint32_t i = 0; i < dim; ++i) indices[i] = i;
    auto [f0, f1] = share_arith_vec(features, w, prg);
    auto [i0, i1] = share_arith_vec(indices, w, prg);
    Budget budget;
    budget.ot_per_direction = dim - (fault == Fault::kDeplete ? 1 : 0);
    budget.ot_size = dim;
    auto [m0, m1] = dealer_generate(budget, w, seed + t);
    auto run = run_two_party(
        m0, m1,
        [&](Session& s) {
          return oblivious_select(s, s.party == Party::kZero ? f0 : f1,
                                  s.party == Party::kZero ? i0 : i1);
        },
        {}, seed + t);
    const auto got = reconstruct_arith_vec(run.out0, run.out1);
    for (std::uint32_t i = 0; i < dim; ++i) {
      ++checked;
      wrong += got[i] != features[i];
    }
  }
  return {"select l=8 I_dim=" + std::to_string(dim), wrong == 0,
          std::to_string(checked - wrong) + "/" + std::to_string(checked) + " reads"};
}

SuiteResult end_to_end_suite(Fault fault, std::uint64_t seed) {
  const BitWidth w = BitWidth::of(8);
  constexpr unsigned kInstances = 100;
  constexpr std::uint32_t kDim = 5;
  std::size_t wrong = 0;
  RunConfig cfg;
  cfg.options.compare.flip_difference = fault == Fault::kSignFlip;
  cfg.link = {0.0, 0.0, false};
  for (unsigned i = 0; i < kInstances; ++i) {
    Prg prg(seed + i, "sdtree/gen");
    auto [tree, x] = gen_synthetic(3, kDim, w, prg);
    cfg.seed = seed + i;
    wrong += !run_outsourced(tree, x, cfg, seed + i).verified;
  }
  return {"end-to-end l=8 d=3", wrong == 0,
          std::to_string(kInstances - wrong) + "/" + std::to_string(kInstances) + " instances"};
}

int cmd_selftest(const std::string& fault_name, std::uint64_t seed, std::ostream& out) {
  Fault fault = Fault::kNone;
  if (fault_name == "sign-flip") fault = Fault::kSignFlip;
  if (fault_name == "deplete") fault = Fault::kDeplete;
  std::vector<SuiteResult> results;
  results.push_back(compare_suite(CompareMode::kCarryLookahead, fault, seed));
  results.push_back(compare_suite(CompareMode::kRippleCarry, fault, seed));
  for (std::uint32_t dim : {4u, 9u, 16u}) results.push_back(select_suite(dim, fault, seed));
  results.push_back(end_to_end_suite(fault, seed));
  bool all = true;
  for (const auto& r : results) {
    out << std::left << std::setw(24) << r.name << (r.pass ? "PASS  " : "FAIL  ") << r.detail
        << "\n";
    all = all && r.pass;
  }
  out << (all ? "all suites passed" : "some suites FAILED") << "\n";
  return all ? 0 : static_cast<int>(ExitCode::kProtocolMismatch);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-server secure decision tree inference"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random complete tree and feature vector");
  gen_cmd->add_option("--depth", gen.depth, "Tree depth d")->capture_default_str();
  gen_cmd->add_option("--features", gen.features, "Feature dimension")->capture_default_str();
  gen_cmd->add_option("--bitlen", gen.bitlen, "Ring bit length l")
      ->check(CLI::IsMember({8u, 16u, 32u, 64u}))
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output prefix; writes PREFIX.tree and PREFIX.vec")
      ->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run secure inference and verify the result");
  run_cmd->add_option("--tree", run.tree)->required();
  run_cmd->add_option("--vector,--features-file", run.vector)->required();
  run_cmd->add_option("--bitlen", run.bitlen, "Expected bit length (checked against the files)");
  run_cmd->add_option("--latency-ms", run.latency_ms, "Simulated one-way latency")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  run_cmd->add_option("--bandwidth-mbps", run.bandwidth_mbps, "Simulated bandwidth, 0 = unlimited")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  run_cmd->add_flag("--exclude-compute", run.exclude_compute,
                    "Simulated time counts only the link model");
  run_cmd->add_option("--transport", run.transport)
      ->check(CLI::IsMember({"mem", "tcp"}))
      ->capture_default_str();
  run_cmd->add_option("--party", run.party, "Server index for tcp transport")
      ->check(CLI::IsMember({0, 1}));
  run_cmd->add_option("--host", run.host)->capture_default_str();
  run_cmd->add_option("--port", run.port)->capture_default_str();
  run_cmd->add_option("--compare", run.compare)
      ->check(CLI::IsMember({"cla", "ripple"}))
      ->capture_default_str();
  run_cmd->add_option("--seed", run.seed)->capture_default_str();
  run_cmd->add_option("--timeout-ms", run.timeout_ms)->capture_default_str();
  run_cmd->add_option("--transcript-csv", run.transcript_csv);
  run_cmd->add_option("--result-out", run.result_out);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Per-phase cost report over a parameter grid");
  bench_cmd->add_option("--grid", bench.grid, "DEPTH:FEATURES pairs")->delimiter(',');
  bench_cmd->add_flag("--include-d17", bench.include_d17, "Append d=17, I_dim=15");
  bench_cmd->add_option("--bitlen", bench.bitlen)
      ->check(CLI::IsMember({8u, 16u, 32u, 64u}))
      ->capture_default_str();
  bench_cmd->add_option("--latency-ms", bench.latency_ms)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_option("--bandwidth-mbps", bench.bandwidth_mbps)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_flag("--include-compute", bench.include_compute,
                      "Add measured compute time to the simulated clock (not reproducible)");
  bench_cmd->add_option("--compare", bench.compare)
      ->check(CLI::IsMember({"cla", "ripple", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps)->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV path; stdout if omitted");

  std::string fault = "none";
  std::uint64_t selftest_seed = 1;
  auto* self_cmd = app.add_subcommand("selftest", "Exhaustive small-width protocol checks");
  self_cmd->add_option("--seed", selftest_seed)->capture_default_str();
  self_cmd->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"none", "sign-flip", "deplete"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*run_cmd) return run.transport == "tcp" ? cmd_run_tcp(run, out) : cmd_run_mem(run, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*self_cmd) return cmd_selftest(fault, selftest_seed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kProtocolMismatch);
  }
  return static_cast<int>(ExitCode::kUsage);
}

}  // namespace sdtree
