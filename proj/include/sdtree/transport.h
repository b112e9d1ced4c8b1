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
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdtree/sharing.h"
#include "sdtree/wire.h"

namespace sdtree {

// Simulated WAN link between the two servers.
struct LinkModel {
  double latency_ms = 0.0;     // one-way delay
  double bandwidth_mbps = 0.0; // 0 = uncapped
  // When false, simulated time advances only by latency and transmission
  // delay, so elapsed figures are exactly reproducible.
  bool include_compute = true;
};

// Per-party simulated clock. Local computation advances it by measured CPU
// wall time (when enabled); a received message moves it forward to the
// message's arrival time, send time + latency + size / bandwidth. Time spent
// blocked in a receive is not counted as computation.
class SimClock {
 public:
  explicit SimClock(LinkModel link);

  double now_ms();
  // Stamp for an outgoing message.
  double on_send();
  void on_receive(double sent_at_ms, std::size_t bytes);
  // Brackets a blocking wait so it is not charged as computation.
  void pause();
  void resume();

  // Real elapsed time instead of simulation; used by socket transports.
  void use_wall_clock() { wall_ = true; }

  const LinkModel& link() const { return link_; }

 private:
  void advance_compute();

  LinkModel link_;
  bool wall_ = false;
  double now_ms_ = 0.0;
  std::chrono::steady_clock::time_point last_;
  bool paused_ = false;
};

struct PhaseRecord {
  std::string label;
  std::uint64_t rounds = 0;
  std::uint64_t bytes_sent = 0;
  std::uint64_t messages = 0;
  double sim_start_ms = 0.0;
  double sim_end_ms = 0.0;
};

struct LoggedMessage {
  std::size_t phase;
  bool outgoing;
  Bytes payload;
};

// One party's record of a protocol execution.
class Transcript {
 public:
  void begin_phase(std::string_view label, double now_ms);
  void end_phase(double now_ms);
  void on_round();
  void on_send(std::size_t bytes);

  const std::vector<PhaseRecord>& phases() const { return phases_; }
  std::size_t current_phase() const { return phases_.empty() ? 0 : phases_.size() - 1; }
  const PhaseRecord* find(std::string_view label) const;
  std::uint64_t total_rounds() const;
  std::uint64_t total_bytes() const;
  std::uint64_t total_messages() const;

  // Message capture, off by default.
  void set_logging(bool on) { logging_ = on; }
  bool logging() const { return logging_; }
  void log(bool outgoing, std::span<const std::uint8_t> payload);
  const std::vector<LoggedMessage>& messages() const { return log_; }

 private:
  PhaseRecord& current();

  std::vector<PhaseRecord> phases_;
  bool logging_ = false;
  std::vector<LoggedMessage> log_;
};

// Both parties' view of one phase.
struct PhaseSummary {
  std::string label;
  std::uint64_t rounds = 0;
  std::uint64_t bytes_p0 = 0;
  std::uint64_t bytes_p1 = 0;
  std::uint64_t messages = 0;
  double sim_elapsed_ms = 0.0;
};

struct RunTranscript {
  std::vector<PhaseSummary> phases;

  const PhaseSummary* find(std::string_view label) const;
  std::uint64_t total_rounds() const;
  std::uint64_t total_bytes() const;
  double total_elapsed_ms() const;
};

// Combines the two parties' transcripts. Throws ProtocolError if they
// disagree on the phase sequence or round counts.
RunTranscript merge_transcripts(const Transcript& p0, const Transcript& p1);

// CSV with header phase,rounds,bytes_p0,bytes_p1,messages.
void write_transcript_csv(std::ostream& out, const RunTranscript& transcript);

// A party's endpoint of the server-to-server link. Delivery is reliable and
// FIFO. Round accounting: exchange() and each side of a flight count one
// round; raw send()/recv() count bytes only.
class Channel {
 public:
  Channel(Party self, LinkModel link);
  virtual ~Channel() = default;
  Channel(const Channel&) = delete;
  Channel& operator=(const Channel&) = delete;

  Party self() const { return self_; }

  // Ends the current phase (if any) and starts a new one.
  void begin_phase(std::string_view label);
  void end_phase();

  void send(std::span<const std::uint8_t> payload);
  Bytes recv();

  // Simultaneous bidirectional exchange: one round.
  Bytes exchange(std::span<const std::uint8_t> payload);
  // One-directional flight the peer waits for: one round on both sides.
  void send_flight(std::span<const std::uint8_t> payload);
  Bytes recv_flight();

  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }
  SimClock& clock() { return clock_; }

  void set_timeout(std::chrono::milliseconds timeout) { timeout_ = timeout; }
  std::chrono::milliseconds timeout() const { return timeout_; }

  // Marks the endpoint closed; the peer's pending and future receives fail.
  virtual void close() = 0;

 protected:
  struct Frame {
    std::uint8_t phase_tag = 0;
    double sent_at_ms = 0.0;
    Bytes payload;
  };

  virtual void push(Frame frame) = 0;
  // Blocks up to `timeout`; throws ProtocolError on timeout or closed peer.
  virtual Frame pop(std::chrono::milliseconds timeout) = 0;

 private:
  Party self_;
  SimClock clock_;
  Transcript transcript_;
  std::chrono::milliseconds timeout_{60000};
};

// Connected in-memory endpoints for party 0 and party 1.
std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> make_memory_channel_pair(
    LinkModel link = {});

// Accounting for a one-way client or provider link to the two servers.
struct LinkTraffic {
  std::uint64_t bytes = 0;
  std::uint64_t elements = 0;
  std::uint64_t messages = 0;
};

}  // namespace sdtree
