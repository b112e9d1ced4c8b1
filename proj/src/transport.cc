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

#include "sdtree/transport.h"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <mutex>

#include "sdtree/errors.h"

namespace sdtree {

SimClock::SimClock(LinkModel link) : link_(link), last_(std::chrono::steady_clock::now()) {}

void SimClock::advance_compute() {
  const auto t = std::chrono::steady_clock::now();
  if (wall_ || (!paused_ && link_.include_compute)) {
    now_ms_ += std::chrono::duration<double, std::milli>(t - last_).count();
  }
  last_ = t;
}

double SimClock::now_ms() {
  advance_compute();
  return now_ms_;
}

double SimClock::on_send() { return now_ms(); }

void SimClock::on_receive(double sent_at_ms, std::size_t bytes) {
  advance_compute();
  if (wall_) return;
  double arrival = sent_at_ms + link_.latency_ms;
  if (link_.bandwidth_mbps > 0.0) {
    arrival += static_cast<double>(bytes) * 8.0 / (link_.bandwidth_mbps * 1e3);
  }
  now_ms_ = std::max(now_ms_, arrival);
}

void SimClock::pause() {
  advance_compute();
  paused_ = true;
}

void SimClock::resume() {
  advance_compute();
  paused_ = false;
}

void Transcript::begin_phase(std::string_view label, double now_ms) {
  PhaseRecord r;
  r.label = std::string(label);
  r.sim_start_ms = now_ms;
  r.sim_end_ms = now_ms;
  phases_.push_back(std::move(r));
}

void Transcript::end_phase(double now_ms) {
  if (!phases_.empty()) phases_.back().sim_end_ms = now_ms;
}

PhaseRecord& Transcript::current() {
  if (phases_.empty()) begin_phase("default", 0.0);
  return phases_.back();
}

void Transcript::on_round() { ++current().rounds; }

void Transcript::on_send(std::size_t bytes) {
  auto& p = current();
  p.bytes_sent += bytes;
  ++p.messages;
}

void Transcript::log(bool outgoing, std::span<const std::uint8_t> payload) {
  if (!logging_) return;
  log_.push_back({current_phase(), outgoing, Bytes(payload.begin(), payload.end())});
}

const PhaseRecord* Transcript::find(std::string_view label) const {
  for (const auto& p : phases_) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

std::uint64_t Transcript::total_rounds() const {
  std::uint64_t n = 0;
  for (const auto& p : phases_) n += p.rounds;
  return n;
}

std::uint64_t Transcript::total_bytes() const {
  std::uint64_t n = 0;
  for (const auto& p : phases_) n += p.bytes_sent;
  return n;
}

std::uint64_t Transcript::total_messages() const {
  std::uint64_t n = 0;
  for (const auto& p : phases_) n += p.messages;
  return n;
}

const PhaseSummary* RunTranscript::find(std::string_view label) const {
  for (const auto& p : phases) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

std::uint64_t RunTranscript::total_rounds() const {
  std::uint64_t n = 0;
  for (const auto& p : phases) n += p.rounds;
  return n;
}

std::uint64_t RunTranscript::total_bytes() const {
  std::uint64_t n = 0;
  for (const auto& p : phases) n += p.bytes_p0 + p.bytes_p1;
  return n;
}

double RunTranscript::total_elapsed_ms() const {
  double t = 0.0;
  for (const auto& p : phases) t += p.sim_elapsed_ms;
  return t;
}

RunTranscript merge_transcripts(const Transcript& p0, const Transcript& p1) {
  const auto& a = p0.phases();
  const auto& b = p1.phases();
  if (a.size() != b.size()) throw ProtocolError("parties ran a different number of phases");
  RunTranscript out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].label != b[i].label) {
      throw ProtocolError("phase label mismatch: " + a[i].label + " vs " + b[i].label);
    }
    if (a[i].rounds != b[i].rounds) {
      throw ProtocolError("round count mismatch in phase " + a[i].label);
    }
    PhaseSummary s;
    s.label = a[i].label;
    s.rounds = a[i].rounds;
    s.bytes_p0 = a[i].bytes_sent;
    s.bytes_p1 = b[i].bytes_sent;
    s.messages = a[i].messages + b[i].messages;
    // A phase starts when the later party enters it and ends when the later
    // party leaves it.
    s.sim_elapsed_ms = std::max(a[i].sim_end_ms, b[i].sim_end_ms) -
                       std::max(a[i].sim_start_ms, b[i].sim_start_ms);
    out.phases.push_back(std::move(s));
  }
  return out;
}

void write_transcript_csv(std::ostream& out, const RunTranscript& t) {
  out << "phase,rounds,bytes_p0,bytes_p1,messages\n";
  for (const auto& p : t.phases) {
    out << p.label << ',' << p.rounds << ',' << p.bytes_p0 << ',' << p.bytes_p1 << ','
        << p.messages << '\n';
  }
}

Channel::Channel(Party self, LinkModel link) : self_(self), clock_(link) {}

void Channel::begin_phase(std::string_view label) {
  const double now = clock_.now_ms();
  transcript_.end_phase(now);
  transcript_.begin_phase(label, now);
}

void Channel::end_phase() { transcript_.end_phase(clock_.now_ms()); }

void Channel::send(std::span<const std::uint8_t> payload) {
  Frame f;
  f.phase_tag = static_cast<std::uint8_t>(transcript_.current_phase());
  f.sent_at_ms = clock_.on_send();
  f.payload.assign(payload.begin(), payload.end());
  transcript_.on_send(payload.size());
  transcript_.log(true, payload);
  push(std::move(f));
}

Bytes Channel::recv() {
  clock_.pause();
  Frame f;
  try {
    f = pop(timeout_);
  } catch (...) {
    clock_.resume();
    throw;
  }
  clock_.resume();
  const auto expected = static_cast<std::uint8_t>(transcript_.current_phase());
  if (f.phase_tag != expected) {
    throw ProtocolError("protocol desynchronized: message from phase " +
                        std::to_string(f.phase_tag) + " received in phase " +
                        std::to_string(expected));
  }
  clock_.on_receive(f.sent_at_ms, f.payload.size());
  transcript_.log(false, f.payload);
  return std::move(f.payload);
}

Bytes Channel::exchange(std::span<const std::uint8_t> payload) {
  send(payload);
  Bytes in = recv();
  transcript_.on_round();
  return in;
}

void Channel::send_flight(std::span<const std::uint8_t> payload) {
  send(payload);
  transcript_.on_round();
}

Bytes Channel::recv_flight() {
  Bytes in = recv();
  transcript_.on_round();
  return in;
}

namespace {

struct MemoryLink {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<std::pair<std::uint8_t, double>> meta[2];
  std::deque<Bytes> queue[2];
  bool closed[2] = {false, false};
};

class MemoryChannel final : public Channel {
 public:
  MemoryChannel(Party self, LinkModel link, std::shared_ptr<MemoryLink> shared)
      : Channel(self, link), link_(std::move(shared)) {}
  ~MemoryChannel() override { close(); }

  void close() override {
    std::lock_guard<std::mutex> lock(link_->mu);
    link_->closed[index_of(self())] = true;
    link_->cv.notify_all();
  }

 protected:
  void push(Frame frame) override {
    const unsigned me = index_of(self());
    const unsigned other = 1 - me;
    std::lock_guard<std::mutex> lock(link_->mu);
    if (link_->closed[me]) throw ProtocolError("send on closed channel");
    if (link_->closed[other]) throw ProtocolError("send to closed peer");
    link_->meta[other].emplace_back(frame.phase_tag, frame.sent_at_ms);
    link_->queue[other].push_back(std::move(frame.payload));
    link_->cv.notify_all();
  }

  Frame pop(std::chrono::milliseconds timeout) override {
    const unsigned me = index_of(self());
    const unsigned other = 1 - me;
    std::unique_lock<std::mutex> lock(link_->mu);
    if (link_->closed[me]) throw ProtocolError("receive on closed channel");
    const bool ready = link_->cv.wait_for(lock, timeout, [&] {
      return !link_->queue[me].empty() || link_->closed[other];
    });
    if (link_->queue[me].empty()) {
      if (!ready) {
        throw ProtocolError("receive timed out after " + std::to_string(timeout.count()) +
                            " ms (protocol desynchronized?)");
      }
      throw ProtocolError("peer closed the channel");
    }
    Frame f;
    f.phase_tag = link_->meta[me].front().first;
    f.sent_at_ms = link_->meta[me].front().second;
    f.payload = std::move(link_->queue[me].front());
    link_->meta[me].pop_front();
    link_->queue[me].pop_front();
    return f;
  }

 private:
  std::shared_ptr<MemoryLink> link_;
};

}  // namespace

std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> make_memory_channel_pair(
    LinkModel link) {
  auto shared = std::make_shared<MemoryLink>();
  return {std::make_unique<MemoryChannel>(Party::kZero, link, shared),
          std::make_unique<MemoryChannel>(Party::kOne, link, shared)};
}

}  // namespace sdtree
