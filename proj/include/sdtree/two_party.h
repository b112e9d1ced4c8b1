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

#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include "sdtree/preprocessing.h"
#include "sdtree/prg.h"
#include "sdtree/session.h"
#include "sdtree/transport.h"

namespace sdtree {

template <typename T>
struct TwoPartyRun {
  T out0;
  T out1;
  RunTranscript transcript;
};

// Runs `body(session)` for both servers on their own threads over an
// in-memory channel. The first exception thrown by either side is rethrown
// after both threads finish.
template <typename Body>
auto run_two_party(PartyMaterial& material0, PartyMaterial& material1, Body&& body,
                   LinkModel link = {}, std::uint64_t seed = 1)
    -> TwoPartyRun<decltype(body(std::declval<Session&>()))> {
  using T = decltype(body(std::declval<Session&>()));
  auto [c0, c1] = make_memory_channel_pair(link);
  Channel* channels[2] = {c0.get(), c1.get()};
  PartyMaterial* materials[2] = {&material0, &material1};
  std::optional<T> out[2];
  std::mutex mu;
  std::exception_ptr error;
  auto party_main = [&](unsigned m) {
    try {
      Session s(*channels[m], *materials[m], Prg(seed, m == 0 ? "sdtree/server0" : "sdtree/server1"));
      out[m].emplace(body(s));
      channels[m]->end_phase();
    } catch (...) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
      channels[m]->close();
    }
  };
  std::thread t0(party_main, 0);
  std::thread t1(party_main, 1);
  t0.join();
  t1.join();
  if (error) std::rethrow_exception(error);
  return {std::move(*out[0]), std::move(*out[1]),
          merge_transcripts(c0->transcript(), c1->transcript())};
}

}  // namespace sdtree
