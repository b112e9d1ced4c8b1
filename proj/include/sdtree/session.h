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

#include "sdtree/preprocessing.h"
#include "sdtree/prg.h"
#include "sdtree/sharing.h"
#include "sdtree/transport.h"

namespace sdtree {

// Everything one server needs during the online phase. A session is used
// from a single thread.
struct Session {
  Session(Channel& channel, PartyMaterial& material, Prg prg)
      : party(channel.self()), channel(channel), material(material), prg(std::move(prg)) {}

  Party party;
  Channel& channel;
  PartyMaterial& material;
  Prg prg;  // this party's local randomness
};

}  // namespace sdtree
