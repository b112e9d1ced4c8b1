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

#include "sdtree/bitvec.h"
#include "sdtree/session.h"
#include "sdtree/sharing.h"

namespace sdtree {

// Element-wise products of two shared batches over Z_{2^l}. Both parties
// call this with equal-length batches; the whole batch opens in a single
// exchange (one round). An empty batch costs nothing.
ArithShares beaver_mul_arith(Session& s, const ArithShares& a, const ArithShares& b);

// Element-wise ANDs of two XOR-shared bit batches; one round per batch.
BitVec beaver_mul_bool(Session& s, const BitVec& a, const BitVec& b);

}  // namespace sdtree
