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

#include "sdtree/errors.h"

namespace sdtree {

void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string what = context + ": " + e.what();
  switch (e.kind()) {
    case ErrorKind::kUsage: throw UsageError(what);
    case ErrorKind::kIo: throw IoError(what);
    case ErrorKind::kFormat: throw FormatError(what);
    case ErrorKind::kProtocol: throw ProtocolError(what);
    case ErrorKind::kDepletion: throw DepletionError(what);
    case ErrorKind::kMismatch: throw MismatchError(what);
  }
  throw Error(e.kind(), what);
}

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return ExitCode::kUsage;
    case ErrorKind::kIo:
    case ErrorKind::kFormat: return ExitCode::kIo;
    case ErrorKind::kProtocol:
    case ErrorKind::kMismatch: return ExitCode::kProtocolMismatch;
    case ErrorKind::kDepletion: return ExitCode::kDepletion;
  }
  return ExitCode::kUsage;
}

}  // namespace sdtree
