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

#include <stdexcept>
#include <string>

namespace sdtree {

// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kProtocolMismatch = 4,
  kDepletion = 5,
};

enum class ErrorKind {
  kUsage,      // invalid parameters or API misuse
  kIo,         // file system failures
  kFormat,     // malformed serialized data
  kProtocol,   // channel failure, desynchronization, closed peer
  kDepletion,  // preprocessed material exhausted
  kMismatch,   // secure result disagrees with the plaintext oracle
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define SDTREE_DEFINE_ERROR(Name, Kind)                 \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& what)              \
        : Error(ErrorKind::Kind, what) {}               \
  };

SDTREE_DEFINE_ERROR(UsageError, kUsage)
SDTREE_DEFINE_ERROR(IoError, kIo)
SDTREE_DEFINE_ERROR(FormatError, kFormat)
SDTREE_DEFINE_ERROR(ProtocolError, kProtocol)
SDTREE_DEFINE_ERROR(DepletionError, kDepletion)
SDTREE_DEFINE_ERROR(MismatchError, kMismatch)

#undef SDTREE_DEFINE_ERROR

// Rethrows `e` as the same concrete error type with `context: ` prepended.
[[noreturn]] void rethrow_with_context(const Error& e, const std::string& context);

ExitCode exit_code_for(ErrorKind kind);

}  // namespace sdtree
