// Copyright 2026 The forcelab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORCELAB_ERROR_HPP_
#define FORCELAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace forcelab {

// Numeric values are part of the C ABI and the CLI exit codes; append only.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParse = 2,
  kCapExceeded = 3,
  kPrecondition = 4,
  kNoPerfectMatching = 5,
  kNotBipartite = 6,
  kNotTransitive = 7,
  kInfeasible = 8,
  kIo = 9,
  kInternal = 10,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace forcelab

#endif  // FORCELAB_ERROR_HPP_
