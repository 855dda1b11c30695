// Copyright 2026 The Authors.
//
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

#ifndef RESMAT_ERROR_HPP
#define RESMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace resmat {

enum class ErrorKind {
  kParse,            // malformed text input
  kLimit,            // exponential routine refused by a configured limit
  kInvalidArgument,  // out-of-range parameters, unknown labels
  kPrecondition,     // input violates an operation's precondition
  kNotMatroid,       // operation requires a verified matroid
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void CheckLimit(int size, int limit, const char* what) {
  if (size > limit) {
    Fail(ErrorKind::kLimit, std::string(what) + ": size " +
                                std::to_string(size) + " exceeds limit " +
                                std::to_string(limit));
  }
}

}  // namespace resmat

#endif  // RESMAT_ERROR_HPP
