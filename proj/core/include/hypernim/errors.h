// Copyright 2026 The hypernim Authors.
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

#ifndef HYPERNIM_ERRORS_H_
#define HYPERNIM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hypernim {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments of an operation was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line` is 1-based, or 0 when not tied to a line.
class ParseError : public InvalidArgument {
 public:
  ParseError(int line, const std::string& message)
      : InvalidArgument(line > 0 ? "line " + std::to_string(line) + ": " +
                                       message
                                 : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive computation would exceed one of its configured caps.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypernim

#endif  // HYPERNIM_ERRORS_H_
