// Copyright 2026 The Cubic Lab Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubiclab {

// Caller handed in something outside an operation's domain (exit code 1).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input. `offset` is the byte position of the fault.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : PreconditionError(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A structural invariant the library promises was violated (exit code 2).
// Never caught and swallowed inside the library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubiclab

#define CUBICLAB_CHECK(cond, msg)                                   \
  do {                                                              \
    if (!(cond)) {                                                  \
      throw ::cubiclab::InternalError(std::string("check failed: ") + \
                                      #cond + ": " + (msg));        \
    }                                                               \
  } while (false)

#define CUBICLAB_REQUIRE(cond, msg)                        \
  do {                                                     \
    if (!(cond)) {                                         \
      throw ::cubiclab::PreconditionError(std::string(msg)); \
    }                                                      \
  } while (false)
