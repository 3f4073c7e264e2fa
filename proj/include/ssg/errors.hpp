// Copyright 2026 The ssg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSG_ERRORS_HPP_
#define SSG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssg {

// Malformed text input. line() is 1-based, or 0 when the problem is not
// tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A game failed validation where a valid one was required.
class InvalidGame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments that violate an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A lazy expansion returned an empty or over-bound successor list.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssg

#endif  // SSG_ERRORS_HPP_
