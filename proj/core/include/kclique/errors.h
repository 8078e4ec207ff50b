// Copyright 2026 The kclique-lab Authors
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

#ifndef KCLIQUE_ERRORS_H_
#define KCLIQUE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kclique {

// Caller supplied something outside the domain of an operation (vertex out
// of range, k > n, malformed probability).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input could not be parsed. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An operation declined to run because its input exceeds a safety budget
// (brute-force enumeration limits).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed its own post-condition check. Always a defect.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kclique

#endif  // KCLIQUE_ERRORS_H_
