// Copyright 2026 The uzpos Authors
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

#ifndef UZPOS_ERRORS_HPP_
#define UZPOS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uzpos {

// A document that could not be parsed at all. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A document that parsed but violates the schema (unknown tag name,
// duplicate rule id, malformed field, ...). The message names the
// offending value.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uzpos

#endif  // UZPOS_ERRORS_HPP_
