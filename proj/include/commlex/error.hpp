// Copyright 2026 The commlex Authors
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

#ifndef COMMLEX_ERROR_HPP_
#define COMMLEX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace commlex {

// Every failure the library reports carries one of these kinds. The CLI
// prints them as a machine-parseable "error:<kind>:" prefix.
enum class ErrorKind {
  Io,
  MalformedDate,
  DuplicateId,
  EmptyText,
  Parse,
  NonFiniteValue,
  DateOrder,
  DuplicateDate,
  EmptyLexicon,
  InvalidLexiconEntry,
  EmptyDocument,
  EmptyInput,
  DegenerateInput,
  InsufficientOverlap,
  BadConfig,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace commlex

#endif  // COMMLEX_ERROR_HPP_
