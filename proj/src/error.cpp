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

#include "commlex/error.hpp"

namespace commlex {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "io";
    case ErrorKind::MalformedDate: return "malformed-date";
    case ErrorKind::DuplicateId: return "duplicate-id";
    case ErrorKind::EmptyText: return "empty-text";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NonFiniteValue: return "non-finite";
    case ErrorKind::DateOrder: return "date-order";
    case ErrorKind::DuplicateDate: return "duplicate-date";
    case ErrorKind::EmptyLexicon: return "empty-lexicon";
    case ErrorKind::InvalidLexiconEntry: return "invalid-lexicon-entry";
    case ErrorKind::EmptyDocument: return "empty-document";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::InsufficientOverlap: return "insufficient-overlap";
    case ErrorKind::BadConfig: return "bad-config";
  }
  return "unknown";
}

}  // namespace commlex
