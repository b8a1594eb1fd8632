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

#ifndef COMMLEX_STRFMT_HPP_
#define COMMLEX_STRFMT_HPP_

#include <cstdint>
#include <string>

namespace commlex {

// Shortest decimal string that round-trips to the same double ('.' decimal
// separator, no locale). Keeps emitted tables byte-stable across platforms.
std::string format_double(double value);

std::string format_int(std::int64_t value);

}  // namespace commlex

#endif  // COMMLEX_STRFMT_HPP_
