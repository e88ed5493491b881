// Copyright 2026 The fewcopy Authors
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

#ifndef FEWCOPY_FORMAT_HPP
#define FEWCOPY_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>

namespace fewcopy {

/// Locale-independent rendering of a double with 12 significant digits,
/// the fixed width used in all CSV output. NaN renders as the empty string
/// (the CSV marker for an inconclusive value).
inline std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

}  // namespace fewcopy

#endif  // FEWCOPY_FORMAT_HPP
