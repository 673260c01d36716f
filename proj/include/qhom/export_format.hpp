// Copyright 2026 The qhom Authors
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

#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace qhom {

/// Deterioration values above this are written as the capped sentinel with
/// overflow_flag set, keeping output files finite.
inline constexpr double delta_overflow_cap = 1e6;

/// Locale-independent formatting at 12 significant digits. Exported values
/// round-trip bit-identically at this precision.
inline std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[40];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  if (ec != std::errc())
    return std::to_string(value);  // unreachable for finite doubles
  return std::string(buf, end);
}

}  // namespace qhom
