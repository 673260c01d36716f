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

#include <stdexcept>
#include <string>

namespace qhom {

/// A state failed its structural invariants (Hermiticity, unit trace,
/// positivity) beyond the validation tolerance.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation would grow a register beyond the configured qubit cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rest-evolution mode was requested from an operation that cannot serve it.
class unsupported_mode_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweep-config syntax or range problem; the message carries line/field info.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure to read or write an output artifact.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qhom
