// Copyright 2026 The diagram-kernel Authors
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

#include <stdexcept>
#include <string>

namespace dk {

/// Base class for all kernel errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ill-typed composition or construction: cod/dom mismatch, bad offsets.
struct CompositionError : Error {
  using Error::Error;
};

/// Raised when two boxes share a wire and cannot be interchanged.
struct InterchangeError : Error {
  using Error::Error;
};

/// Raised by normal_form when a box is not connected to the boundary.
struct DisconnectedError : Error {
  using Error::Error;
};

/// A functor was applied to a box or object it has no mapping for.
struct MappingError : Error {
  using Error::Error;
};

/// Tensor shape or arity mismatch.
struct ShapeError : Error {
  using Error::Error;
};

/// A value-level invariant failed: non-unitary gate, bad grammar, bad bits.
struct ValidationError : Error {
  using Error::Error;
};

/// A planar layout violates progressivity, genericity or the outer-node rule.
struct LayoutError : Error {
  using Error::Error;
};

/// Malformed or unrecognized JSON input.
struct DecodeError : Error {
  using Error::Error;
};

/// A word missing from a grammar's vocabulary.
struct UnknownWordError : Error {
  using Error::Error;
};

}  // namespace dk
