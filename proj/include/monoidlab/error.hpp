// Copyright 2026 The Monoidlab Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoidlab {

/// Index of an element inside a finite semigroup. Names are presentation
/// only; every algorithm works on indices.
using Element = std::uint32_t;

enum class ErrorKind {
  DuplicateElement,
  UnknownToken,
  NotAssociative,
  NotIdentity,
  UnknownFamily,
  BadParams,
  ParseError,
  DJMismatch,
  CharacterizationDisagreement,
  PreconditionViolated,
  PostconditionFailed,
  TooLarge,
  NotAChain,
  ConfluenceUnverified,
  NotIdempotent,
  InvalidAction,
  WitnessInvariantFailed,
  ColoringDomainExceeded,
  SyntaxError,
  UnknownSymbol,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `witness` carries the
/// offending elements (a failing triple, a non-identity, ...) when the
/// error has one; `position` is used by parsers.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<Element> witness = {},
        std::size_t position = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::vector<Element> witness_;
  std::size_t position_;
};

}  // namespace monoidlab
