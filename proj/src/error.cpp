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

#include "monoidlab/error.hpp"

namespace monoidlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownToken: return "UnknownToken";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotIdentity: return "NotIdentity";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DJMismatch: return "DJMismatch";
    case ErrorKind::CharacterizationDisagreement: return "CharacterizationDisagreement";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::ConfluenceUnverified: return "ConfluenceUnverified";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::WitnessInvariantFailed: return "WitnessInvariantFailed";
    case ErrorKind::ColoringDomainExceeded: return "ColoringDomainExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
  }
  return "Unknown";
}

}  // namespace monoidlab
