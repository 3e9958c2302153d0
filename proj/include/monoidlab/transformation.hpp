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
#include <span>
#include <vector>

#include "monoidlab/semigroup.hpp"

namespace monoidlab {

/// A total map {0..n-1} -> {0..n-1}, stored as its list of images.
using Transformation = std::vector<std::uint32_t>;

/// Composition convention used throughout the library: apply `first`, then
/// `second`, i.e. (first * second)(x) = second(first(x)). This matches
/// reading a word left to right through an automaton.
Transformation compose(const Transformation& first, const Transformation& second);

struct TransformationClosure {
  FiniteMonoid monoid;
  /// Element i of the monoid is the map maps[i].
  std::vector<Transformation> maps;
  /// A shortlex-least word over generator indices evaluating to element i.
  std::vector<std::vector<std::size_t>> words;
};

/// Closure of the generators and the identity under composition. Elements
/// are listed in breadth-first order from the identity (element 0), so
/// `words` are shortlex minimal. Names are the image lists, e.g. "0210".
TransformationClosure transformation_closure(std::size_t point_count,
                                             std::span<const Transformation> generators);

FiniteMonoid transformation_monoid(std::size_t point_count,
                                   std::span<const Transformation> generators);

}  // namespace monoidlab
