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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/semigroup.hpp"

namespace monoidlab {

/// {0, ..., k-1} with i + j truncated at k-1; identity 0.
FiniteMonoid gowers(std::size_t k);

/// Right-zero semigroup on the given points: x * y = y.
FiniteSemigroup carlson(const std::vector<std::string>& points);

/// carlson(points) with a fresh identity.
FiniteMonoid carlson1(const std::vector<std::string>& points);

/// Cyclic group of order n, elements 1, g, g^2, ..., g^(n-1).
FiniteMonoid cyclic(std::size_t n);

/// Maps f: {0..k-1} -> {0..k-1} with f(0) = 0 whose consecutive values
/// differ by 0 or 1, under ordinary composition (f*g)(x) = f(g(x)). Each
/// element is named by its value list, e.g. "0112".
FiniteMonoid i_monoid(std::size_t k);

/// Six-element monoid {1, 0, a, b, g, h}; the syntactic monoid of
/// {g,h}*h + {g,h}*a{g,h}*g + A*aA*aA* over A = {a, g, h}.
FiniteMonoid table1();

/// Five-element monoid {1, a, b, c, d} whose nontrivial right ideals
/// {a, b} and {c, d} are incomparable.
FiniteMonoid table2();

FiniteMonoid trivial_monoid();

/// Named families: gowers K, carlson1 P1,P2,.. (or a count), cyclic N,
/// i_monoid K, table1, table2, trivial. carlson is a semigroup and is
/// rejected here with BadParams unless it has a single point.
FiniteMonoid family(std::string_view name, std::span<const std::string> params);

/// Like family(), but also accepts "carlson".
FiniteSemigroup semigroup_family(std::string_view name, std::span<const std::string> params);

std::vector<std::string> family_names();

}  // namespace monoidlab
