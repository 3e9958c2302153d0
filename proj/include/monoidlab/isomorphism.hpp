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

#include <optional>
#include <vector>

#include "monoidlab/semigroup.hpp"

namespace monoidlab {

/// map[x] is the image of source element x in the target.
struct Isomorphism {
  std::vector<Element> map;

  Element operator()(Element x) const { return map.at(x); }
  Isomorphism inverse() const;
  bool operator==(const Isomorphism&) const = default;
};

/// True iff `map` is a bijection sending identity to identity and
/// respecting products.
bool is_isomorphism(const FiniteMonoid& source, const FiniteMonoid& target,
                    const std::vector<Element>& map);

/// Lexicographically first isomorphism (in source element order), or
/// nullopt. Candidates are filtered by per-element invariants (idempotency,
/// index and period, sizes of the principal ideals and Green classes).
std::optional<Isomorphism> find_isomorphism(const FiniteMonoid& source,
                                            const FiniteMonoid& target);

}  // namespace monoidlab
