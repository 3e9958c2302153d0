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
#include <string_view>
#include <vector>

#include "monoidlab/element_set.hpp"
#include "monoidlab/semigroup.hpp"

namespace monoidlab {

enum class GreenRelation { R, L, J, H, D };

std::string_view to_string(GreenRelation relation) noexcept;

/// Classes are sorted internally and listed by their least element.
struct Partition {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;

  bool related(Element a, Element b) const { return class_of[a] == class_of[b]; }
  const std::vector<Element>& class_containing(Element a) const { return classes[class_of[a]]; }
  bool is_trivial() const { return classes.size() == class_of.size(); }

  /// Groups elements by equal keys (any equality-comparable per-element key).
  template <typename Key>
  static Partition from_keys(const std::vector<Key>& keys);

  bool operator==(const Partition&) const = default;
};

struct PrincipalIdeals {
  ElementSet right;      // aM
  ElementSet left;       // Ma
  ElementSet two_sided;  // MaM
};

PrincipalIdeals principal_ideals(const FiniteMonoid& m, Element a);

/// All Green's relations and quasi-orders of one monoid. A quasi-order is
/// stored row-wise: leq_r[a] is the set of b with a <=_R b, i.e. aM ⊆ bM.
struct GreenData {
  std::vector<ElementSet> right_ideals;
  std::vector<ElementSet> left_ideals;
  std::vector<ElementSet> two_sided_ideals;

  Partition r;
  Partition l;
  Partition j;
  Partition h;
  Partition d;

  std::vector<ElementSet> leq_r;
  std::vector<ElementSet> leq_l;
  std::vector<ElementSet> leq_j;
  std::vector<ElementSet> leq_h;

  const Partition& classes(GreenRelation relation) const;
  /// D has no separate quasi-order; it coincides with J here.
  bool leq(GreenRelation relation, Element a, Element b) const;
};

/// Computes every relation by enumeration. D is the join of R and L
/// (union-find over R and L edges) and is checked against J; a mismatch
/// throws DJMismatch.
GreenData green_classes(const FiniteMonoid& m);

enum class IdealKind { X, XR };

/// X(M) = {aM}, or X_R(M) = {aM : the R-class of a has >= 2 elements}.
/// Members are deduplicated and listed by size, then by element lists.
struct IdealFamily {
  IdealKind kind;
  std::vector<ElementSet> members;
  bool linear;
};

IdealFamily x_family(const FiniteMonoid& m);
IdealFamily x_family(const GreenData& green);
IdealFamily x_r_family(const FiniteMonoid& m);
IdealFamily x_r_family(const GreenData& green);

/// True iff every two members are comparable under inclusion.
bool is_chain(std::span<const ElementSet> family);

template <typename Key>
Partition Partition::from_keys(const std::vector<Key>& keys) {
  Partition p;
  p.class_of.assign(keys.size(), 0);
  std::vector<Element> representative;
  for (Element a = 0; a < keys.size(); ++a) {
    std::size_t found = representative.size();
    for (std::size_t c = 0; c < representative.size(); ++c) {
      if (keys[representative[c]] == keys[a]) {
        found = c;
        break;
      }
    }
    if (found == representative.size()) {
      representative.push_back(a);
      p.classes.emplace_back();
    }
    p.classes[found].push_back(a);
    p.class_of[a] = found;
  }
  return p;
}

}  // namespace monoidlab
