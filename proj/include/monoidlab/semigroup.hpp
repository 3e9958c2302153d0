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

#include <array>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/error.hpp"

namespace monoidlab {

/// Tag for constructors that skip the exhaustive associativity scan. Only
/// constructions that are associative by design (closures of functions
/// under composition, products of validated operands) use it.
struct trusted_t {
  explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

/// A finite semigroup given by its Cayley table. Entry (i, j) of the
/// row-major table is the index of e_i * e_j. Immutable once built.
class FiniteSemigroup {
 public:
  /// Validates that names are distinct and nonempty, the table is total
  /// and the operation is associative.
  FiniteSemigroup(std::vector<std::string> names, std::vector<Element> table);
  FiniteSemigroup(trusted_t, std::vector<std::string> names, std::vector<Element> table);

  std::size_t size() const noexcept { return names_.size(); }

  Element product(Element a, Element b) const noexcept { return table_[a * size() + b]; }

  /// a^k for k >= 1.
  Element power(Element a, std::size_t k) const noexcept;

  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + a * size(), size()};
  }
  const std::vector<Element>& table() const noexcept { return table_; }

  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Element> find(std::string_view token) const;
  /// Like find, but throws UnknownToken.
  Element element(std::string_view token) const;

  auto elements() const noexcept {
    return std::views::iota(Element{0}, static_cast<Element>(size()));
  }

  /// First triple (a, b, c), in lexicographic index order, with
  /// (ab)c != a(bc).
  std::optional<std::array<Element, 3>> associativity_failure() const;

  bool is_idempotent(Element a) const noexcept { return product(a, a) == a; }

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  void check_shape() const;

  std::vector<std::string> names_;
  std::vector<Element> table_;
};

/// A finite semigroup together with a two-sided identity.
class FiniteMonoid {
 public:
  /// Throws NotIdentity with the first element for which the law fails.
  FiniteMonoid(FiniteSemigroup semigroup, Element identity);

  const FiniteSemigroup& semigroup() const noexcept { return semigroup_; }
  Element identity() const noexcept { return identity_; }

  std::size_t size() const noexcept { return semigroup_.size(); }
  Element product(Element a, Element b) const noexcept { return semigroup_.product(a, b); }
  Element power(Element a, std::size_t k) const noexcept { return semigroup_.power(a, k); }
  std::span<const Element> row(Element a) const noexcept { return semigroup_.row(a); }
  const std::string& name(Element a) const { return semigroup_.name(a); }
  const std::vector<std::string>& names() const noexcept { return semigroup_.names(); }
  std::optional<Element> find(std::string_view token) const { return semigroup_.find(token); }
  Element element(std::string_view token) const { return semigroup_.element(token); }
  auto elements() const noexcept { return semigroup_.elements(); }
  bool is_idempotent(Element a) const noexcept { return semigroup_.is_idempotent(a); }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  FiniteSemigroup semigroup_;
  Element identity_;
};

/// Builds and validates a semigroup from element tokens and a table of
/// tokens (row i lists e_i * e_j).
FiniteSemigroup build_semigroup(const std::vector<std::string>& names,
                                const std::vector<std::vector<std::string>>& rows);

FiniteMonoid build_monoid(const std::vector<std::string>& names, std::string_view identity,
                          const std::vector<std::vector<std::string>>& rows);

/// Pairs with coordinatewise multiplication; identity (1, 1). Elements
/// are ordered lexicographically and named "(x,y)".
FiniteMonoid direct_product(const FiniteMonoid& left, const FiniteMonoid& right);

/// Disjoint union where an element of an earlier part absorbs any element
/// of a later part from either side. Names are kept when they are unique
/// across parts, otherwise prefixed by "<part>.".
FiniteSemigroup ordered_union(std::span<const FiniteSemigroup> parts);

/// Adds a fresh identity, named "1" (primed until unique).
FiniteMonoid adjoin_identity(const FiniteSemigroup& semigroup);

}  // namespace monoidlab
