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

#include "monoidlab/semigroup.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace monoidlab {

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> names, std::vector<Element> table)
    : names_(std::move(names)), table_(std::move(table)) {
  check_shape();
  if (auto bad = associativity_failure()) {
    auto [a, b, c] = *bad;
    throw Error(ErrorKind::NotAssociative,
                "(" + names_[a] + "*" + names_[b] + ")*" + names_[c] + " != " + names_[a] + "*(" +
                    names_[b] + "*" + names_[c] + ")",
                {a, b, c});
  }
}

FiniteSemigroup::FiniteSemigroup(trusted_t, std::vector<std::string> names,
                                 std::vector<Element> table)
    : names_(std::move(names)), table_(std::move(table)) {
  check_shape();
}

void FiniteSemigroup::check_shape() const {
  if (names_.empty()) throw Error(ErrorKind::BadParams, "a semigroup needs at least one element");
  std::set<std::string_view> seen;
  for (Element i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::BadParams, "empty element name");
    if (!seen.insert(names_[i]).second) {
      throw Error(ErrorKind::DuplicateElement, "element '" + names_[i] + "' listed twice", {i});
    }
  }
  const auto n = names_.size();
  if (table_.size() != n * n) {
    throw Error(ErrorKind::BadParams, "table must have " + std::to_string(n * n) + " entries");
  }
  for (Element e : table_) {
    if (e >= n) throw Error(ErrorKind::UnknownToken, "table entry out of range");
  }
}

Element FiniteSemigroup::power(Element a, std::size_t k) const noexcept {
  Element result = a;
  for (std::size_t i = 1; i < k; ++i) result = product(result, a);
  return result;
}

std::optional<Element> FiniteSemigroup::find(std::string_view token) const {
  auto it = std::find(names_.begin(), names_.end(), token);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Element FiniteSemigroup::element(std::string_view token) const {
  if (auto e = find(token)) return *e;
  throw Error(ErrorKind::UnknownToken, "unknown element '" + std::string(token) + "'");
}

std::optional<std::array<Element, 3>> FiniteSemigroup::associativity_failure() const {
  const auto n = static_cast<Element>(size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = product(a, b);
      const auto ab_row = row(ab);
      const auto b_row = row(b);
      for (Element c = 0; c < n; ++c) {
        if (ab_row[c] != product(a, b_row[c])) return std::array{a, b, c};
      }
    }
  }
  return std::nullopt;
}

FiniteMonoid::FiniteMonoid(FiniteSemigroup semigroup, Element identity)
    : semigroup_(std::move(semigroup)), identity_(identity) {
  if (identity_ >= semigroup_.size()) throw Error(ErrorKind::UnknownToken, "identity out of range");
  for (Element x : semigroup_.elements()) {
    if (semigroup_.product(identity_, x) != x || semigroup_.product(x, identity_) != x) {
      throw Error(ErrorKind::NotIdentity,
                  semigroup_.name(identity_) + " is not an identity (fails at " +
                      semigroup_.name(x) + ")",
                  {identity_, x});
    }
  }
}

FiniteSemigroup build_semigroup(const std::vector<std::string>& names,
                                const std::vector<std::vector<std::string>>& rows) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorKind::DuplicateElement, "element '" + names[i] + "' listed twice", {i});
    }
  }
  if (rows.size() != names.size()) {
    throw Error(ErrorKind::BadParams, "expected " + std::to_string(names.size()) + " table rows");
  }
  std::vector<Element> table;
  table.reserve(names.size() * names.size());
  for (const auto& row : rows) {
    if (row.size() != names.size()) {
      throw Error(ErrorKind::BadParams,
                  "expected " + std::to_string(names.size()) + " entries per table row");
    }
    for (const auto& token : row) {
      auto it = index.find(token);
      if (it == index.end()) {
        throw Error(ErrorKind::UnknownToken, "unknown table entry '" + token + "'");
      }
      table.push_back(it->second);
    }
  }
  return FiniteSemigroup(names, std::move(table));
}

FiniteMonoid build_monoid(const std::vector<std::string>& names, std::string_view identity,
                          const std::vector<std::vector<std::string>>& rows) {
  auto semigroup = build_semigroup(names, rows);
  const Element one = semigroup.element(identity);
  return FiniteMonoid(std::move(semigroup), one);
}

FiniteMonoid direct_product(const FiniteMonoid& left, const FiniteMonoid& right) {
  const auto n = left.size();
  const auto m = right.size();
  const auto size = n * m;
  std::vector<std::string> names;
  names.reserve(size);
  for (Element a : left.elements()) {
    for (Element b : right.elements()) {
      names.push_back("(" + left.name(a) + "," + right.name(b) + ")");
    }
  }
  std::vector<Element> table(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const Element a = left.product(static_cast<Element>(x / m), static_cast<Element>(y / m));
      const Element b = right.product(static_cast<Element>(x % m), static_cast<Element>(y % m));
      table[x * size + y] = static_cast<Element>(a * m + b);
    }
  }
  FiniteSemigroup product(trusted, std::move(names), std::move(table));
  return FiniteMonoid(std::move(product),
                      static_cast<Element>(left.identity() * m + right.identity()));
}

FiniteSemigroup ordered_union(std::span<const FiniteSemigroup> parts) {
  if (parts.empty()) throw Error(ErrorKind::BadParams, "ordered_union needs at least one part");
  std::vector<std::size_t> offset;
  std::vector<std::size_t> part_of;
  std::size_t total = 0;
  std::set<std::string> seen;
  bool clash = false;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    offset.push_back(total);
    total += parts[p].size();
    for (const auto& name : parts[p].names()) clash |= !seen.insert(name).second;
    part_of.insert(part_of.end(), parts[p].size(), p);
  }
  std::vector<std::string> names;
  names.reserve(total);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& name : parts[p].names()) {
      names.push_back(clash ? std::to_string(p) + "." + name : name);
    }
  }
  std::vector<Element> table(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      const auto px = part_of[x];
      const auto py = part_of[y];
      Element z;
      if (px == py) {
        z = static_cast<Element>(
            offset[px] + parts[px].product(static_cast<Element>(x - offset[px]),
                                           static_cast<Element>(y - offset[px])));
      } else {
        z = static_cast<Element>(px < py ? x : y);
      }
      table[x * total + y] = z;
    }
  }
  return FiniteSemigroup(trusted, std::move(names), std::move(table));
}

FiniteMonoid adjoin_identity(const FiniteSemigroup& semigroup) {
  const auto n = semigroup.size();
  std::string one = "1";
  while (semigroup.find(one)) one += "'";
  std::vector<std::string> names{one};
  names.insert(names.end(), semigroup.names().begin(), semigroup.names().end());
  std::vector<Element> table((n + 1) * (n + 1));
  for (Element x = 0; x <= n; ++x) {
    for (Element y = 0; y <= n; ++y) {
      Element z;
      if (x == 0) {
        z = y;
      } else if (y == 0) {
        z = x;
      } else {
        z = semigroup.product(x - 1, y - 1) + 1;
      }
      table[x * (n + 1) + y] = z;
    }
  }
  return FiniteMonoid(FiniteSemigroup(trusted, std::move(names), std::move(table)), 0);
}

}  // namespace monoidlab
