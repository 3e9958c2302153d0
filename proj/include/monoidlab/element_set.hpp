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

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "monoidlab/error.hpp"

namespace monoidlab {

/// A subset of the elements of one finite semigroup.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline ElementSet make_set(std::size_t universe, std::initializer_list<Element> members) {
  ElementSet s(universe);
  for (Element e : members) s.set(e);
  return s;
}

inline ElementSet make_set(std::size_t universe, const std::vector<Element>& members) {
  ElementSet s(universe);
  for (Element e : members) s.set(e);
  return s;
}

inline std::vector<Element> members(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

/// Size first, then the member lists lexicographically. Used wherever a
/// family of sets must be listed in a stable order.
inline bool set_order_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return members(a) < members(b);
}

}  // namespace monoidlab
