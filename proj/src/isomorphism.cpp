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

#include "monoidlab/isomorphism.hpp"

#include <algorithm>
#include <array>

#include "monoidlab/element_set.hpp"

namespace monoidlab {

namespace {

using Signature = std::array<std::size_t, 9>;

std::vector<Signature> signatures(const FiniteMonoid& m) {
  const auto n = m.size();
  std::vector<ElementSet> right(n, ElementSet(n));
  std::vector<ElementSet> left(n, ElementSet(n));
  for (Element a : m.elements()) {
    for (Element x : m.elements()) {
      right[a].set(m.product(a, x));
      left[a].set(m.product(x, a));
    }
  }
  std::vector<Signature> out(n);
  for (Element a : m.elements()) {
    ElementSet two_sided(n);
    for (auto x = left[a].find_first(); x != ElementSet::npos; x = left[a].find_next(x)) {
      two_sided |= right[x];
    }
    std::size_t r_class = 0;
    std::size_t l_class = 0;
    for (Element b : m.elements()) {
      r_class += right[b] == right[a];
      l_class += left[b] == left[a];
    }
    // Index and period of the cyclic subsemigroup generated by a.
    std::vector<Element> powers{a};
    std::size_t index = 0;
    std::size_t period = 0;
    while (true) {
      const Element next = m.product(powers.back(), a);
      auto it = std::find(powers.begin(), powers.end(), next);
      if (it != powers.end()) {
        index = static_cast<std::size_t>(it - powers.begin()) + 1;
        period = powers.size() + 1 - index;
        break;
      }
      powers.push_back(next);
    }
    out[a] = {a == m.identity(),       m.is_idempotent(a), index,   period,
              right[a].count(),        left[a].count(),    two_sided.count(),
              r_class,                 l_class};
  }
  return out;
}

class Search {
 public:
  Search(const FiniteMonoid& source, const FiniteMonoid& target)
      : source_(source),
        target_(target),
        source_sig_(signatures(source)),
        target_sig_(signatures(target)),
        map_(source.size(), kUnset),
        used_(target.size(), false) {}

  std::optional<Isomorphism> run() {
    if (source_.size() != target_.size()) return std::nullopt;
    auto a = source_sig_;
    auto b = target_sig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return Isomorphism{map_};
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool consistent(Element i) const {
    for (Element j = 0; j <= i; ++j) {
      for (Element k = 0; k <= i; ++k) {
        const Element p = source_.product(j, k);
        const Element image = target_.product(map_[j], map_[k]);
        if (p <= i) {
          if (map_[p] != image) return false;
        } else if (used_[image]) {
          // The product is not yet placed, but its forced image is taken.
          return false;
        }
      }
    }
    return true;
  }

  bool extend(Element i) {
    if (i == source_.size()) return true;
    for (Element t = 0; t < target_.size(); ++t) {
      if (used_[t] || target_sig_[t] != source_sig_[i]) continue;
      map_[i] = t;
      used_[t] = true;
      if (consistent(i) && extend(i + 1)) return true;
      used_[t] = false;
      map_[i] = kUnset;
    }
    return false;
  }

  const FiniteMonoid& source_;
  const FiniteMonoid& target_;
  std::vector<Signature> source_sig_;
  std::vector<Signature> target_sig_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace

Isomorphism Isomorphism::inverse() const {
  std::vector<Element> out(map.size());
  for (Element x = 0; x < map.size(); ++x) out[map[x]] = x;
  return {std::move(out)};
}

bool is_isomorphism(const FiniteMonoid& source, const FiniteMonoid& target,
                    const std::vector<Element>& map) {
  if (source.size() != target.size() || map.size() != source.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (Element y : map) {
    if (y >= target.size() || hit[y]) return false;
    hit[y] = true;
  }
  if (map[source.identity()] != target.identity()) return false;
  for (Element x : source.elements()) {
    for (Element y : source.elements()) {
      if (map[source.product(x, y)] != target.product(map[x], map[y])) return false;
    }
  }
  return true;
}

std::optional<Isomorphism> find_isomorphism(const FiniteMonoid& source,
                                            const FiniteMonoid& target) {
  return Search(source, target).run();
}

}  // namespace monoidlab
