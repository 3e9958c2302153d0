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

#include "monoidlab/transformation.hpp"

#include <map>

namespace monoidlab {

namespace {

std::string image_name(const Transformation& t) {
  std::string name;
  const bool digits = t.size() <= 10;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!digits && i > 0) name += ',';
    name += std::to_string(t[i]);
  }
  return name;
}

}  // namespace

Transformation compose(const Transformation& first, const Transformation& second) {
  Transformation out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
  return out;
}

TransformationClosure transformation_closure(std::size_t point_count,
                                             std::span<const Transformation> generators) {
  if (point_count == 0) throw Error(ErrorKind::BadParams, "need at least one point");
  for (const auto& g : generators) {
    if (g.size() != point_count) {
      throw Error(ErrorKind::BadParams, "generator has " + std::to_string(g.size()) +
                                            " images, expected " + std::to_string(point_count));
    }
    for (auto image : g) {
      if (image >= point_count) throw Error(ErrorKind::BadParams, "generator image out of range");
    }
  }

  Transformation identity(point_count);
  for (std::size_t x = 0; x < point_count; ++x) identity[x] = static_cast<std::uint32_t>(x);

  std::vector<Transformation> maps{identity};
  std::vector<std::vector<std::size_t>> words{{}};
  std::map<Transformation, Element> index{{identity, 0}};
  for (std::size_t next = 0; next < maps.size(); ++next) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      auto image = compose(maps[next], generators[g]);
      if (index.contains(image)) continue;
      index.emplace(image, static_cast<Element>(maps.size()));
      auto word = words[next];
      word.push_back(g);
      maps.push_back(std::move(image));
      words.push_back(std::move(word));
    }
  }

  const auto n = maps.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(maps[a], maps[b]));
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& m : maps) names.push_back(image_name(m));

  FiniteMonoid monoid(FiniteSemigroup(trusted, std::move(names), std::move(table)), 0);
  return {std::move(monoid), std::move(maps), std::move(words)};
}

FiniteMonoid transformation_monoid(std::size_t point_count,
                                   std::span<const Transformation> generators) {
  return transformation_closure(point_count, generators).monoid;
}

}  // namespace monoidlab
