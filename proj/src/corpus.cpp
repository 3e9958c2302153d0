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
#include "monoidlab/corpus.hpp"

#include <random>

#include "monoidlab/families.hpp"
#include "monoidlab/transformation.hpp"

namespace monoidlab {

std::vector<CorpusEntry> named_family_corpus(std::size_t max_parameter) {
  std::vector<CorpusEntry> out;
  out.push_back({"trivial", trivial_monoid()});
  out.push_back({"table1", table1()});
  out.push_back({"table2", table2()});
  for (std::size_t k = 1; k <= max_parameter; ++k) {
    const auto n = std::to_string(k);
    out.push_back({"gowers " + n, gowers(k)});
    out.push_back({"cyclic " + n, cyclic(k)});
    out.push_back({"i_monoid " + n, i_monoid(k)});
    std::vector<std::string> points;
    for (std::size_t i = 0; i < k; ++i) points.push_back("c" + std::to_string(i));
    out.push_back({"carlson1 " + n, carlson1(points)});
  }
  return out;
}

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  auto out = named_family_corpus(options.max_parameter);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> point_count(1, options.max_points);
  std::uniform_int_distribution<std::size_t> generator_count(1, options.max_generators);
  for (std::size_t i = 0; i < options.random_count; ++i) {
    const auto n = point_count(rng);
    const auto k = generator_count(rng);
    std::uniform_int_distribution<std::uint32_t> image(0, static_cast<std::uint32_t>(n - 1));
    std::vector<Transformation> generators(k, Transformation(n));
    std::string name = "random " + std::to_string(i) + " [";
    for (std::size_t g = 0; g < k; ++g) {
      if (g > 0) name += ' ';
      for (auto& x : generators[g]) {
        x = image(rng);
        name += std::to_string(x);
      }
    }
    name += ']';
    out.push_back({std::move(name), transformation_monoid(n, generators)});
  }
  return out;
}

}  // namespace monoidlab
