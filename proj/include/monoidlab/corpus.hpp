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
#include <string>
#include <vector>

#include "monoidlab/semigroup.hpp"

namespace monoidlab {

struct CorpusEntry {
  std::string name;
  FiniteMonoid monoid;
};

struct CorpusOptions {
  std::uint64_t seed = 0;
  std::size_t random_count = 200;
  std::size_t max_points = 4;
  std::size_t max_generators = 3;
  std::size_t max_parameter = 5;
};

/// Every named family with parameters up to max_parameter, then
/// random_count transformation monoids on 1..max_points points with
/// 1..max_generators uniformly random generators drawn from a seeded
/// mt19937_64.
std::vector<CorpusEntry> build_corpus(const CorpusOptions& options = {});

std::vector<CorpusEntry> named_family_corpus(std::size_t max_parameter = 5);

}  // namespace monoidlab
