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

// The .mon text format:
//
//   # comment
//   elements: e1 e2 ... en
//   identity: ek            (omitted for plain semigroups)
//   table:
//   <n rows of n whitespace-separated tokens; row i lists e_i * e_j>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "monoidlab/semigroup.hpp"

namespace monoidlab {

struct MonFile {
  FiniteSemigroup semigroup;
  std::optional<Element> identity;
};

/// Throws ParseError (position = 1-based line) on malformed input, and the
/// build_semigroup errors on invalid tables.
MonFile parse_mon(std::string_view text);

FiniteMonoid parse_monoid(std::string_view text);

std::string format_mon(const FiniteSemigroup& semigroup,
                       std::optional<Element> identity = std::nullopt);
std::string format_mon(const FiniteMonoid& monoid);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

FiniteMonoid read_monoid_file(const std::filesystem::path& path);
FiniteSemigroup read_semigroup_file(const std::filesystem::path& path);

}  // namespace monoidlab
