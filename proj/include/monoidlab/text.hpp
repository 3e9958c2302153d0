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

// Small helpers shared by the line-oriented file formats.

#include <string>
#include <string_view>
#include <vector>

namespace monoidlab::text {

std::string_view trim(std::string_view s);

/// Drops everything from the first '#'.
std::string_view strip_comment(std::string_view line);

std::vector<std::string> split_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char separator);

/// Non-empty, comment-stripped, trimmed lines with their 1-based numbers.
struct Line {
  std::size_t number;
  std::string_view content;
};
std::vector<Line> content_lines(std::string_view text);

/// If `line` starts with "<key>:", returns the trimmed remainder.
bool take_key(std::string_view line, std::string_view key, std::string_view& rest);

}  // namespace monoidlab::text
