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

#include "monoidlab/mon_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "monoidlab/text.hpp"

namespace monoidlab {

namespace {

Error parse_error(std::size_t line, const std::string& message) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message, {}, line);
}

}  // namespace

MonFile parse_mon(std::string_view text) {
  const auto lines = text::content_lines(text);
  std::optional<std::vector<std::string>> names;
  std::optional<std::string> identity;
  std::size_t i = 0;
  bool saw_table = false;
  for (; i < lines.size(); ++i) {
    std::string_view rest;
    if (text::take_key(lines[i].content, "elements", rest)) {
      if (names) throw parse_error(lines[i].number, "duplicate 'elements:' line");
      names = text::split_whitespace(rest);
      if (names->empty()) throw parse_error(lines[i].number, "no elements listed");
    } else if (text::take_key(lines[i].content, "identity", rest)) {
      if (identity) throw parse_error(lines[i].number, "duplicate 'identity:' line");
      auto tokens = text::split_whitespace(rest);
      if (tokens.size() != 1) throw parse_error(lines[i].number, "identity takes one token");
      identity = tokens[0];
    } else if (text::take_key(lines[i].content, "table", rest)) {
      if (!rest.empty()) throw parse_error(lines[i].number, "'table:' must be alone on its line");
      saw_table = true;
      ++i;
      break;
    } else {
      throw parse_error(lines[i].number, "unexpected line '" + std::string(lines[i].content) + "'");
    }
  }
  if (!names) throw parse_error(lines.empty() ? 1 : lines.back().number, "missing 'elements:'");
  if (!saw_table) throw parse_error(lines.empty() ? 1 : lines.back().number, "missing 'table:'");

  std::vector<std::vector<std::string>> rows;
  for (; i < lines.size(); ++i) {
    auto row = text::split_whitespace(lines[i].content);
    if (row.size() != names->size()) {
      throw parse_error(lines[i].number, "expected " + std::to_string(names->size()) +
                                             " entries, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != names->size()) {
    throw parse_error(lines.empty() ? 1 : lines.back().number,
                      "expected " + std::to_string(names->size()) + " table rows, found " +
                          std::to_string(rows.size()));
  }
  auto semigroup = build_semigroup(*names, rows);
  std::optional<Element> one;
  if (identity) one = semigroup.element(*identity);
  return {std::move(semigroup), one};
}

FiniteMonoid parse_monoid(std::string_view text) {
  auto file = parse_mon(text);
  if (!file.identity) throw Error(ErrorKind::ParseError, "missing 'identity:' line");
  return FiniteMonoid(std::move(file.semigroup), *file.identity);
}

std::string format_mon(const FiniteSemigroup& semigroup, std::optional<Element> identity) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& name : semigroup.names()) width = std::max(width, name.size());
  out << "elements:";
  for (const auto& name : semigroup.names()) out << ' ' << name;
  out << '\n';
  if (identity) out << "identity: " << semigroup.name(*identity) << '\n';
  out << "table:\n";
  for (Element a : semigroup.elements()) {
    for (Element b : semigroup.elements()) {
      const auto& name = semigroup.name(semigroup.product(a, b));
      if (b > 0) out << ' ';
      out << name;
      if (b + 1 < semigroup.size()) out << std::string(width - name.size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string format_mon(const FiniteMonoid& monoid) {
  return format_mon(monoid.semigroup(), monoid.identity());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << text;
}

FiniteMonoid read_monoid_file(const std::filesystem::path& path) {
  return parse_monoid(read_text_file(path));
}

FiniteSemigroup read_semigroup_file(const std::filesystem::path& path) {
  return parse_mon(read_text_file(path)).semigroup;
}

}  // namespace monoidlab
