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

#include "monoidlab/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace monoidlab {

namespace {

std::size_t parse_count(std::string_view family, std::span<const std::string> params,
                        std::size_t minimum) {
  if (params.size() != 1) {
    throw Error(ErrorKind::BadParams, std::string(family) + " takes exactly one integer");
  }
  std::size_t value = 0;
  const auto& text = params[0];
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < minimum) {
    throw Error(ErrorKind::BadParams, std::string(family) + " expects an integer >= " +
                                          std::to_string(minimum) + ", got '" + text + "'");
  }
  return value;
}

bool is_number(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    out.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

// "p,q" | "p" "q" | "2" (generated names c0, c1).
std::vector<std::string> parse_points(std::string_view family,
                                      std::span<const std::string> params) {
  std::vector<std::string> points;
  if (params.size() == 1 && is_number(params[0])) {
    const auto n = parse_count(family, params, 1);
    for (std::size_t i = 0; i < n; ++i) points.push_back("c" + std::to_string(i));
    return points;
  }
  for (const auto& p : params) {
    for (auto& token : split_commas(p)) points.push_back(std::move(token));
  }
  if (points.empty()) throw Error(ErrorKind::BadParams, std::string(family) + " needs points");
  for (const auto& p : points) {
    if (p.empty()) throw Error(ErrorKind::BadParams, "empty point name");
  }
  return points;
}

std::string value_list_name(const std::vector<std::uint32_t>& values) {
  std::string name;
  const bool digits = values.size() <= 10;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!digits && i > 0) name += ',';
    name += std::to_string(values[i]);
  }
  return name;
}

}  // namespace

FiniteMonoid gowers(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::BadParams, "gowers needs k >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<Element>(std::min(i + j, k - 1));
  }
  return FiniteMonoid(FiniteSemigroup(trusted, std::move(names), std::move(table)), 0);
}

FiniteSemigroup carlson(const std::vector<std::string>& points) {
  const auto n = points.size();
  if (n == 0) throw Error(ErrorKind::BadParams, "carlson needs at least one point");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(j);
  }
  return FiniteSemigroup(trusted, points, std::move(table));
}

FiniteMonoid carlson1(const std::vector<std::string>& points) {
  return adjoin_identity(carlson(points));
}

FiniteMonoid cyclic(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "cyclic needs n >= 1");
  std::vector<std::string> names{"1"};
  if (n > 1) names.emplace_back("g");
  for (std::size_t i = 2; i < n; ++i) names.push_back("g^" + std::to_string(i));
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteMonoid(FiniteSemigroup(trusted, std::move(names), std::move(table)), 0);
}

FiniteMonoid i_monoid(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::BadParams, "i_monoid needs k >= 1");
  if (k > 20) throw Error(ErrorKind::TooLarge, "i_monoid(k) has 2^(k-1) elements; k <= 20");
  using Map = std::vector<std::uint32_t>;
  std::vector<Map> maps;
  const std::size_t count = std::size_t{1} << (k - 1);
  for (std::size_t bits = 0; bits < count; ++bits) {
    Map f(k, 0);
    // Bit (k-2-i) of `bits` is the increment f(i+1) - f(i); lexicographic
    // order of value lists.
    for (std::size_t i = 0; i + 1 < k; ++i) {
      f[i + 1] = f[i] + static_cast<std::uint32_t>((bits >> (k - 2 - i)) & 1U);
    }
    maps.push_back(std::move(f));
  }
  std::map<Map, Element> index;
  std::vector<std::string> names;
  for (Element i = 0; i < maps.size(); ++i) {
    index.emplace(maps[i], i);
    names.push_back(value_list_name(maps[i]));
  }
  std::vector<Element> table(count * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      Map composed(k);
      for (std::size_t x = 0; x < k; ++x) composed[x] = maps[a][maps[b][x]];
      table[a * count + b] = index.at(composed);
    }
  }
  Map id(k);
  for (std::size_t x = 0; x < k; ++x) id[x] = static_cast<std::uint32_t>(x);
  return FiniteMonoid(FiniteSemigroup(trusted, std::move(names), std::move(table)), index.at(id));
}

FiniteMonoid table1() {
  return build_monoid({"1", "0", "a", "b", "g", "h"}, "1",
                      {
                          {"1", "0", "a", "b", "g", "h"},
                          {"0", "0", "0", "0", "0", "0"},
                          {"a", "0", "0", "0", "b", "a"},
                          {"b", "0", "0", "0", "b", "a"},
                          {"g", "0", "a", "b", "g", "h"},
                          {"h", "0", "a", "b", "g", "h"},
                      });
}

FiniteMonoid table2() {
  return build_monoid({"1", "a", "b", "c", "d"}, "1",
                      {
                          {"1", "a", "b", "c", "d"},
                          {"a", "a", "b", "a", "b"},
                          {"b", "a", "b", "a", "b"},
                          {"c", "c", "d", "c", "d"},
                          {"d", "c", "d", "c", "d"},
                      });
}

FiniteMonoid trivial_monoid() {
  return FiniteMonoid(FiniteSemigroup({"1"}, {0}), 0);
}

FiniteMonoid family(std::string_view name, std::span<const std::string> params) {
  auto no_params = [&] {
    if (!params.empty()) throw Error(ErrorKind::BadParams, std::string(name) + " takes no parameters");
  };
  if (name == "gowers") return gowers(parse_count(name, params, 1));
  if (name == "cyclic") return cyclic(parse_count(name, params, 1));
  if (name == "i_monoid") return i_monoid(parse_count(name, params, 1));
  if (name == "carlson1") return carlson1(parse_points(name, params));
  if (name == "carlson") {
    auto points = parse_points(name, params);
    if (points.size() != 1) {
      throw Error(ErrorKind::BadParams,
                  "carlson on more than one point has no identity; use carlson1");
    }
    return FiniteMonoid(carlson(points), 0);
  }
  if (name == "table1") {
    no_params();
    return table1();
  }
  if (name == "table2") {
    no_params();
    return table2();
  }
  if (name == "trivial") {
    no_params();
    return trivial_monoid();
  }
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

FiniteSemigroup semigroup_family(std::string_view name, std::span<const std::string> params) {
  if (name == "carlson") return carlson(parse_points(name, params));
  return family(name, params).semigroup();
}

std::vector<std::string> family_names() {
  return {"gowers", "carlson", "carlson1", "cyclic", "i_monoid", "table1", "table2", "trivial"};
}

}  // namespace monoidlab
