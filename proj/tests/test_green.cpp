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
#include <catch_amalgamated.hpp>

#include <set>

#include "monoidlab/corpus.hpp"
#include "monoidlab/families.hpp"
#include "monoidlab/green.hpp"
#include "oracles.hpp"

using namespace monoidlab;

namespace {

std::set<Element> two_sided(const FiniteMonoid& m, Element a) {
  std::set<Element> out;
  for (Element x : oracle::left_ideal(m, a))
    for (Element y : m.elements()) out.insert(m.product(x, y));
  return out;
}

std::vector<Element> named(const FiniteMonoid& m, std::initializer_list<const char*> names) {
  std::vector<Element> out;
  for (const char* n : names) out.push_back(m.element(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("green relations match the definitions on the corpus") {
  CorpusOptions options;
  options.random_count = 60;
  for (const auto& entry : build_corpus(options)) {
    const auto& m = entry.monoid;
    INFO(entry.name);
    const auto g = green_classes(m);
    std::vector<std::set<Element>> right, left, both;
    for (Element a : m.elements()) {
      right.push_back(oracle::right_ideal(m, a));
      left.push_back(oracle::left_ideal(m, a));
      both.push_back(two_sided(m, a));
    }
    for (Element a : m.elements()) {
      for (Element b : m.elements()) {
        const bool r = right[a] == right[b];
        const bool l = left[a] == left[b];
        REQUIRE(g.r.related(a, b) == r);
        REQUIRE(g.l.related(a, b) == l);
        REQUIRE(g.h.related(a, b) == (r && l));
        REQUIRE(g.j.related(a, b) == (both[a] == both[b]));
        REQUIRE(g.d.related(a, b) == g.j.related(a, b));
        REQUIRE(g.leq(GreenRelation::R, a, b) == oracle::included(right[a], right[b]));
        REQUIRE(g.leq(GreenRelation::L, a, b) == oracle::included(left[a], left[b]));
      }
    }
    REQUIRE(x_family(g).linear == oracle::x_linear(m));
    REQUIRE(x_r_family(g).linear == oracle::xr_linear(m));
    REQUIRE(x_family(g).members.size() == oracle::x_family(m, false).size());
    REQUIRE(x_r_family(g).members.size() == oracle::x_family(m, true).size());
  }
}

TEST_CASE("six-element table: classes and ideals") {
  const auto m = table1();
  const auto g = green_classes(m);
  CHECK(g.r.classes.size() == 4);
  CHECK(g.r.class_containing(m.element("a")) == named(m, {"a", "b"}));
  CHECK(g.r.class_containing(m.element("g")) == named(m, {"g", "h"}));
  CHECK(g.l.is_trivial());
  CHECK(g.h.is_trivial());
  const auto x = x_family(g);
  CHECK(x.linear);
  REQUIRE(x.members.size() == 4);
  CHECK(members(x.members[0]) == named(m, {"0"}));
  CHECK(members(x.members[1]) == named(m, {"0", "a", "b"}));
  const auto xr = x_r_family(g);
  CHECK(xr.linear);
  CHECK(xr.members.size() == 2);
}

TEST_CASE("five-element table: incomparable right ideals") {
  const auto m = table2();
  const auto xr = x_r_family(m);
  CHECK_FALSE(xr.linear);
  REQUIRE(xr.members.size() == 2);
  CHECK(members(xr.members[0]) == named(m, {"a", "b"}));
  CHECK(members(xr.members[1]) == named(m, {"c", "d"}));
  CHECK_FALSE(is_chain(xr.members));
}

TEST_CASE("principal ideals") {
  const auto m = gowers(4);
  const auto p = principal_ideals(m, 2);
  CHECK(members(p.right) == std::vector<Element>{2, 3});
  CHECK(members(p.left) == std::vector<Element>{2, 3});
  CHECK(members(p.two_sided) == std::vector<Element>{2, 3});
}

TEST_CASE("groups have one class") {
  const auto g = green_classes(cyclic(5));
  for (auto rel : {GreenRelation::R, GreenRelation::L, GreenRelation::J, GreenRelation::H,
                   GreenRelation::D})
    CHECK(g.classes(rel).classes.size() == 1);
  CHECK(to_string(GreenRelation::H) == "H");
}
