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

#include "monoidlab/classify.hpp"
#include "monoidlab/corpus.hpp"
#include "monoidlab/families.hpp"
#include "oracles.hpp"

using namespace monoidlab;

namespace {

// Pairs of distinct R-related a, b with a^2 = a and ax = bx for x != 1.
bool class_condition(const FiniteMonoid& m) {
  for (Element a : m.elements()) {
    for (Element b : m.elements()) {
      if (a == b || !oracle::r_related(m, a, b)) continue;
      if (!m.is_idempotent(a)) return false;
      for (Element x : m.elements()) {
        if (x != m.identity() && m.product(a, x) != m.product(b, x)) return false;
      }
    }
  }
  return true;
}

// (G_k x C_A) with a fresh identity.
FiniteMonoid gowers_times_carlson_plus_one(std::size_t k, std::size_t points) {
  const auto n = k * points;
  std::vector<std::string> names;
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t p = 0; p < points; ++p) names.push_back(std::to_string(i) + "c" + std::to_string(p));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto i = std::min(x / points + y / points, k - 1);
      table[x * n + y] = static_cast<Element>(i * points + y % points);
    }
  return adjoin_identity(FiniteSemigroup(names, table));
}

}  // namespace

TEST_CASE("classification agrees with direct checks on the corpus") {
  for (const auto& entry : build_corpus()) {
    const auto& m = entry.monoid;
    INFO(entry.name);
    const auto r = classify(m);
    const bool aperiodic = oracle::aperiodic(m);
    REQUIRE(r.aperiodic == aperiodic);
    for (auto method : {AperiodicityMethod::Power, AperiodicityMethod::Cancel,
                        AperiodicityMethod::RRigid, AperiodicityMethod::HTrivial,
                        AperiodicityMethod::NoSubgroup}) {
      REQUIRE(is_aperiodic(m, method).aperiodic == aperiodic);
    }
    REQUIRE(r.x_linear == oracle::x_linear(m));
    REQUIRE(r.xr_linear == oracle::xr_linear(m));
    REQUIRE(r.l_trivial == oracle::l_trivial(m));
    REQUIRE(r.almost_r_trivial == oracle::almost_r_trivial(m));
    REQUIRE(r.idempotent_class_condition == class_condition(m));
    REQUIRE(r.ramsey == (aperiodic && oracle::x_linear(m)));
    for (const auto& [flag, witness] : r.witnesses) REQUIRE_FALSE(witness.empty());
  }
}

TEST_CASE("six-element table is Ramsey") {
  const auto r = classify(table1());
  CHECK(r.aperiodic);
  CHECK(r.x_linear);
  CHECK(r.ramsey);
  CHECK_FALSE(r.almost_r_trivial);
  CHECK(r.y_controllable == YControllability{YVerdict::Yes, "XR-linear"});
}

TEST_CASE("five-element table is controllable but not Ramsey") {
  const auto m = table2();
  const auto r = classify(m);
  CHECK(r.aperiodic);
  CHECK_FALSE(r.xr_linear);
  CHECK_FALSE(r.ramsey);
  CHECK(r.idempotent_class_condition);
  CHECK(r.y_controllable == YControllability{YVerdict::Yes, "Prop7.1"});
  const auto text = format_report(m, r);
  CHECK(text.find("y_controllable=Yes(Prop7.1)\n") != std::string::npos);
  CHECK(text.find("ramsey=false\n") != std::string::npos);
  CHECK(text.find("witness.xr_linear=") != std::string::npos);
  CHECK_THROWS_AS(check_linear_structure(m), Error);
}

TEST_CASE("i_monoid is Ramsey exactly up to three") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto r = classify(i_monoid(k));
    CHECK(r.ramsey == (k <= 3));
    CHECK(r.r_trivial);
  }
}

TEST_CASE("groups are not controllable") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto m = cyclic(n);
    const auto r = classify(m);
    CHECK_FALSE(r.ramsey);
    CHECK(r.y_controllable == YControllability{YVerdict::No, "not-aperiodic"});
    const auto power = is_aperiodic(m, AperiodicityMethod::Power);
    CHECK(power.witness == std::vector<Element>{m.element("g")});
  }
}

TEST_CASE("gowers times carlson") {
  const std::vector<std::string> points{"x", "y"};
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto m = direct_product(gowers(k), carlson1(points));
    const auto r = classify(m);
    CHECK(r.aperiodic);
    CHECK(r.xr_linear);
    CHECK_FALSE(r.almost_r_trivial);

    const auto tilde = gowers_times_carlson_plus_one(k, 2);
    const auto t = classify(tilde);
    CHECK(t.aperiodic);
    CHECK(t.x_linear);
    CHECK_FALSE(t.almost_r_trivial);
    const auto g = green_classes(tilde);
    for (const auto& cls : g.r.classes) {
      if (cls.front() != tilde.identity()) CHECK(cls.size() > 1);
    }
  }
}

TEST_CASE("linear structure checks pass when the ideals form a chain") {
  for (const auto& m : {table1(), gowers(4), i_monoid(3), trivial_monoid()}) {
    const auto checks = check_linear_structure(m);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) CHECK(c.passed);
  }
}

TEST_CASE("method names") {
  CHECK(parse_aperiodicity_method("r_rigid") == AperiodicityMethod::RRigid);
  CHECK(parse_aperiodicity_method("all") == AperiodicityMethod::All);
  CHECK_FALSE(parse_aperiodicity_method("bogus"));
  CHECK(to_string(YVerdict::Unknown) == "Unknown");
}
