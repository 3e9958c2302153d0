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
#include "monoidlab/dynamics.hpp"
#include "monoidlab/families.hpp"
#include "monoidlab/green.hpp"
#include "monoidlab/mon_format.hpp"
#include "oracles.hpp"

using namespace monoidlab;

namespace {

void check_postcondition(const ActionSystem& system, Element u) {
  const SpaceView s(system);
  const auto& m = system.monoid();
  REQUIRE(s.product(u, u) == u);
  if (system.point_count() <= 60) REQUIRE(oracle::kernel(s).test(u));
  // A zero is the whole kernel.
  if (const auto* words = dynamic_cast<const TruncatedWordAction*>(&system)) {
    REQUIRE(u == words->absorber());
  }
  for (Element a : m.elements())
    for (Element b : m.elements())
      if (oracle::r_related(m, a, b)) REQUIRE(system.act(a, u) == system.act(b, u));
}

bool qualifies(const FiniteMonoid& m) { return oracle::aperiodic(m) && oracle::xr_linear(m); }

}  // namespace

TEST_CASE("kernels and idempotents") {
  const auto s = ordered_union(std::vector<FiniteSemigroup>{carlson({"p", "q"}), carlson({"r"})});
  struct View {
    const FiniteSemigroup* s;
    std::size_t size() const { return s->size(); }
    Element product(Element a, Element b) const { return s->product(a, b); }
  } view{&s};
  CHECK(idempotents(view).size() == 3);
  CHECK(kernel(view) == oracle::kernel(view));
  CHECK(members(kernel(view)) == std::vector<Element>{0, 1});
  CHECK(idem_leq(view, 0, 2));
  CHECK_FALSE(idem_leq(view, 2, 0));
  CHECK(minimal_below(view, 2) == 0);

  const auto g = gowers(3);
  struct MonoidView {
    const FiniteMonoid* m;
    std::size_t size() const { return m->size(); }
    Element product(Element a, Element b) const { return m->product(a, b); }
  } gv{&g};
  CHECK_THROWS_AS(minimal_below(gv, 1), Error);
  CHECK(members(kernel(gv)) == std::vector<Element>{2});
}

TEST_CASE("built-in actions obey the laws") {
  for (const auto& m : {table1(), table2(), gowers(3), i_monoid(3)}) {
    const RightZeroSelfAction rz(m);
    const TruncatedWordAction words(m, 2);
    const LeftMultiplicationAction left(m);
    CHECK_NOTHROW(check_action_laws(rz));
    CHECK_NOTHROW(check_endomorphisms(rz));
    CHECK_NOTHROW(check_action_laws(words));
    CHECK_NOTHROW(check_endomorphisms(words));
    CHECK_NOTHROW(check_action_laws(left));
    CHECK(words.point_count() == m.size() + m.size() * m.size() + 1);
  }
}

TEST_CASE("truncated words encode and concatenate") {
  const auto m = gowers(3);
  const TruncatedWordAction w(m, 3);
  const auto ab = w.encode({1, 2});
  CHECK(w.decode(ab) == std::vector<Element>{1, 2});
  CHECK(w.point_name(ab) == "1,2");
  CHECK(w.product(ab, w.encode({0})) == w.encode({1, 2, 0}));
  CHECK(w.product(ab, ab) == w.absorber());
  CHECK(w.point_name(w.absorber()) == "_");
  CHECK(w.act(1, ab) == w.encode({2, 2}));
  CHECK(w.space_generators().size() == 3);
  CHECK_THROWS_AS(TruncatedWordAction(m, 0), Error);
}

TEST_CASE("tabled actions are validated") {
  const auto m = gowers(2);
  const auto u = carlson({"p", "q"});
  // 1 sends every point to q.
  const TableActionSystem ok(m, u, {0, 1, 1, 1});
  CHECK(ok.act(1, 0) == 1);
  const auto text = format_act(ok);
  CHECK(text == "0 p -> p\n0 q -> q\n1 p -> q\n1 q -> q\n");
  CHECK(parse_act("monoid: m.mon\n" + text, m, u).table == std::vector<Element>{0, 1, 1, 1});
  CHECK_THROWS_AS(parse_act("0 p -> p\n", m, u), Error);
  // Swapping the points breaks (1+1).p = 1.(1.p).
  CHECK_THROWS_AS(TableActionSystem(m, u, {0, 1, 1, 0}), Error);
  // Swapping {0,1} under truncated addition is no endomorphism.
  CHECK_THROWS_AS(TableActionSystem(cyclic(2), gowers(2).semigroup(), {0, 1, 1, 0}), Error);
}

TEST_CASE("witness pairs on the six-element table") {
  const auto m = table1();
  const auto a = m.element("a"), b = m.element("b");
  const auto [g, h] = lemma_witnesses(m, a, b);
  CHECK(m.product(a, g) == b);
  CHECK(m.product(b, h) == a);
  CHECK(m.product(g, h) == h);
  CHECK(m.product(h, g) == g);
  CHECK_THROWS_AS(lemma_witnesses(m, a, m.element("g")), Error);
  CHECK_THROWS_AS(lemma_witnesses(cyclic(2), 0, 1), Error);
}

TEST_CASE("controlled idempotents and witnesses on the corpus") {
  std::size_t qualifying = 0;
  for (const auto& entry : build_corpus()) {
    const auto& m = entry.monoid;
    if (!qualifies(m)) continue;
    ++qualifying;
    INFO(entry.name);
    const RightZeroSelfAction rz(m);
    const TruncatedWordAction words(m, 3);
    for (const ActionSystem* system : {static_cast<const ActionSystem*>(&rz),
                                       static_cast<const ActionSystem*>(&words)}) {
      const auto c = find_controlled_idempotent(*system);
      check_postcondition(*system, c.u);
      REQUIRE(c.steps.back() == c.u);
      const auto w = build_good_witness(*system, c.u);
      REQUIRE(w.chains.size() == w.values.size());
      REQUIRE(verify_corollary_35(*system));
    }
    REQUIRE_FALSE(class_product_failure(m));
    REQUIRE_FALSE(image_inclusion_failure(LeftMultiplicationAction(m)));
  }
  CHECK(qualifying > 50);
}

TEST_CASE("the unfolded witness is not order-reversing") {
  // g(x) = f(largest ideal of x) with f(aM) = a(u). Every point of U is a
  // valid u here, and u = 0 breaks the order.
  const auto m = gowers(2);
  const RightZeroSelfAction rz(m);
  const YSpace y(m);
  const SpaceView s(rz);
  bool violated = false;
  for (Element u : idempotents(s)) {
    auto naive = [&](const ChainSet& x) {
      for (Element a : m.elements())
        if (y.ideal_of(a) == x.back()) return rz.act(a, u);
      return u;
    };
    for (const auto& x : y.elements())
      for (const auto& z : y.elements())
        if (y.leq(x, z) && !idem_leq(s, naive(z), naive(x))) violated = true;
  }
  CHECK(violated);
  const auto w = build_good_witness(rz);
  for (const auto& x : y.elements())
    for (const auto& z : y.elements())
      if (y.leq(x, z)) CHECK(idem_leq(s, w.at(z), w.at(x)));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(find_controlled_idempotent(RightZeroSelfAction(cyclic(3))), Error);
  CHECK_THROWS_AS(verify_corollary_35(RightZeroSelfAction(table2())), Error);
  const RightZeroSelfAction rz(table1());
  CHECK(omega_power(rz, 3) == 3);
  const TruncatedWordAction words(table1(), 3);
  CHECK(omega_power(words, words.encode({2})) == words.absorber());
}
