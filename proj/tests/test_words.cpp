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

#include "monoidlab/families.hpp"
#include "monoidlab/words.hpp"
#include "monoidlab/yspace.hpp"

using namespace monoidlab;

namespace {

// All products over increasing index tuples of length <= max_factors, by
// brute force over index subsets and element tuples.
std::set<Word> reference_span(const FiniteMonoid& m, const std::vector<Word>& seq,
                              std::size_t max_factors) {
  std::set<Word> out;
  const auto n = seq.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    if (idx.size() > max_factors) continue;
    std::vector<Element> ms(idx.size(), 0);
    while (true) {
      if (std::find(ms.begin(), ms.end(), m.identity()) != ms.end()) {
        Word w;
        for (std::size_t j = 0; j < idx.size(); ++j)
          for (Element x : seq[idx[j]]) w.push_back(m.product(ms[j], x));
        out.insert(w);
      }
      std::size_t j = 0;
      while (j < ms.size() && ++ms[j] == m.size()) ms[j++] = 0;
      if (j == ms.size()) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("words and located words") {
  const auto m = gowers(3);
  CHECK(concat({1}, {2, 0}) == Word{1, 2, 0});
  const LocatedWord a{{0, 1}, {2, 0}};
  const LocatedWord b{{3, 2}};
  CHECK(located_concat(a, b) == LocatedWord{{0, 1}, {2, 0}, {3, 2}});
  CHECK_FALSE(located_concat(b, a));
  CHECK_FALSE(located_concat(a, LocatedWord{{1, 0}}));
  CHECK(is_variable(m, Word{1, 0}));
  CHECK_FALSE(is_variable(m, Word{1, 2}));
  CHECK(is_variable(m, a));
  CHECK(act_word(m, 1, Word{0, 1, 2}) == Word{1, 2, 2});
  CHECK(act_word(m, 2, a) == LocatedWord{{0, 2}, {2, 2}});
  CHECK(letters(a) == Word{1, 0});
  CHECK(format_word(m, Word{1, 0}) == "1,0");
  CHECK(parse_word(m, "2,0,1") == Word{2, 0, 1});
  CHECK(format_located(m, a) == "0:1,2:0");
  CHECK(parse_located(m, "0:1,2:0") == a);
  CHECK_THROWS_AS(parse_word(m, "7"), Error);
}

TEST_CASE("colorings") {
  const auto m = gowers(3);
  const auto first = Coloring::first_in(make_set(3, {2}), 4);
  CHECK(first(Word{0, 1, 2}) == 2);
  CHECK(first(Word{0, 1}) == kBottom);
  CHECK_THROWS_AS(first(Word{0, 0, 0, 0, 0}), Error);

  const auto seeded = Coloring::seeded(5, 3, 4);
  for (const auto& w : {Word{}, Word{1}, Word{2, 0, 1}}) {
    CHECK(seeded(w) == Coloring::seeded(5, 3, 4)(w));
    CHECK(seeded(w) >= 0);
    CHECK(seeded(w) < 3);
  }

  const auto map = Coloring::explicit_map({{Word{0}, 4}}, 2);
  CHECK(map(Word{0}) == 4);
  CHECK_THROWS_AS(map(Word{1}), Error);
  CHECK(Coloring::explicit_map({}, 2, 9)(Word{1}) == 9);
  CHECK(Coloring::constant(3, 2)(LocatedWord{{5, 1}}) == 3);
  (void)m;
}

TEST_CASE("span enumeration matches brute force") {
  for (const auto& m : {gowers(3), table1(), cyclic(3), i_monoid(3)}) {
    const std::vector<Word> seq{{m.identity()}, {0, m.identity()}, {1, 1}};
    for (std::size_t f = 1; f <= 3; ++f) {
      const auto span = span_enumerate(m, seq, f);
      std::set<Word> got;
      for (const auto& [w, ways] : span.products) {
        got.insert(w);
        for (const auto& prov : ways) {
          Word rebuilt;
          bool has_identity = false;
          std::size_t last = 0;
          for (std::size_t i = 0; i < prov.size(); ++i) {
            if (i > 0) REQUIRE(prov[i].second > last);
            last = prov[i].second;
            has_identity = has_identity || prov[i].first == m.identity();
            const auto piece = act_word(m, prov[i].first, seq[prov[i].second]);
            rebuilt.insert(rebuilt.end(), piece.begin(), piece.end());
          }
          REQUIRE(has_identity);
          REQUIRE(rebuilt == w);
        }
      }
      CHECK(got == reference_span(m, seq, f));
      CHECK(span.undefined.empty());
    }
    // The letter-level membership test agrees with the enumeration.
    const auto all = reference_span(m, seq, 3);
    for (const auto& w : all) CHECK(in_span(m, w, seq));
    CHECK_FALSE(in_span(m, Word{}, seq));
  }
}

TEST_CASE("located spans report undefined products") {
  const auto m = gowers(2);
  const std::vector<LocatedWord> ordered{{{0, 0}}, {{1, 1}}};
  const auto ok = span_enumerate(m, ordered, 2);
  CHECK(ok.undefined.empty());
  CHECK(ok.products.count(LocatedWord{{0, 0}, {1, 1}}) == 1);
  const std::vector<LocatedWord> clash{{{1, 0}}, {{0, 1}}};
  const auto bad = span_enumerate(m, clash, 2);
  CHECK_FALSE(bad.undefined.empty());
}

TEST_CASE("extracted sequences") {
  const auto m = gowers(3);
  const std::vector<Word> t{{0}, {0}, {0}};
  CHECK(is_extracted(m, std::vector<Word>{{0, 1}, {0}}, t));
  CHECK(is_extracted(m, std::vector<Word>{{0, 1, 0}}, t));
  CHECK_FALSE(is_extracted(m, std::vector<Word>{{1}}, t));
  CHECK_FALSE(is_extracted(m, std::vector<Word>{{0}, {0}, {0}, {0}}, t));
}

TEST_CASE("controllability on a fixed sequence") {
  const auto m = table1();
  const YSpace space(m);
  const auto y = space.top();
  const std::vector<YWord> f{{y}};
  const std::vector<Word> seq{{m.identity()}, {m.identity()}, {m.identity()}};
  CHECK(check_fyc_controllable(m, seq, f, y, Coloring::constant(0, 6), 3));
  const auto c = Coloring::seeded(3, 2, 6);
  const auto v = fyc_violation(m, seq, f, y, c, 3);
  REQUIRE(v);
  auto color_of = [&](const std::vector<Element>& a, const std::vector<std::size_t>& idx) {
    Word w;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto piece = act_word(m, a[i], seq[idx[i]]);
      w.insert(w.end(), piece.begin(), piece.end());
    }
    return c(w);
  };
  CHECK(v->a_color == color_of(v->a, v->a_indices));
  CHECK(v->b_color == color_of(v->b, v->b_indices));
  CHECK(v->a_color != v->b_color);
  CHECK(space.wedge(v->a, y) == YWord{y});
  CHECK(space.wedge(v->b, y) == YWord{y});
}
