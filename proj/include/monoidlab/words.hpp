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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoidlab/element_set.hpp"
#include "monoidlab/semigroup.hpp"
#include "monoidlab/yspace.hpp"

namespace monoidlab {

using Word = std::vector<Element>;

/// A finite word whose letters sit at explicit positions.
using LocatedWord = std::map<std::size_t, Element>;

Word concat(const Word& left, const Word& right);

/// Defined only when every position of `left` precedes every position of
/// `right`.
std::optional<LocatedWord> located_concat(const LocatedWord& left, const LocatedWord& right);

/// A variable word contains the identity.
bool is_variable(const FiniteMonoid& m, std::span<const Element> word);
bool is_variable(const FiniteMonoid& m, const LocatedWord& word);

Word act_word(const FiniteMonoid& m, Element a, std::span<const Element> word);
LocatedWord act_word(const FiniteMonoid& m, Element a, const LocatedWord& word);

/// Letters in position order.
Word letters(const LocatedWord& word);

/// "a,b,c" using element names; parse_word accepts the same form.
std::string format_word(const FiniteMonoid& m, std::span<const Element> word);
Word parse_word(const FiniteMonoid& m, std::string_view text);
/// "0:a,2:b".
std::string format_located(const FiniteMonoid& m, const LocatedWord& word);
LocatedWord parse_located(const FiniteMonoid& m, std::string_view text);

using Color = std::int64_t;
inline constexpr Color kBottom = -1;

/// A coloring of the words of length at most max_length(). Located words
/// are colored through their letter sequence.
class Coloring {
 public:
  using Function = std::function<Color(std::span<const Element>)>;

  /// Words missing from the map get `fallback`, or raise
  /// ColoringDomainExceeded when there is none.
  static Coloring explicit_map(std::map<Word, Color> colors, std::size_t max_length,
                               std::optional<Color> fallback = std::nullopt);
  /// The first letter that lies in `set`, or kBottom.
  static Coloring first_in(ElementSet set, std::size_t max_length);
  /// A fixed pseudo-random color in [0, color_count) per word.
  static Coloring seeded(std::uint64_t seed, std::size_t color_count, std::size_t max_length);
  static Coloring from_function(Function function, std::size_t max_length,
                                std::string description);
  static Coloring constant(Color color, std::size_t max_length);

  /// Throws ColoringDomainExceeded for words longer than max_length().
  Color operator()(std::span<const Element> word) const;
  Color operator()(const LocatedWord& word) const;

  std::size_t max_length() const noexcept { return max_length_; }
  const std::string& description() const noexcept { return description_; }

 private:
  Coloring(Function function, std::size_t max_length, std::string description)
      : function_(std::move(function)), max_length_(max_length),
        description_(std::move(description)) {}

  Function function_;
  std::size_t max_length_;
  std::string description_;
};

/// One factor of a span product: the element applied and the index of the
/// sequence member it is applied to.
using Provenance = std::vector<std::pair<Element, std::size_t>>;

template <typename W>
struct SpanResult {
  /// Each product with every way of obtaining it, in enumeration order.
  std::map<W, std::vector<Provenance>> products;
  /// Factor choices whose product is undefined (located words only).
  std::vector<Provenance> undefined;
};

/// All m_0 s_{i_0} ... m_k s_{i_k} with k < max_factors, i_0 < ... < i_k and
/// at least one m_j equal to the identity.
SpanResult<Word> span_enumerate(const FiniteMonoid& m, std::span<const Word> seq,
                                std::size_t max_factors);
SpanResult<LocatedWord> span_enumerate(const FiniteMonoid& m, std::span<const LocatedWord> seq,
                                       std::size_t max_factors);

/// Whether `word` is m_0 t_{i_0} ... m_k t_{i_k} for increasing indices into
/// `block` with some m_j the identity. Decided letter by letter, without
/// enumerating the span.
bool in_span(const FiniteMonoid& m, std::span<const Element> word, std::span<const Word> block);

/// Whether consecutive blocks t[i_0, i_1), t[i_1, i_2), ... exist with s_n in
/// the span of the n-th block.
bool is_extracted(const FiniteMonoid& m, std::span<const Word> s, std::span<const Word> t);

struct FycViolation {
  std::vector<Element> a;
  std::vector<std::size_t> a_indices;
  std::vector<Element> b;
  std::vector<std::size_t> b_indices;
  Color a_color;
  Color b_color;
};

/// Checks that a_0 s_{i_0} ... a_n s_{i_n} and b_0 s_{j_0} ... b_m s_{j_m}
/// get the same color whenever a_0 y v ... v a_n y lies in F and equals
/// b_0 y v ... v b_m y, over tuples of at most max_factors letters. Words
/// over Y(M) are compared by normal form; if the deletion system is not
/// confluent for M, ConfluenceUnverified is thrown.
std::optional<FycViolation> fyc_violation(const FiniteMonoid& m, std::span<const Word> seq,
                                          std::span<const YWord> f, const ChainSet& y,
                                          const Coloring& c, std::size_t max_factors);
bool check_fyc_controllable(const FiniteMonoid& m, std::span<const Word> seq,
                            std::span<const YWord> f, const ChainSet& y, const Coloring& c,
                            std::size_t max_factors);

}  // namespace monoidlab
