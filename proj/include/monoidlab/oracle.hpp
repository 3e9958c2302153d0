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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/semigroup.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab {

/// The elements C = {m : a^n m = a^k for some n, k <= |M|}. Throws
/// PreconditionViolated if a^n = a^(n+1) for some 1 <= n <= |M|.
ElementSet adversarial_colors(const FiniteMonoid& m, Element a);

/// Colors a word by its first letter in adversarial_colors(m, a), or by
/// kBottom when it has none.
Coloring adversarial_coloring(const FiniteMonoid& m, Element a, std::size_t max_length);

struct PairWitness {
  Word y0;
  Word y1;
};

/// Over all pairs of variable words with |y0| + |y1| <= max_length, checks
/// that y0 y1 and (a y0) y1 get different colors, so that M y0 y1 is never
/// monochromatic. Returns the first pair for which this fails.
std::optional<PairWitness> adversarial_failure(const FiniteMonoid& m, Element a,
                                               std::size_t max_length, const Coloring& c);
bool verify_adversarial(const FiniteMonoid& m, Element a, std::size_t max_length);
bool verify_adversarial(const FiniteMonoid& m, Element a, std::size_t max_length,
                        const Coloring& c);

/// Whether {m y0 y1 : m in M} gets a single color.
bool orbit_monochromatic(const FiniteMonoid& m, const Word& y0, const Word& y1, const Coloring& c);

/// First pair of variable words, ordered by |y0| + |y1|, then by the letters
/// of y0 y1, then by the length of y0, whose orbit M y0 y1 is
/// monochromatic. A found pair is checked again through span_enumerate and
/// PostconditionFailed is thrown if the two disagree. nullopt only means
/// that no pair exists up to the bound.
std::optional<PairWitness> search_mono_pair(const FiniteMonoid& m, const Coloring& c,
                                            std::size_t max_length);

struct PartitionCell {
  Element a;
  std::size_t product_count = 0;
  bool monochromatic = true;
  std::optional<Color> color;
  /// Two products with different colors when not monochromatic.
  std::optional<std::pair<Word, Word>> clash;
};

/// For each a: the products m_0 s_{i_0} ... m_k s_{i_k} with k < max_factors,
/// every m_j in aM and some m_j R-related to a, and whether they share a color.
std::vector<PartitionCell> check_span_partition(const FiniteMonoid& m, std::span<const Word> seq,
                                                const Coloring& c, std::size_t max_factors);

/// "first-in:a,b", "seed:N:K" (seed N, K colors), "constant:C" or
/// "file:PATH". A coloring file lists "<word> <color>" per line with words
/// as in parse_word and colors as arbitrary tokens, plus an optional
/// "default: <color>" line; colors are numbered by first appearance.
Coloring parse_coloring(const FiniteMonoid& m, std::string_view spec, std::size_t max_length);
Coloring parse_coloring_file(const FiniteMonoid& m, std::string_view text,
                             std::size_t max_length);

}  // namespace monoidlab
