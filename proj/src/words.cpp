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
#include "monoidlab/words.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "monoidlab/text.hpp"

namespace monoidlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<Word> join(const Word& left, const Word& right) { return concat(left, right); }
std::optional<LocatedWord> join(const LocatedWord& left, const LocatedWord& right) {
  return located_concat(left, right);
}

template <typename W>
SpanResult<W> enumerate_span(const FiniteMonoid& m, std::span<const W> seq,
                             std::size_t max_factors) {
  SpanResult<W> result;
  Provenance provenance;
  auto extend = [&](auto& self, std::size_t from, const std::optional<W>& product,
                    bool used_identity) -> void {
    for (std::size_t j = from; j < seq.size(); ++j) {
      for (Element a : m.elements()) {
        const auto factor = act_word(m, a, seq[j]);
        std::optional<W> next;
        if (provenance.empty()) {
          next = factor;
        } else if (product) {
          next = join(*product, factor);
        }
        const bool used = used_identity || a == m.identity();
        provenance.emplace_back(a, j);
        if (used) {
          if (next) {
            result.products[*next].push_back(provenance);
          } else {
            result.undefined.push_back(provenance);
          }
        }
        if (provenance.size() < max_factors) self(self, j + 1, next, used);
        provenance.pop_back();
      }
    }
  };
  if (max_factors > 0) extend(extend, 0, std::nullopt, false);
  return result;
}

Error parse_error(const std::string& message) { return Error(ErrorKind::ParseError, message); }

}  // namespace

Word concat(const Word& left, const Word& right) {
  Word out = left;
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::optional<LocatedWord> located_concat(const LocatedWord& left, const LocatedWord& right) {
  if (!left.empty() && !right.empty() && left.rbegin()->first >= right.begin()->first) {
    return std::nullopt;
  }
  LocatedWord out = left;
  out.insert(right.begin(), right.end());
  return out;
}

bool is_variable(const FiniteMonoid& m, std::span<const Element> word) {
  return std::find(word.begin(), word.end(), m.identity()) != word.end();
}

bool is_variable(const FiniteMonoid& m, const LocatedWord& word) {
  return std::any_of(word.begin(), word.end(),
                     [&](const auto& entry) { return entry.second == m.identity(); });
}

Word act_word(const FiniteMonoid& m, Element a, std::span<const Element> word) {
  Word out;
  out.reserve(word.size());
  for (Element x : word) out.push_back(m.product(a, x));
  return out;
}

LocatedWord act_word(const FiniteMonoid& m, Element a, const LocatedWord& word) {
  LocatedWord out;
  for (const auto& [position, x] : word) out.emplace_hint(out.end(), position, m.product(a, x));
  return out;
}

Word letters(const LocatedWord& word) {
  Word out;
  for (const auto& entry : word) out.push_back(entry.second);
  return out;
}

std::string format_word(const FiniteMonoid& m, std::span<const Element> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ',';
    out += m.name(word[i]);
  }
  return out;
}

Word parse_word(const FiniteMonoid& m, std::string_view text) {
  if (text::trim(text).empty()) throw parse_error("empty word");
  Word out;
  for (const auto& token : text::split(text, ',')) out.push_back(m.element(token));
  return out;
}

std::string format_located(const FiniteMonoid& m, const LocatedWord& word) {
  std::string out;
  for (const auto& [position, x] : word) {
    if (!out.empty()) out += ',';
    out += std::to_string(position) + ":" + m.name(x);
  }
  return out;
}

LocatedWord parse_located(const FiniteMonoid& m, std::string_view text) {
  if (text::trim(text).empty()) throw parse_error("empty located word");
  LocatedWord out;
  for (const auto& piece : text::split(text, ',')) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos) throw parse_error("expected 'position:element' in '" + piece + "'");
    std::size_t position = 0;
    const auto digits = text::trim(std::string_view(piece).substr(0, colon));
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), position);
    if (ec != std::errc{} || end != digits.data() + digits.size()) {
      throw parse_error("bad position in '" + piece + "'");
    }
    if (!out.empty() && out.rbegin()->first >= position) {
      throw parse_error("positions must increase");
    }
    out.emplace(position, m.element(text::trim(std::string_view(piece).substr(colon + 1))));
  }
  return out;
}

Coloring Coloring::explicit_map(std::map<Word, Color> colors, std::size_t max_length,
                                std::optional<Color> fallback) {
  auto table = std::make_shared<const std::map<Word, Color>>(std::move(colors));
  return Coloring(
      [table, fallback](std::span<const Element> word) {
        const auto it = table->find(Word(word.begin(), word.end()));
        if (it != table->end()) return it->second;
        if (fallback) return *fallback;
        throw Error(ErrorKind::ColoringDomainExceeded, "word has no color", Word(word.begin(), word.end()));
      },
      max_length, "explicit");
}

Coloring Coloring::first_in(ElementSet set, std::size_t max_length) {
  return Coloring(
      [set = std::move(set)](std::span<const Element> word) {
        for (Element x : word) {
          if (set.test(x)) return static_cast<Color>(x);
        }
        return kBottom;
      },
      max_length, "first-in");
}

Coloring Coloring::seeded(std::uint64_t seed, std::size_t color_count, std::size_t max_length) {
  if (color_count == 0) throw Error(ErrorKind::BadParams, "a coloring needs at least one color");
  return Coloring(
      [seed, color_count](std::span<const Element> word) {
        std::uint64_t h = splitmix64(seed ^ word.size());
        for (Element x : word) h = splitmix64(h ^ (std::uint64_t{x} + 1));
        return static_cast<Color>(h % color_count);
      },
      max_length, "seeded");
}

Coloring Coloring::from_function(Function function, std::size_t max_length,
                                 std::string description) {
  return Coloring(std::move(function), max_length, std::move(description));
}

Coloring Coloring::constant(Color color, std::size_t max_length) {
  return Coloring([color](std::span<const Element>) { return color; }, max_length, "constant");
}

Color Coloring::operator()(std::span<const Element> word) const {
  if (word.size() > max_length_) {
    throw Error(ErrorKind::ColoringDomainExceeded,
                "word of length " + std::to_string(word.size()) + " exceeds coloring bound " +
                    std::to_string(max_length_),
                Word(word.begin(), word.end()));
  }
  return function_(word);
}

Color Coloring::operator()(const LocatedWord& word) const { return (*this)(letters(word)); }

SpanResult<Word> span_enumerate(const FiniteMonoid& m, std::span<const Word> seq,
                                std::size_t max_factors) {
  return enumerate_span(m, seq, max_factors);
}

SpanResult<LocatedWord> span_enumerate(const FiniteMonoid& m, std::span<const LocatedWord> seq,
                                       std::size_t max_factors) {
  return enumerate_span(m, seq, max_factors);
}

bool in_span(const FiniteMonoid& m, std::span<const Element> word, std::span<const Word> block) {
  const auto n = word.size();
  // memo[(p * (k + 1) + j) * 2 + used]: 0 unknown, 1 false, 2 true.
  const auto k = block.size();
  std::vector<std::uint8_t> memo((n + 1) * (k + 1) * 2, 0);
  auto solve = [&](auto& self, std::size_t p, std::size_t j, bool used) -> bool {
    if (p == n) return used;
    auto& slot = memo[(p * (k + 1) + j) * 2 + (used ? 1 : 0)];
    if (slot != 0) return slot == 2;
    bool found = false;
    for (std::size_t next = j; next < k && !found; ++next) {
      const auto& t = block[next];
      if (t.empty() || p + t.size() > n) continue;
      const auto segment = word.subspan(p, t.size());
      if (std::equal(t.begin(), t.end(), segment.begin())) {
        found = self(self, p + t.size(), next + 1, true);
      }
      for (Element a : m.elements()) {
        if (found) break;
        if (a == m.identity()) continue;
        bool matches = true;
        for (std::size_t i = 0; i < t.size() && matches; ++i) {
          matches = m.product(a, t[i]) == segment[i];
        }
        if (matches) found = self(self, p + t.size(), next + 1, used);
      }
    }
    slot = found ? 2 : 1;
    return found;
  };
  return n > 0 && solve(solve, 0, 0, false);
}

bool is_extracted(const FiniteMonoid& m, std::span<const Word> s, std::span<const Word> t) {
  // can[n][i]: s_n, s_{n+1}, ... fit into blocks starting at t_i.
  std::vector<std::vector<std::uint8_t>> can(s.size() + 1,
                                             std::vector<std::uint8_t>(t.size() + 1, 0));
  for (std::size_t i = 0; i <= t.size(); ++i) can[s.size()][i] = 1;
  for (std::size_t n = s.size(); n-- > 0;) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t end = i + 1; end <= t.size() && !can[n][i]; ++end) {
        if (can[n + 1][end] && in_span(m, s[n], t.subspan(i, end - i))) can[n][i] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (can[0][i]) return true;
  }
  return s.empty();
}

std::optional<FycViolation> fyc_violation(const FiniteMonoid& m, std::span<const Word> seq,
                                          std::span<const YWord> f, const ChainSet& y,
                                          const Coloring& c, std::size_t max_factors) {
  const YSpace space(m);
  const auto certificate = space.check_confluence();
  if (!certificate.confluent) {
    throw Error(ErrorKind::ConfluenceUnverified, "deletion system is not confluent for this monoid");
  }
  std::set<YWord> targets;
  for (const auto& w : f) targets.insert(space.normalize(w));

  const auto longest = std::min(max_factors, seq.size());
  std::map<YWord, std::vector<std::vector<Element>>> groups;
  std::vector<Element> tuple;
  auto tuples = [&](auto& self) -> void {
    if (!tuple.empty()) {
      auto w = space.wedge(tuple, y);
      if (targets.count(w)) groups[std::move(w)].push_back(tuple);
    }
    if (tuple.size() == longest) return;
    for (Element a : m.elements()) {
      tuple.push_back(a);
      self(self);
      tuple.pop_back();
    }
  };
  tuples(tuples);

  for (const auto& [w, members] : groups) {
    std::optional<std::pair<std::vector<Element>, std::vector<std::size_t>>> first;
    Color first_color = 0;
    for (const auto& a : members) {
      std::vector<std::size_t> indices;
      std::optional<FycViolation> found;
      auto choose = [&](auto& self, std::size_t from) -> void {
        if (found) return;
        if (indices.size() == a.size()) {
          Word product;
          for (std::size_t i = 0; i < a.size(); ++i) {
            const auto piece = act_word(m, a[i], seq[indices[i]]);
            product.insert(product.end(), piece.begin(), piece.end());
          }
          const Color color = c(product);
          if (!first) {
            first = {a, indices};
            first_color = color;
          } else if (color != first_color) {
            found = FycViolation{first->first, first->second, a, indices, first_color, color};
          }
          return;
        }
        for (std::size_t j = from; j < seq.size(); ++j) {
          indices.push_back(j);
          self(self, j + 1);
          indices.pop_back();
        }
      };
      choose(choose, 0);
      if (found) return found;
    }
  }
  return std::nullopt;
}

bool check_fyc_controllable(const FiniteMonoid& m, std::span<const Word> seq,
                            std::span<const YWord> f, const ChainSet& y, const Coloring& c,
                            std::size_t max_factors) {
  return !fyc_violation(m, seq, f, y, c, max_factors);
}

}  // namespace monoidlab
