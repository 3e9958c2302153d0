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
#include "monoidlab/oracle.hpp"

#include <charconv>
#include <set>

#include "monoidlab/green.hpp"
#include "monoidlab/mon_format.hpp"
#include "monoidlab/text.hpp"

namespace monoidlab {

namespace {

// Calls visit(y0, y1) for every pair of variable words in search order
// until it returns true.
template <typename Visit>
std::optional<PairWitness> first_pair(const FiniteMonoid& m, std::size_t max_length,
                                      Visit visit) {
  const auto n = static_cast<Element>(m.size());
  for (std::size_t total = 2; total <= max_length; ++total) {
    Word w(total, 0);
    while (true) {
      for (std::size_t split = 1; split < total; ++split) {
        Word y0(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
        Word y1(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
        if (is_variable(m, y0) && is_variable(m, y1) && visit(y0, y1)) {
          return PairWitness{std::move(y0), std::move(y1)};
        }
      }
      std::size_t i = total;
      while (i > 0 && w[i - 1] + 1 == n) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return std::nullopt;
}

std::uint64_t parse_number(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorKind::BadParams, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ElementSet adversarial_colors(const FiniteMonoid& m, Element a) {
  for (std::size_t n = 1; n <= m.size(); ++n) {
    if (m.power(a, n) == m.power(a, n + 1)) {
      throw Error(ErrorKind::PreconditionViolated,
                  m.name(a) + "^" + std::to_string(n) + " is already stable", {a});
    }
  }
  ElementSet powers(m.size());
  std::vector<Element> listed{m.identity()};
  powers.set(m.identity());
  for (std::size_t n = 1; n <= m.size(); ++n) {
    const Element p = m.power(a, n);
    powers.set(p);
    listed.push_back(p);
  }
  ElementSet colors(m.size());
  for (Element x : m.elements()) {
    for (Element p : listed) {
      if (powers.test(m.product(p, x))) {
        colors.set(x);
        break;
      }
    }
  }
  return colors;
}

Coloring adversarial_coloring(const FiniteMonoid& m, Element a, std::size_t max_length) {
  return Coloring::first_in(adversarial_colors(m, a), max_length);
}

std::optional<PairWitness> adversarial_failure(const FiniteMonoid& m, Element a,
                                               std::size_t max_length, const Coloring& c) {
  return first_pair(m, max_length, [&](const Word& y0, const Word& y1) {
    return c(concat(y0, y1)) == c(concat(act_word(m, a, y0), y1)) ||
           orbit_monochromatic(m, y0, y1, c);
  });
}

bool verify_adversarial(const FiniteMonoid& m, Element a, std::size_t max_length,
                        const Coloring& c) {
  return !adversarial_failure(m, a, max_length, c);
}

bool verify_adversarial(const FiniteMonoid& m, Element a, std::size_t max_length) {
  return verify_adversarial(m, a, max_length, adversarial_coloring(m, a, max_length));
}

bool orbit_monochromatic(const FiniteMonoid& m, const Word& y0, const Word& y1, const Coloring& c) {
  const Color first = c(concat(y0, y1));
  for (Element x : m.elements()) {
    if (c(concat(act_word(m, x, y0), y1)) != first) return false;
  }
  return true;
}

std::optional<PairWitness> search_mono_pair(const FiniteMonoid& m, const Coloring& c,
                                            std::size_t max_length) {
  auto found = first_pair(m, max_length, [&](const Word& y0, const Word& y1) {
    return orbit_monochromatic(m, y0, y1, c);
  });
  if (!found) return found;

  const std::vector<Word> seq{found->y0, found->y1};
  const auto span = span_enumerate(m, std::span<const Word>(seq), 2);
  std::set<Color> colors;
  std::size_t orbit = 0;
  for (const auto& [product, provenances] : span.products) {
    for (const auto& p : provenances) {
      if (p.size() == 2 && p[0].second == 0 && p[1] == std::pair{m.identity(), std::size_t{1}}) {
        colors.insert(c(product));
        ++orbit;
        break;
      }
    }
  }
  if (orbit == 0 || colors.size() != 1) {
    throw Error(ErrorKind::PostconditionFailed, "span evaluation does not confirm the pair");
  }
  return found;
}

std::vector<PartitionCell> check_span_partition(const FiniteMonoid& m, std::span<const Word> seq,
                                                const Coloring& c, std::size_t max_factors) {
  const auto green = green_classes(m);
  std::vector<PartitionCell> cells;
  for (Element a : m.elements()) {
    PartitionCell cell;
    cell.a = a;
    const auto allowed = members(green.right_ideals[a]);
    std::optional<Word> first;
    Word product;
    std::size_t depth = 0;
    auto extend = [&](auto& self, std::size_t from, bool related) -> void {
      for (std::size_t j = from; j < seq.size(); ++j) {
        for (Element x : allowed) {
          const auto mark = product.size();
          const auto piece = act_word(m, x, seq[j]);
          product.insert(product.end(), piece.begin(), piece.end());
          const bool now = related || green.r.related(x, a);
          if (now) {
            ++cell.product_count;
            const Color color = c(product);
            if (!cell.color) {
              cell.color = color;
              first = product;
            } else if (cell.monochromatic && color != *cell.color) {
              cell.monochromatic = false;
              cell.clash = std::pair{*first, product};
            }
          }
          ++depth;
          if (depth < max_factors) self(self, j + 1, now);
          --depth;
          product.resize(mark);
        }
      }
    };
    if (max_factors > 0) extend(extend, 0, false);
    if (!cell.monochromatic) cell.color.reset();
    cells.push_back(std::move(cell));
  }
  return cells;
}

Coloring parse_coloring_file(const FiniteMonoid& m, std::string_view text,
                             std::size_t max_length) {
  std::map<std::string, Color> numbering;
  auto number = [&](const std::string& token) {
    return numbering.emplace(token, static_cast<Color>(numbering.size())).first->second;
  };
  std::map<Word, Color> colors;
  std::optional<Color> fallback;
  for (const auto& line : text::content_lines(text)) {
    std::string_view rest;
    if (text::take_key(line.content, "default", rest)) {
      fallback = number(std::string(rest));
      continue;
    }
    const auto tokens = text::split_whitespace(line.content);
    if (tokens.size() != 2) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line.number) + ": expected '<word> <color>'", {},
                  line.number);
    }
    colors[parse_word(m, tokens[0])] = number(tokens[1]);
  }
  return Coloring::explicit_map(std::move(colors), max_length, fallback);
}

Coloring parse_coloring(const FiniteMonoid& m, std::string_view spec, std::size_t max_length) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "first-in") {
    ElementSet set(m.size());
    for (const auto& token : text::split(rest, ',')) {
      if (!token.empty()) set.set(m.element(token));
    }
    return Coloring::first_in(std::move(set), max_length);
  }
  if (kind == "seed") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) throw Error(ErrorKind::BadParams, "expected seed:N:K");
    return Coloring::seeded(parse_number(rest.substr(0, second), "seed"),
                            parse_number(rest.substr(second + 1), "color count"), max_length);
  }
  if (kind == "constant") {
    return Coloring::constant(static_cast<Color>(parse_number(rest, "color")), max_length);
  }
  if (kind == "file") return parse_coloring_file(m, read_text_file(std::string(rest)), max_length);
  throw Error(ErrorKind::BadParams, "unknown coloring '" + std::string(spec) + "'");
}

}  // namespace monoidlab
