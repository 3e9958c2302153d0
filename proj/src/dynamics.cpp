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
#include "monoidlab/dynamics.hpp"

#include <sstream>

#include "monoidlab/classify.hpp"
#include "monoidlab/green.hpp"
#include "monoidlab/text.hpp"

namespace monoidlab {

namespace {

constexpr std::size_t kMaxEncodedPoints = 50'000'000;

void require_hypotheses(const FiniteMonoid& m, const GreenData& green) {
  const auto aperiodic = is_aperiodic(m, green, AperiodicityMethod::Power);
  if (!aperiodic.aperiodic) {
    throw Error(ErrorKind::PreconditionViolated, "monoid is not aperiodic", aperiodic.witness);
  }
  if (!x_r_family(green).linear) {
    throw Error(ErrorKind::PreconditionViolated, "X_R(M) is not linear");
  }
}

// Among {x : a x = b}, one with an inclusion-minimal xM; first in element
// order among those.
std::optional<Element> minimal_solution(const FiniteMonoid& m, const GreenData& green, Element a,
                                        Element b) {
  std::vector<Element> candidates;
  for (Element x : m.elements()) {
    if (m.product(a, x) == b) candidates.push_back(x);
  }
  for (Element x : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](Element y) {
      return green.right_ideals[y].is_proper_subset_of(green.right_ideals[x]);
    });
    if (minimal) return x;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Element> ActionSystem::space_generators() const {
  std::vector<Element> all(point_count());
  for (Element u = 0; u < all.size(); ++u) all[u] = u;
  return all;
}

void check_action_laws(const MonoidAction& action) {
  const auto& m = action.monoid();
  for (Element p = 0; p < action.point_count(); ++p) {
    if (action.act(m.identity(), p) != p) {
      throw Error(ErrorKind::InvalidAction, "identity moves point " + action.point_name(p),
                  {m.identity(), p});
    }
  }
  for (Element a : m.elements()) {
    for (Element b : m.elements()) {
      const Element ab = m.product(a, b);
      for (Element p = 0; p < action.point_count(); ++p) {
        if (action.act(ab, p) != action.act(a, action.act(b, p))) {
          throw Error(ErrorKind::InvalidAction,
                      "(" + m.name(a) + m.name(b) + ")." + action.point_name(p) +
                          " differs from " + m.name(a) + ".(" + m.name(b) + "." +
                          action.point_name(p) + ")",
                      {a, b, p});
        }
      }
    }
  }
}

void check_endomorphisms(const ActionSystem& system) {
  const auto n = system.point_count();
  for (Element m : system.monoid().elements()) {
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        if (system.act(m, system.product(u, v)) !=
            system.product(system.act(m, u), system.act(m, v))) {
          throw Error(ErrorKind::InvalidAction,
                      system.monoid().name(m) + " is not an endomorphism at (" +
                          system.point_name(u) + ", " + system.point_name(v) + ")",
                      {m, u, v});
        }
      }
    }
  }
}

TruncatedWordAction::TruncatedWordAction(FiniteMonoid m, std::size_t max_length)
    : monoid_(std::move(m)), max_length_(max_length) {
  if (max_length_ == 0) throw Error(ErrorKind::BadParams, "word length bound must be positive");
  offset_.assign(max_length_ + 2, 0);
  std::size_t count = 1;
  for (std::size_t l = 1; l <= max_length_; ++l) {
    count *= monoid_.size();
    offset_[l + 1] = offset_[l] + static_cast<Element>(count);
    if (offset_[l + 1] > kMaxEncodedPoints) {
      throw Error(ErrorKind::TooLarge, "truncated word space exceeds " +
                                           std::to_string(kMaxEncodedPoints) + " points");
    }
  }
  absorber_ = offset_[max_length_ + 1];
}

Element TruncatedWordAction::encode(const std::vector<Element>& word) const {
  if (word.empty() || word.size() > max_length_) return absorber_;
  Element code = 0;
  for (Element letter : word) code = code * static_cast<Element>(monoid_.size()) + letter;
  return offset_[word.size()] + code;
}

std::vector<Element> TruncatedWordAction::decode(Element u) const {
  if (u >= absorber_) return {};
  std::size_t length = 1;
  while (offset_[length + 1] <= u) ++length;
  std::vector<Element> word(length);
  Element code = u - offset_[length];
  const auto n = static_cast<Element>(monoid_.size());
  for (std::size_t i = length; i-- > 0;) {
    word[i] = code % n;
    code /= n;
  }
  return word;
}

Element TruncatedWordAction::act(Element m, Element u) const {
  if (u == absorber_) return u;
  auto word = decode(u);
  for (auto& letter : word) letter = monoid_.product(m, letter);
  return encode(word);
}

Element TruncatedWordAction::product(Element u, Element v) const {
  if (u == absorber_ || v == absorber_) return absorber_;
  auto word = decode(u);
  const auto tail = decode(v);
  if (word.size() + tail.size() > max_length_) return absorber_;
  word.insert(word.end(), tail.begin(), tail.end());
  return encode(word);
}

std::vector<Element> TruncatedWordAction::space_generators() const {
  std::vector<Element> letters;
  for (Element a : monoid_.elements()) letters.push_back(encode({a}));
  return letters;
}

std::string TruncatedWordAction::point_name(Element u) const {
  if (u == absorber_) return "_";
  std::string out;
  for (Element letter : decode(u)) {
    if (!out.empty()) out += ',';
    out += monoid_.name(letter);
  }
  return out;
}

TableActionSystem::TableActionSystem(FiniteMonoid m, FiniteSemigroup space,
                                     std::vector<Element> table)
    : monoid_(std::move(m)), space_(std::move(space)), table_(std::move(table)) {
  if (table_.size() != monoid_.size() * space_.size()) {
    throw Error(ErrorKind::InvalidAction, "action table has " + std::to_string(table_.size()) +
                                              " entries, expected " +
                                              std::to_string(monoid_.size() * space_.size()));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= space_.size()) {
      throw Error(ErrorKind::InvalidAction, "action table entry out of range");
    }
  }
  check_action_laws(*this);
  check_endomorphisms(*this);
}

ActFile parse_act(std::string_view text, const FiniteMonoid& m, const FiniteSemigroup& space) {
  ActFile file;
  const auto n = space.size();
  std::vector<bool> seen(m.size() * n, false);
  file.table.assign(m.size() * n, 0);
  auto fail = [](std::size_t line, const std::string& message) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message, {}, line);
  };
  for (const auto& line : text::content_lines(text)) {
    std::string_view rest;
    if (text::take_key(line.content, "monoid", rest)) {
      file.monoid_path = std::string(rest);
      continue;
    }
    if (text::take_key(line.content, "space", rest)) {
      file.space_path = std::string(rest);
      continue;
    }
    const auto tokens = text::split_whitespace(line.content);
    if (tokens.size() != 4 || tokens[2] != "->") throw fail(line.number, "expected 'm u -> v'");
    const auto a = m.find(tokens[0]);
    const auto u = space.find(tokens[1]);
    const auto v = space.find(tokens[3]);
    if (!a || !u || !v) throw fail(line.number, "unknown element");
    const auto index = *a * n + *u;
    if (seen[index]) throw fail(line.number, "duplicate entry");
    seen[index] = true;
    file.table[index] = *v;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorKind::ParseError, "no entry for " + m.name(static_cast<Element>(i / n)) +
                                             " " + space.name(static_cast<Element>(i % n)));
    }
  }
  return file;
}

std::string format_act(const TableActionSystem& system) {
  std::ostringstream out;
  for (Element a : system.monoid().elements()) {
    for (Element u = 0; u < system.point_count(); ++u) {
      out << system.monoid().name(a) << ' ' << system.point_name(u) << " -> "
          << system.point_name(system.act(a, u)) << '\n';
    }
  }
  return out.str();
}

ElementSet image(const MonoidAction& action, Element m) {
  ElementSet out(action.point_count());
  for (Element p = 0; p < action.point_count(); ++p) out.set(action.act(m, p));
  return out;
}

std::pair<Element, Element> lemma_witnesses(const FiniteMonoid& m, Element a, Element b) {
  const auto green = green_classes(m);
  require_hypotheses(m, green);
  if (a == b || !green.r.related(a, b)) {
    throw Error(ErrorKind::PreconditionViolated,
                m.name(a) + " and " + m.name(b) + " are not distinct R-related elements", {a, b});
  }
  const auto g = minimal_solution(m, green, a, b);
  const auto h = minimal_solution(m, green, b, a);
  const bool ok = g && h && m.product(*g, *h) == *h && m.product(*h, *g) == *g &&
                  green.right_ideals[*g] == green.right_ideals[*h];
  if (!ok) {
    throw Error(ErrorKind::PostconditionFailed,
                "no witnesses for " + m.name(a) + ", " + m.name(b), {a, b});
  }
  return {*g, *h};
}

ControlledIdempotent find_controlled_idempotent(const ActionSystem& system) {
  const auto& m = system.monoid();
  const auto green = green_classes(m);
  require_hypotheses(m, green);

  ControlledIdempotent result{0, {}, {}};
  for (const auto& cls : green.r.classes) {
    if (cls.size() > 1) result.anchors.push_back(cls.front());
  }
  std::sort(result.anchors.begin(), result.anchors.end(), [&](Element x, Element y) {
    return set_order_less(green.right_ideals[x], green.right_ideals[y]);
  });
  result.anchors.push_back(m.identity());

  const SpaceView space(system);
  const auto idems = idempotents(space);
  std::optional<Element> u;
  for (Element a : result.anchors) {
    const auto img = image(system, a);
    std::vector<Element> candidates;
    for (Element e : idems) {
      if (img.test(e)) candidates.push_back(e);
    }
    u = minimal_below(space, u ? *u : candidates.front(), candidates);
    result.steps.push_back(*u);
  }
  result.u = *u;

  if (!kernel(space).test(result.u)) {
    throw Error(ErrorKind::PostconditionFailed, "u is not in the kernel", {result.u});
  }
  for (const auto& cls : green.r.classes) {
    for (Element a : cls) {
      for (Element b : cls) {
        if (system.act(a, result.u) != system.act(b, result.u)) {
          throw Error(ErrorKind::PostconditionFailed,
                      m.name(a) + "(u) differs from " + m.name(b) + "(u)", {a, b, result.u});
        }
      }
    }
  }
  return result;
}

std::optional<std::vector<Element>> corollary_35_failure(const MonoidAction& action) {
  const auto& m = action.monoid();
  const auto green = green_classes(m);
  require_hypotheses(m, green);
  for (const auto& cls : green.r.classes) {
    for (Element a : cls) {
      const auto img = image(action, a);
      for (Element b : cls) {
        if (a == b) continue;
        for (auto p = img.find_first(); p != ElementSet::npos; p = img.find_next(p)) {
          const auto point = static_cast<Element>(p);
          if (action.act(a, point) != action.act(b, point)) {
            return std::vector<Element>{a, b, point};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_corollary_35(const MonoidAction& action) { return !corollary_35_failure(action); }

std::optional<std::vector<Element>> image_inclusion_failure(const MonoidAction& action) {
  const auto& m = action.monoid();
  const auto green = green_classes(m);
  std::vector<ElementSet> images;
  for (Element a : m.elements()) images.push_back(image(action, a));
  for (Element a : m.elements()) {
    for (Element b : m.elements()) {
      if (green.leq_r[a].test(b) && !images[a].is_subset_of(images[b])) {
        return std::vector<Element>{a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> class_product_failure(const FiniteMonoid& m) {
  const auto green = green_classes(m);
  for (const auto& cls : green.r.classes) {
    std::optional<std::pair<Element, Element>> holds;
    std::optional<std::pair<Element, Element>> fails;
    for (Element b : cls) {
      for (Element c : cls) {
        auto& slot = m.product(b, c) == c ? holds : fails;
        if (!slot) slot = std::pair{b, c};
      }
    }
    if (holds && fails) {
      return std::vector<Element>{holds->first, holds->second, fails->first, fails->second};
    }
  }
  return std::nullopt;
}

Element omega_power(const ActionSystem& system, Element v) {
  Element p = v;
  for (std::size_t k = 0; k <= system.point_count(); ++k) {
    if (system.product(p, p) == p) return p;
    p = system.product(p, v);
  }
  throw Error(ErrorKind::PostconditionFailed, "no idempotent power found", {v});
}

Element GoodWitness::at(const ChainSet& x) const {
  const auto it = std::lower_bound(chains.begin(), chains.end(), x);
  if (it == chains.end() || *it != x) throw Error(ErrorKind::NotAChain, "not an element of Y(M)");
  return values[static_cast<std::size_t>(it - chains.begin())];
}

GoodWitness build_good_witness(const ActionSystem& system, Element u, std::size_t cap) {
  const auto& m = system.monoid();
  const YSpace space(m);
  auto fail = [&](const std::string& which, std::vector<Element> where) {
    return Error(ErrorKind::WitnessInvariantFailed, which, std::move(where));
  };

  std::vector<std::optional<Element>> f(space.ideals().size());
  for (Element a : m.elements()) {
    auto& slot = f[space.ideal_of(a)];
    const Element value = system.act(a, u);
    if (slot && *slot != value) throw fail("f is not well defined at " + m.name(a), {a, u});
    slot = value;
  }

  GoodWitness witness{space.elements(cap), {}, u};
  witness.values.reserve(witness.chains.size());
  for (const auto& chain : witness.chains) {
    Element v = *f[chain.front()];
    for (std::size_t j = 1; j < chain.size(); ++j) {
      const Element w = *f[chain[j]];
      v = system.product(omega_power(system, system.product(v, w)), v);
    }
    witness.values.push_back(v);
  }

  const SpaceView view(system);
  const auto kern = kernel(view);
  const std::size_t top = space.ideals().size() - 1;
  for (std::size_t i = 0; i < witness.chains.size(); ++i) {
    const auto& chain = witness.chains[i];
    const Element v = witness.values[i];
    if (system.product(v, v) != v) {
      throw fail("value at " + space.format(chain) + " is not idempotent", {v});
    }
    for (Element a : m.elements()) {
      if (witness.at(space.act(a, chain)) != system.act(a, v)) {
        throw fail("not equivariant at " + m.name(a) + ", " + space.format(chain), {a, v});
      }
    }
    // x <=_Y y exactly when x is an initial segment of the chain y.
    for (std::size_t len = 1; len < chain.size(); ++len) {
      const ChainSet prefix(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(len));
      if (!idem_leq(view, v, witness.at(prefix))) {
        throw fail("not order-reversing below " + space.format(chain), {v});
      }
    }
    if (chain.back() == top && !kern.test(v)) {
      throw fail("maximal chain " + space.format(chain) + " is sent outside the kernel", {v});
    }
  }
  return witness;
}

GoodWitness build_good_witness(const ActionSystem& system, std::size_t cap) {
  return build_good_witness(system, find_controlled_idempotent(system).u, cap);
}

}  // namespace monoidlab
