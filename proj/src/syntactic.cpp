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
#include "monoidlab/syntactic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "monoidlab/classify.hpp"
#include "monoidlab/mon_format.hpp"
#include "monoidlab/text.hpp"
#include "monoidlab/transformation.hpp"

namespace monoidlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view alphabet) : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    if (text_.empty()) throw syntax_error("empty expression");
    Regex r = parse_union();
    if (pos_ != text_.size()) throw syntax_error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  Error syntax_error(const std::string& message) const {
    return Error(ErrorKind::SyntaxError, message + " at " + std::to_string(pos_), {}, pos_);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  Regex parse_union() {
    Regex first = parse_concat();
    if (!at('|')) return first;
    Regex node{Regex::Kind::Union, 0, {std::move(first)}};
    while (at('|')) {
      ++pos_;
      node.children.push_back(parse_concat());
    }
    return node;
  }

  Regex parse_concat() {
    std::vector<Regex> items;
    while (pos_ < text_.size() && !at('|') && !at(')')) items.push_back(parse_star());
    if (items.empty()) throw syntax_error("expected an expression");
    if (items.size() == 1) return std::move(items.front());
    return {Regex::Kind::Concat, 0, std::move(items)};
  }

  Regex parse_star() {
    Regex atom = parse_atom();
    while (at('*')) {
      ++pos_;
      atom = Regex{Regex::Kind::Star, 0, {std::move(atom)}};
    }
    return atom;
  }

  Regex parse_atom() {
    if (pos_ == text_.size()) throw syntax_error("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      if (at(')')) {
        ++pos_;
        return Regex::epsilon();
      }
      Regex inner = parse_union();
      if (!at(')')) throw syntax_error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '*' || c == '|' || c == ')') throw syntax_error("unexpected '" + std::string(1, c) + "'");
    if (alphabet_.find(c) == std::string_view::npos) {
      throw Error(ErrorKind::UnknownSymbol,
                  "'" + std::string(1, c) + "' is not in the alphabet at " + std::to_string(pos_),
                  {}, pos_);
    }
    ++pos_;
    return Regex::literal(c);
  }

  std::string_view text_;
  std::string_view alphabet_;
  std::size_t pos_ = 0;
};

struct Nfa {
  struct State {
    std::vector<std::size_t> epsilon;
    std::vector<std::pair<std::size_t, std::size_t>> moves;  // (symbol, target)
  };
  std::vector<State> states;

  std::size_t add() {
    states.emplace_back();
    return states.size() - 1;
  }
};

struct Fragment {
  std::size_t start;
  std::size_t accept;
};

Fragment thompson(Nfa& nfa, const Regex& r, std::string_view alphabet) {
  const auto start = nfa.add();
  const auto accept = nfa.add();
  switch (r.kind) {
    case Regex::Kind::EmptySet:
      break;
    case Regex::Kind::Epsilon:
      nfa.states[start].epsilon.push_back(accept);
      break;
    case Regex::Kind::Literal: {
      const auto symbol = alphabet.find(r.symbol);
      if (symbol == std::string_view::npos) {
        throw Error(ErrorKind::UnknownSymbol, "'" + std::string(1, r.symbol) + "' is not in the alphabet");
      }
      nfa.states[start].moves.emplace_back(symbol, accept);
      break;
    }
    case Regex::Kind::Union:
      for (const auto& child : r.children) {
        const auto f = thompson(nfa, child, alphabet);
        nfa.states[start].epsilon.push_back(f.start);
        nfa.states[f.accept].epsilon.push_back(accept);
      }
      break;
    case Regex::Kind::Concat: {
      std::size_t last = start;
      for (const auto& child : r.children) {
        const auto f = thompson(nfa, child, alphabet);
        nfa.states[last].epsilon.push_back(f.start);
        last = f.accept;
      }
      nfa.states[last].epsilon.push_back(accept);
      break;
    }
    case Regex::Kind::Star: {
      const auto f = thompson(nfa, r.children.at(0), alphabet);
      nfa.states[start].epsilon.push_back(f.start);
      nfa.states[start].epsilon.push_back(accept);
      nfa.states[f.accept].epsilon.push_back(f.start);
      nfa.states[f.accept].epsilon.push_back(accept);
      break;
    }
  }
  return {start, accept};
}

std::vector<std::size_t> epsilon_closure(const Nfa& nfa, std::vector<std::size_t> seed) {
  std::vector<bool> seen(nfa.states.size(), false);
  std::vector<std::size_t> stack = seed;
  for (auto s : seed) seen[s] = true;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (auto t : nfa.states[s].epsilon) {
      if (!seen[t]) {
        seen[t] = true;
        seed.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::sort(seed.begin(), seed.end());
  return seed;
}

Error dfa_error(std::size_t line, const std::string& message) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message, {}, line);
}

}  // namespace

Regex parse_regex(std::string_view text, std::string_view alphabet) {
  return Parser(text, alphabet).parse();
}

std::string to_string(const Regex& r) {
  switch (r.kind) {
    case Regex::Kind::EmptySet: return "{}";
    case Regex::Kind::Epsilon: return "()";
    case Regex::Kind::Literal: return std::string(1, r.symbol);
    case Regex::Kind::Star: return "(" + to_string(r.children.at(0)) + ")*";
    case Regex::Kind::Union:
    case Regex::Kind::Concat: {
      std::string out = "(";
      for (std::size_t i = 0; i < r.children.size(); ++i) {
        if (i > 0 && r.kind == Regex::Kind::Union) out += '|';
        out += to_string(r.children[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

bool Dfa::accepts(std::string_view word) const {
  std::size_t q = initial;
  for (char c : word) {
    const auto symbol = alphabet.find(c);
    if (symbol == std::string::npos) {
      throw Error(ErrorKind::UnknownSymbol, "'" + std::string(1, c) + "' is not in the alphabet");
    }
    q = next(q, symbol);
  }
  return accepting[q];
}

Dfa regex_to_dfa(const Regex& regex, std::string_view alphabet) {
  Nfa nfa;
  const auto fragment = thompson(nfa, regex, alphabet);
  const auto k = alphabet.size();

  Dfa dfa;
  dfa.alphabet = std::string(alphabet);
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> subsets;
  auto intern = [&](std::vector<std::size_t> subset) {
    const auto [it, inserted] = index.emplace(subset, subsets.size());
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };
  dfa.initial = intern(epsilon_closure(nfa, {fragment.start}));
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    for (std::size_t symbol = 0; symbol < k; ++symbol) {
      std::vector<std::size_t> targets;
      for (auto s : subsets[q]) {
        for (const auto& [move, t] : nfa.states[s].moves) {
          if (move == symbol) targets.push_back(t);
        }
      }
      const auto target = intern(epsilon_closure(nfa, std::move(targets)));
      dfa.transition.push_back(target);
    }
  }
  dfa.states = subsets.size();
  for (const auto& subset : subsets) {
    dfa.accepting.push_back(std::binary_search(subset.begin(), subset.end(), fragment.accept));
  }
  return dfa;
}

Dfa minimize_dfa(const Dfa& dfa) {
  const auto k = dfa.alphabet.size();
  std::vector<bool> reachable(dfa.states, false);
  std::deque<std::size_t> queue{dfa.initial};
  reachable[dfa.initial] = true;
  while (!queue.empty()) {
    const auto q = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < k; ++s) {
      const auto t = dfa.next(q, s);
      if (!reachable[t]) {
        reachable[t] = true;
        queue.push_back(t);
      }
    }
  }

  // Refine until the number of blocks stops growing.
  std::vector<std::size_t> block(dfa.states, 0);
  for (std::size_t q = 0; q < dfa.states; ++q) block[q] = dfa.accepting[q] ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next_block(dfa.states, 0);
    for (std::size_t q = 0; q < dfa.states; ++q) {
      if (!reachable[q]) continue;
      std::vector<std::size_t> signature{block[q]};
      for (std::size_t s = 0; s < k; ++s) signature.push_back(block[dfa.next(q, s)]);
      next_block[q] = ids.emplace(std::move(signature), ids.size()).first->second;
    }
    block = std::move(next_block);
    if (ids.size() == count) break;
    count = ids.size();
  }

  std::vector<std::size_t> representative(count, dfa.states);
  for (std::size_t q = 0; q < dfa.states; ++q) {
    if (reachable[q] && representative[block[q]] == dfa.states) representative[block[q]] = q;
  }
  std::vector<std::size_t> number(count, count);
  std::vector<std::size_t> order;
  number[block[dfa.initial]] = 0;
  order.push_back(block[dfa.initial]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto q = representative[order[i]];
    for (std::size_t s = 0; s < k; ++s) {
      const auto b = block[dfa.next(q, s)];
      if (number[b] == count) {
        number[b] = order.size();
        order.push_back(b);
      }
    }
  }

  Dfa out;
  out.alphabet = dfa.alphabet;
  out.states = order.size();
  out.initial = 0;
  for (const auto b : order) {
    const auto q = representative[b];
    out.accepting.push_back(dfa.accepting[q]);
    for (std::size_t s = 0; s < k; ++s) out.transition.push_back(number[block[dfa.next(q, s)]]);
  }
  return out;
}

FiniteMonoid transition_monoid(const Dfa& dfa) {
  std::vector<Transformation> generators;
  for (std::size_t s = 0; s < dfa.alphabet.size(); ++s) {
    Transformation t(dfa.states);
    for (std::size_t q = 0; q < dfa.states; ++q) t[q] = static_cast<std::uint32_t>(dfa.next(q, s));
    generators.push_back(std::move(t));
  }
  auto closure = transformation_closure(dfa.states, generators);
  std::vector<std::string> names;
  for (const auto& word : closure.words) {
    std::string name;
    for (auto g : word) name += dfa.alphabet[g];
    names.push_back(name.empty() ? "1" : name);
  }
  if (std::count(names.begin(), names.end(), "1") > 1) names[closure.monoid.identity()] = "()";
  FiniteSemigroup semigroup(trusted, std::move(names), closure.monoid.semigroup().table());
  return FiniteMonoid(std::move(semigroup), closure.monoid.identity());
}

FiniteMonoid syntactic_monoid(const Dfa& dfa) { return transition_monoid(minimize_dfa(dfa)); }

FiniteMonoid syntactic_monoid(const Regex& regex, std::string_view alphabet) {
  return syntactic_monoid(regex_to_dfa(regex, alphabet));
}

bool is_star_free(const Dfa& dfa) {
  return is_aperiodic(syntactic_monoid(dfa), AperiodicityMethod::All).aperiodic;
}

bool is_star_free(const Regex& regex, std::string_view alphabet) {
  return is_star_free(regex_to_dfa(regex, alphabet));
}

Dfa parse_dfa(std::string_view text) {
  std::vector<std::string> states;
  std::string alphabet;
  std::optional<std::string> initial;
  std::vector<std::string> accepting;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> moves;
  bool saw_states = false, saw_alphabet = false, saw_accepting = false;
  for (const auto& line : text::content_lines(text)) {
    std::string_view rest;
    if (text::take_key(line.content, "states", rest)) {
      states = text::split_whitespace(rest);
      saw_states = true;
    } else if (text::take_key(line.content, "alphabet", rest)) {
      for (const auto& token : text::split_whitespace(rest)) alphabet += token;
      saw_alphabet = true;
    } else if (text::take_key(line.content, "initial", rest)) {
      initial = std::string(rest);
    } else if (text::take_key(line.content, "accepting", rest)) {
      accepting = text::split_whitespace(rest);
      saw_accepting = true;
    } else {
      auto tokens = text::split_whitespace(line.content);
      if (tokens.size() != 4 || tokens[2] != "->" || tokens[1].size() != 1) {
        throw dfa_error(line.number, "expected 'q x -> q'");
      }
      moves.emplace_back(line.number, std::move(tokens));
    }
  }
  if (!saw_states || states.empty()) throw dfa_error(1, "missing 'states:'");
  if (!saw_alphabet) throw dfa_error(1, "missing 'alphabet:'");
  if (!initial) throw dfa_error(1, "missing 'initial:'");
  if (!saw_accepting) throw dfa_error(1, "missing 'accepting:'");

  std::map<std::string, std::size_t> number;
  for (const auto& s : states) {
    if (!number.emplace(s, number.size()).second) throw dfa_error(1, "duplicate state " + s);
  }
  auto state = [&](const std::string& name, std::size_t line) {
    const auto it = number.find(name);
    if (it == number.end()) throw dfa_error(line, "unknown state " + name);
    return it->second;
  };
  const auto k = alphabet.size();
  const auto n = states.size();
  const auto sink = n;
  Dfa dfa;
  dfa.alphabet = alphabet;
  dfa.transition.assign((n + 1) * k, sink);
  dfa.initial = state(*initial, 1);
  dfa.accepting.assign(n + 1, false);
  for (const auto& s : accepting) dfa.accepting[state(s, 1)] = true;
  std::vector<bool> set((n + 1) * k, false);
  for (const auto& [line, tokens] : moves) {
    const auto from = state(tokens[0], line);
    const auto symbol = alphabet.find(tokens[1][0]);
    if (symbol == std::string::npos) throw dfa_error(line, "symbol not in alphabet");
    const auto slot = from * k + symbol;
    if (set[slot]) throw dfa_error(line, "duplicate transition");
    set[slot] = true;
    dfa.transition[slot] = state(tokens[3], line);
  }
  const bool complete = std::all_of(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(n * k),
                                    [](bool b) { return b; });
  dfa.states = complete ? n : n + 1;
  dfa.transition.resize(dfa.states * k);
  dfa.accepting.resize(dfa.states);
  return dfa;
}

std::string format_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "states:";
  for (std::size_t q = 0; q < dfa.states; ++q) out << ' ' << q;
  out << "\nalphabet:";
  for (char c : dfa.alphabet) out << ' ' << c;
  out << "\ninitial: " << dfa.initial << "\naccepting:";
  for (std::size_t q = 0; q < dfa.states; ++q) {
    if (dfa.accepting[q]) out << ' ' << q;
  }
  out << '\n';
  for (std::size_t q = 0; q < dfa.states; ++q) {
    for (std::size_t s = 0; s < dfa.alphabet.size(); ++s) {
      out << q << ' ' << dfa.alphabet[s] << " -> " << dfa.next(q, s) << '\n';
    }
  }
  return out.str();
}

Dfa read_dfa_file(const std::filesystem::path& path) { return parse_dfa(read_text_file(path)); }

}  // namespace monoidlab
