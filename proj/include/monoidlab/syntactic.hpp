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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/semigroup.hpp"

namespace monoidlab {

struct Regex {
  enum class Kind { EmptySet, Epsilon, Literal, Union, Concat, Star };

  Kind kind = Kind::EmptySet;
  char symbol = 0;
  std::vector<Regex> children;

  static Regex empty_set() { return {}; }
  static Regex epsilon() { return {Kind::Epsilon, 0, {}}; }
  static Regex literal(char c) { return {Kind::Literal, c, {}}; }

  bool operator==(const Regex&) const = default;
};

/// Grammar: union of concatenations of starred atoms; an atom is a symbol of
/// `alphabet`, a parenthesised expression, or "()" for the empty word.
/// Throws SyntaxError or UnknownSymbol, with the 0-based offset as position.
Regex parse_regex(std::string_view text, std::string_view alphabet);

/// Fully parenthesised rendering, mainly for diagnostics.
std::string to_string(const Regex& regex);

/// A complete deterministic automaton. transition[q * |alphabet| + i] is the
/// state reached from q on alphabet[i].
struct Dfa {
  std::size_t states = 0;
  std::string alphabet;
  std::vector<std::size_t> transition;
  std::size_t initial = 0;
  std::vector<bool> accepting;

  std::size_t next(std::size_t state, std::size_t symbol) const {
    return transition[state * alphabet.size() + symbol];
  }
  /// Throws UnknownSymbol for letters outside the alphabet.
  bool accepts(std::string_view word) const;

  bool operator==(const Dfa&) const = default;
};

/// Thompson construction followed by the subset construction. The empty
/// subset serves as the sink, so the result is complete.
Dfa regex_to_dfa(const Regex& regex, std::string_view alphabet);

/// Drops unreachable states, merges equivalent ones by partition
/// refinement and numbers states in breadth-first order from the initial
/// state, so equal languages give identical automata.
Dfa minimize_dfa(const Dfa& dfa);

/// The monoid of state maps induced by words, composed left to right.
/// Elements are named by their shortlex-least word, the identity by "1".
FiniteMonoid transition_monoid(const Dfa& dfa);

FiniteMonoid syntactic_monoid(const Dfa& dfa);
FiniteMonoid syntactic_monoid(const Regex& regex, std::string_view alphabet);

bool is_star_free(const Dfa& dfa);
bool is_star_free(const Regex& regex, std::string_view alphabet);

/// The .dfa format:
///   states: q0 q1 ...
///   alphabet: a b ...        (single characters)
///   initial: q0
///   accepting: q1 ...        (may be empty)
///   q0 a -> q1               (one line per transition)
/// Missing transitions go to an added sink state.
Dfa parse_dfa(std::string_view text);
std::string format_dfa(const Dfa& dfa);
Dfa read_dfa_file(const std::filesystem::path& path);

}  // namespace monoidlab
