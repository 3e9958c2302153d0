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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoidlab/element_set.hpp"
#include "monoidlab/semigroup.hpp"

namespace monoidlab {

/// A nonempty chain of principal right ideals, stored as sorted indices into
/// YSpace::ideals(). Because ideals are listed by size, ascending indices
/// follow inclusion.
using ChainSet = std::vector<std::size_t>;

/// A word over chains; equal words are taken modulo deleting a letter that
/// is <=_Y one of its neighbours.
using YWord = std::vector<ChainSet>;

struct ConfluenceResult {
  bool confluent = true;
  std::size_t windows_checked = 0;
  /// On failure: the window and two of its reducts without a common descendant.
  YWord window;
  YWord left;
  YWord right;
};

class YSpace {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  explicit YSpace(FiniteMonoid m);

  const FiniteMonoid& monoid() const noexcept { return monoid_; }

  /// X(M), listed by size then members.
  const std::vector<ElementSet>& ideals() const noexcept { return ideals_; }
  /// Index of aM in ideals().
  std::size_t ideal_of(Element a) const { return ideal_of_[a]; }
  /// Index of the ideal mI for I = ideals()[ideal].
  std::size_t act_ideal(Element m, std::size_t ideal) const {
    return action_[m * ideals_.size() + ideal];
  }

  /// All nonempty chains, in lexicographic order of their index lists.
  /// Throws TooLarge once more than `cap` chains have been produced.
  std::vector<ChainSet> elements(std::size_t cap = kDefaultCap) const;

  /// The chain of all ideals if X(M) is linear, otherwise the first
  /// longest chain containing M.
  ChainSet top() const;

  bool is_chain(const ChainSet& x) const;
  bool leq(const ChainSet& x, const ChainSet& y) const;

  /// {maM : aM in x}. Throws NotAChain if the image is not a chain.
  ChainSet act(Element m, const ChainSet& x) const;

  /// Deletes the leftmost deletable letter until none is left.
  YWord normalize(YWord w) const;

  /// Every word reachable by deletions, including w itself.
  std::vector<YWord> descendants(const YWord& w, std::size_t cap = 100'000) const;

  /// Checks every word of two and three letters for local confluence.
  ConfluenceResult check_confluence(std::size_t cap = kDefaultCap) const;

  /// Equality of normal forms when `certificate` is confluent. Otherwise
  /// the words are equal if they share a descendant; if not, the answer is
  /// unknown and ConfluenceUnverified is thrown.
  bool words_equal(const YWord& a, const YWord& b, const ConfluenceResult& certificate) const;
  bool words_equal(const YWord& a, const YWord& b) const;

  /// normalize([m0 y, ..., mn y]).
  YWord wedge(std::span<const Element> ms, const ChainSet& y) const;

  std::string format(const ChainSet& x) const;
  std::string format(const YWord& w) const;

 private:
  std::optional<std::size_t> deletable(const YWord& w) const;

  FiniteMonoid monoid_;
  std::vector<ElementSet> ideals_;
  std::vector<std::size_t> ideal_of_;
  std::vector<std::size_t> action_;
};

/// For linear X(M): a X(M) = {xM : xM ⊆ aM} for every a. Returns the first
/// a for which it fails. Throws PreconditionViolated when X(M) is not linear.
std::optional<Element> fact_44_failure(const FiniteMonoid& m);
bool verify_fact_44(const FiniteMonoid& m);

}  // namespace monoidlab
