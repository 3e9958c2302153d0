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

#include <algorithm>
#include <concepts>
#include <utility>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/element_set.hpp"
#include "monoidlab/semigroup.hpp"
#include "monoidlab/yspace.hpp"

namespace monoidlab {

/// A left action of a finite monoid on a finite set of points.
class MonoidAction {
 public:
  virtual ~MonoidAction() = default;

  virtual const FiniteMonoid& monoid() const = 0;
  virtual std::size_t point_count() const = 0;
  virtual Element act(Element m, Element point) const = 0;
  virtual std::string point_name(Element point) const { return std::to_string(point); }
};

/// A monoid acting on a finite semigroup U. Implementations must make every
/// act(m, .) an endomorphism of U.
class ActionSystem : public MonoidAction {
 public:
  virtual Element product(Element u, Element v) const = 0;
  /// A set generating U as a semigroup. Defaults to all of U.
  virtual std::vector<Element> space_generators() const;
};

/// The semigroup U of an action system, usable with the templates below.
class SpaceView {
 public:
  explicit SpaceView(const ActionSystem& system) : system_(&system) {}
  std::size_t size() const { return system_->point_count(); }
  Element product(Element u, Element v) const { return system_->product(u, v); }
  std::vector<Element> generators() const { return system_->space_generators(); }

 private:
  const ActionSystem* system_;
};

template <typename S>
concept SemigroupLike = requires(const S& s, Element a) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.product(a, a) } -> std::convertible_to<Element>;
};

/// Throws InvalidAction with a witness if 1 does not act trivially or
/// (mn).p differs from m.(n.p).
void check_action_laws(const MonoidAction& action);
/// Throws InvalidAction if some m.(uv) differs from (m.u)(m.v).
void check_endomorphisms(const ActionSystem& system);

/// Action of M on itself by left multiplication (a set action only).
class LeftMultiplicationAction final : public MonoidAction {
 public:
  explicit LeftMultiplicationAction(FiniteMonoid m) : monoid_(std::move(m)) {}
  const FiniteMonoid& monoid() const override { return monoid_; }
  std::size_t point_count() const override { return monoid_.size(); }
  Element act(Element m, Element p) const override { return monoid_.product(m, p); }
  std::string point_name(Element p) const override { return monoid_.name(p); }

 private:
  FiniteMonoid monoid_;
};

/// U = the elements of M with uv = v, acted on by left multiplication.
/// Every map is an endomorphism of a right-zero semigroup.
class RightZeroSelfAction final : public ActionSystem {
 public:
  explicit RightZeroSelfAction(FiniteMonoid m) : monoid_(std::move(m)) {}
  const FiniteMonoid& monoid() const override { return monoid_; }
  std::size_t point_count() const override { return monoid_.size(); }
  Element act(Element m, Element u) const override { return monoid_.product(m, u); }
  Element product(Element, Element v) const override { return v; }
  std::string point_name(Element u) const override { return monoid_.name(u); }

 private:
  FiniteMonoid monoid_;
};

/// U = nonempty words over M of length at most L plus an absorbing element
/// standing for every longer word; concatenation past L gives the absorber.
/// M acts letterwise. Points are encoded, no table is stored.
class TruncatedWordAction final : public ActionSystem {
 public:
  TruncatedWordAction(FiniteMonoid m, std::size_t max_length);

  const FiniteMonoid& monoid() const override { return monoid_; }
  std::size_t point_count() const override { return absorber_ + 1; }
  Element act(Element m, Element u) const override;
  Element product(Element u, Element v) const override;
  std::vector<Element> space_generators() const override;
  std::string point_name(Element u) const override;

  Element absorber() const { return absorber_; }
  Element encode(const std::vector<Element>& word) const;
  std::vector<Element> decode(Element u) const;

 private:
  FiniteMonoid monoid_;
  std::size_t max_length_;
  std::vector<Element> offset_;  // offset_[l] = code of the first word of length l
  Element absorber_;
};

/// An action given by an explicit table over a validated semigroup U.
class TableActionSystem final : public ActionSystem {
 public:
  /// table[m * |U| + u] = m.u. Validates both action laws and the
  /// endomorphism law; throws InvalidAction.
  TableActionSystem(FiniteMonoid m, FiniteSemigroup space, std::vector<Element> table);

  const FiniteMonoid& monoid() const override { return monoid_; }
  const FiniteSemigroup& space() const { return space_; }
  std::size_t point_count() const override { return space_.size(); }
  Element act(Element m, Element u) const override { return table_[m * space_.size() + u]; }
  Element product(Element u, Element v) const override { return space_.product(u, v); }
  std::string point_name(Element u) const override { return space_.name(u); }

 private:
  FiniteMonoid monoid_;
  FiniteSemigroup space_;
  std::vector<Element> table_;
};

/// The .act format: optional "monoid: <path>" and "space: <path>" lines,
/// then lines "m u -> u'" covering every pair.
struct ActFile {
  std::optional<std::string> monoid_path;
  std::optional<std::string> space_path;
  std::vector<Element> table;
};

ActFile parse_act(std::string_view text, const FiniteMonoid& m, const FiniteSemigroup& space);
std::string format_act(const TableActionSystem& system);

// ---------------------------------------------------------------------------
// Idempotents and the kernel of a finite semigroup.

template <SemigroupLike S>
std::vector<Element> idempotents(const S& s) {
  std::vector<Element> out;
  for (Element u = 0; u < s.size(); ++u) {
    if (s.product(u, u) == u) out.push_back(u);
  }
  return out;
}

/// u <= v iff uv = u = vu.
template <SemigroupLike S>
bool idem_leq(const S& s, Element u, Element v) {
  return s.product(u, v) == u && s.product(v, u) == u;
}

/// The first, in element order, of the <=-minimal idempotents below v among
/// `candidates` (v itself always counts). Throws NotIdempotent.
template <SemigroupLike S>
Element minimal_below(const S& s, Element v, const std::vector<Element>& candidates) {
  if (s.product(v, v) != v) {
    throw Error(ErrorKind::NotIdempotent, "element " + std::to_string(v) + " is not idempotent",
                {v});
  }
  std::vector<Element> below{v};
  for (Element u : candidates) {
    if (u != v && s.product(u, u) == u && idem_leq(s, u, v)) below.push_back(u);
  }
  std::sort(below.begin(), below.end());
  for (Element u : below) {
    const bool minimal = std::none_of(below.begin(), below.end(), [&](Element w) {
      return w != u && idem_leq(s, w, u);
    });
    if (minimal) return u;
  }
  return v;  // unreachable: a finite order has minimal elements
}

template <SemigroupLike S>
Element minimal_below(const S& s, Element v) {
  return minimal_below(s, v, idempotents(s));
}

template <SemigroupLike S>
std::vector<Element> generators_of(const S& s) {
  if constexpr (requires { s.generators(); }) {
    return s.generators();
  } else {
    std::vector<Element> all(s.size());
    for (Element u = 0; u < all.size(); ++u) all[u] = u;
    return all;
  }
}

/// The minimal two-sided ideal: the ideal generated by a minimal
/// idempotent, found by closing it under multiplication by generators.
template <SemigroupLike S>
ElementSet kernel(const S& s) {
  const auto idems = idempotents(s);
  const Element e = minimal_below(s, idems.front(), idems);
  const auto gens = generators_of(s);
  ElementSet seen(s.size());
  std::vector<Element> stack{e};
  seen.set(e);
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (Element g : gens) {
      for (Element y : {s.product(x, g), s.product(g, x)}) {
        if (!seen.test(y)) {
          seen.set(y);
          stack.push_back(y);
        }
      }
    }
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Controlled idempotents and witnesses.

/// m(U) as a set of points.
ElementSet image(const MonoidAction& action, Element m);

/// For a R b, a != b in an aperiodic monoid with linear X_R(M): g, h with
/// ag = b, bh = a, gh = h, hg = g. Each is chosen among its candidates with
/// an inclusion-minimal xM, ties broken by element order. Throws
/// PreconditionViolated or PostconditionFailed.
std::pair<Element, Element> lemma_witnesses(const FiniteMonoid& m, Element a, Element b);

struct ControlledIdempotent {
  Element u;
  /// Representatives a_0, ..., a_n of X_R(M) in increasing order, then 1.
  std::vector<Element> anchors;
  /// The idempotent chosen at each anchor; the last one is u.
  std::vector<Element> steps;
};

/// Walks X_R(M) upwards, taking at each anchor a a minimal idempotent of
/// a(U) below the previous one. Verifies that u is an idempotent of the
/// kernel with a(u) = b(u) whenever a R b; throws PreconditionViolated or
/// PostconditionFailed.
ControlledIdempotent find_controlled_idempotent(const ActionSystem& system);

/// For all a R b and every point p of a(U): a.p = b.p. Returns the first
/// failing (a, b, p). Throws PreconditionViolated.
std::optional<std::vector<Element>> corollary_35_failure(const MonoidAction& action);
bool verify_corollary_35(const MonoidAction& action);

/// aM ⊆ bM implies a(U) ⊆ b(U). Returns the first failing (a, b).
std::optional<std::vector<Element>> image_inclusion_failure(const MonoidAction& action);

/// Within each R-class, bc = c for one pair implies it for all pairs.
/// Returns a failing (b, c, b', c').
std::optional<std::vector<Element>> class_product_failure(const FiniteMonoid& m);

/// A map from Y(M) to idempotents of U. value(x) folds the chain
/// I_1 ⊊ ... ⊊ I_k from the bottom: v_1 = f(I_1), v_j = (v w)^ω v with
/// v = v_{j-1} and w = f(I_j), where f(aM) = a(u).
struct GoodWitness {
  std::vector<ChainSet> chains;
  std::vector<Element> values;
  Element u;

  Element at(const ChainSet& x) const;
};

/// Builds the witness from u and checks it exhaustively over Y(M): values
/// are idempotent, the map is M-equivariant and order-reversing, and chains
/// containing M land in the kernel. Throws WitnessInvariantFailed.
GoodWitness build_good_witness(const ActionSystem& system, Element u,
                               std::size_t cap = YSpace::kDefaultCap);
GoodWitness build_good_witness(const ActionSystem& system, std::size_t cap = YSpace::kDefaultCap);

/// v^k for the least k >= 1 making it idempotent.
Element omega_power(const ActionSystem& system, Element v);

}  // namespace monoidlab
