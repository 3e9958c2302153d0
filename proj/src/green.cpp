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

#include "monoidlab/green.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace monoidlab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<ElementSet> quasi_order(const std::vector<ElementSet>& ideals) {
  const auto n = ideals.size();
  std::vector<ElementSet> leq(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (ideals[a].is_subset_of(ideals[b])) leq[a].set(b);
    }
  }
  return leq;
}

IdealFamily family_from(IdealKind kind, const GreenData& green) {
  std::vector<ElementSet> members;
  for (const auto& cls : green.r.classes) {
    if (kind == IdealKind::XR && cls.size() < 2) continue;
    members.push_back(green.right_ideals[cls.front()]);
  }
  std::sort(members.begin(), members.end(), set_order_less);
  const bool linear = is_chain(members);
  return {kind, std::move(members), linear};
}

}  // namespace

std::string_view to_string(GreenRelation relation) noexcept {
  switch (relation) {
    case GreenRelation::R: return "R";
    case GreenRelation::L: return "L";
    case GreenRelation::J: return "J";
    case GreenRelation::H: return "H";
    case GreenRelation::D: return "D";
  }
  return "?";
}

PrincipalIdeals principal_ideals(const FiniteMonoid& m, Element a) {
  const auto n = m.size();
  PrincipalIdeals out{ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Element x : m.elements()) {
    out.right.set(m.product(a, x));
    out.left.set(m.product(x, a));
  }
  for (Element x : m.elements()) {
    if (!out.left.test(x)) continue;
    for (Element y : m.elements()) out.two_sided.set(m.product(x, y));
  }
  return out;
}

const Partition& GreenData::classes(GreenRelation relation) const {
  switch (relation) {
    case GreenRelation::R: return r;
    case GreenRelation::L: return l;
    case GreenRelation::J: return j;
    case GreenRelation::H: return h;
    case GreenRelation::D: return d;
  }
  return r;
}

bool GreenData::leq(GreenRelation relation, Element a, Element b) const {
  switch (relation) {
    case GreenRelation::R: return leq_r[a].test(b);
    case GreenRelation::L: return leq_l[a].test(b);
    case GreenRelation::J:
    case GreenRelation::D: return leq_j[a].test(b);
    case GreenRelation::H: return leq_h[a].test(b);
  }
  return false;
}

GreenData green_classes(const FiniteMonoid& m) {
  const auto n = m.size();
  GreenData g;
  g.right_ideals.assign(n, ElementSet(n));
  g.left_ideals.assign(n, ElementSet(n));
  g.two_sided_ideals.assign(n, ElementSet(n));
  for (Element a : m.elements()) {
    for (Element x : m.elements()) {
      g.right_ideals[a].set(m.product(a, x));
      g.left_ideals[a].set(m.product(x, a));
    }
  }
  for (Element a : m.elements()) {
    const auto& left = g.left_ideals[a];
    for (auto x = left.find_first(); x != ElementSet::npos; x = left.find_next(x)) {
      g.two_sided_ideals[a] |= g.right_ideals[x];
    }
  }

  g.r = Partition::from_keys(g.right_ideals);
  g.l = Partition::from_keys(g.left_ideals);
  g.j = Partition::from_keys(g.two_sided_ideals);
  std::vector<std::pair<std::size_t, std::size_t>> h_keys(n);
  for (Element a : m.elements()) h_keys[a] = {g.r.class_of[a], g.l.class_of[a]};
  g.h = Partition::from_keys(h_keys);

  UnionFind uf(n);
  for (const auto* p : {&g.r, &g.l}) {
    for (const auto& cls : p->classes) {
      for (Element x : cls) uf.unite(cls.front(), x);
    }
  }
  std::vector<std::size_t> d_keys(n);
  for (Element a : m.elements()) d_keys[a] = uf.find(a);
  g.d = Partition::from_keys(d_keys);
  if (g.d != g.j) {
    for (Element a : m.elements()) {
      if (g.d.class_containing(a) != g.j.class_containing(a)) {
        throw Error(ErrorKind::DJMismatch, "D and J classes differ at " + m.name(a), {a});
      }
    }
  }

  g.leq_r = quasi_order(g.right_ideals);
  g.leq_l = quasi_order(g.left_ideals);
  g.leq_j = quasi_order(g.two_sided_ideals);
  g.leq_h.resize(n);
  for (Element a : m.elements()) g.leq_h[a] = g.leq_r[a] & g.leq_l[a];
  return g;
}

IdealFamily x_family(const GreenData& green) { return family_from(IdealKind::X, green); }
IdealFamily x_family(const FiniteMonoid& m) { return x_family(green_classes(m)); }
IdealFamily x_r_family(const GreenData& green) { return family_from(IdealKind::XR, green); }
IdealFamily x_r_family(const FiniteMonoid& m) { return x_r_family(green_classes(m)); }

bool is_chain(std::span<const ElementSet> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t k = i + 1; k < family.size(); ++k) {
      if (!family[i].is_subset_of(family[k]) && !family[k].is_subset_of(family[i])) return false;
    }
  }
  return true;
}

}  // namespace monoidlab
