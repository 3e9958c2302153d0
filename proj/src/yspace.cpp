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
#include "monoidlab/yspace.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace monoidlab {

namespace {

// Letters as indices into a fixed list of chains; leq is the full <=_Y
// matrix over that list.
using IndexWord = std::vector<std::size_t>;

std::vector<IndexWord> one_step(const IndexWord& w, const std::vector<std::vector<bool>>& leq) {
  std::vector<IndexWord> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool left = i > 0 && leq[w[i]][w[i - 1]];
    const bool right = i + 1 < w.size() && leq[w[i]][w[i + 1]];
    if (!left && !right) continue;
    IndexWord next = w;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(std::move(next));
  }
  return out;
}

std::set<IndexWord> closure(const IndexWord& w, const std::vector<std::vector<bool>>& leq) {
  std::set<IndexWord> seen{w};
  std::deque<IndexWord> queue{w};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    for (auto& next : one_step(current, leq)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

bool share_element(const std::set<IndexWord>& a, const std::set<IndexWord>& b) {
  return std::any_of(a.begin(), a.end(), [&](const IndexWord& w) { return b.count(w) > 0; });
}

}  // namespace

YSpace::YSpace(FiniteMonoid m) : monoid_(std::move(m)) {
  const auto n = monoid_.size();
  std::vector<ElementSet> right(n, ElementSet(n));
  for (Element a : monoid_.elements()) {
    for (Element x : monoid_.elements()) right[a].set(monoid_.product(a, x));
  }
  ideals_ = right;
  std::sort(ideals_.begin(), ideals_.end(), set_order_less);
  ideals_.erase(std::unique(ideals_.begin(), ideals_.end()), ideals_.end());

  ideal_of_.resize(n);
  std::vector<Element> representative(ideals_.size(), 0);
  for (Element a : monoid_.elements()) {
    const auto it = std::lower_bound(ideals_.begin(), ideals_.end(), right[a], set_order_less);
    ideal_of_[a] = static_cast<std::size_t>(it - ideals_.begin());
  }
  for (Element a = n; a-- > 0;) representative[ideal_of_[a]] = a;

  action_.resize(n * ideals_.size());
  for (Element m : monoid_.elements()) {
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
      action_[m * ideals_.size() + i] = ideal_of_[monoid_.product(m, representative[i])];
    }
  }
}

std::vector<ChainSet> YSpace::elements(std::size_t cap) const {
  std::vector<ChainSet> out;
  ChainSet current;
  // Chains are extended only by strictly larger ideals later in the list.
  auto extend = [&](auto& self) -> void {
    if (out.size() >= cap) {
      throw Error(ErrorKind::TooLarge, "Y(M) has more than " + std::to_string(cap) + " elements");
    }
    out.push_back(current);
    for (std::size_t j = current.back() + 1; j < ideals_.size(); ++j) {
      if (!ideals_[current.back()].is_proper_subset_of(ideals_[j])) continue;
      current.push_back(j);
      self(self);
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    current = {i};
    extend(extend);
  }
  return out;
}

ChainSet YSpace::top() const {
  ChainSet all(ideals_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (is_chain(all)) return all;
  ChainSet best;
  for (auto& chain : elements()) {
    if (chain.back() == ideals_.size() - 1 && chain.size() > best.size()) best = std::move(chain);
  }
  return best;
}

bool YSpace::is_chain(const ChainSet& x) const {
  if (x.empty()) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] >= x[i + 1] || !ideals_[x[i]].is_proper_subset_of(ideals_[x[i + 1]])) return false;
  }
  return x.back() < ideals_.size();
}

bool YSpace::leq(const ChainSet& x, const ChainSet& y) const {
  if (!std::includes(y.begin(), y.end(), x.begin(), x.end())) return false;
  for (std::size_t z : y) {
    if (std::binary_search(x.begin(), x.end(), z)) continue;
    for (std::size_t w : x) {
      if (!ideals_[w].is_proper_subset_of(ideals_[z])) return false;
    }
  }
  return true;
}

ChainSet YSpace::act(Element m, const ChainSet& x) const {
  ChainSet out;
  out.reserve(x.size());
  for (std::size_t i : x) out.push_back(act_ideal(m, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!is_chain(out)) {
    throw Error(ErrorKind::NotAChain, monoid_.name(m) + " maps " + format(x) + " to a non-chain",
                {m});
  }
  return out;
}

std::optional<std::size_t> YSpace::deletable(const YWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if ((i > 0 && leq(w[i], w[i - 1])) || (i + 1 < w.size() && leq(w[i], w[i + 1]))) return i;
  }
  return std::nullopt;
}

YWord YSpace::normalize(YWord w) const {
  while (auto i = deletable(w)) w.erase(w.begin() + static_cast<std::ptrdiff_t>(*i));
  return w;
}

std::vector<YWord> YSpace::descendants(const YWord& w, std::size_t cap) const {
  std::set<YWord> seen{w};
  std::deque<YWord> queue{w};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < current.size(); ++i) {
      const bool left = i > 0 && leq(current[i], current[i - 1]);
      const bool right = i + 1 < current.size() && leq(current[i], current[i + 1]);
      if (!left && !right) continue;
      YWord next = current;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw Error(ErrorKind::TooLarge, "descendant set exceeds cap");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

ConfluenceResult YSpace::check_confluence(std::size_t cap) const {
  const auto letters = elements(cap);
  const auto k = letters.size();
  std::vector<std::vector<bool>> order(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) order[i][j] = leq(letters[i], letters[j]);
  }
  ConfluenceResult result;
  auto to_word = [&](const IndexWord& w) {
    YWord out;
    for (std::size_t i : w) out.push_back(letters[i]);
    return out;
  };
  auto check = [&](const IndexWord& window) {
    ++result.windows_checked;
    const auto reducts = one_step(window, order);
    for (std::size_t i = 0; i < reducts.size(); ++i) {
      for (std::size_t j = i + 1; j < reducts.size(); ++j) {
        if (share_element(closure(reducts[i], order), closure(reducts[j], order))) continue;
        result = {false, result.windows_checked, to_word(window), to_word(reducts[i]),
                  to_word(reducts[j])};
        return false;
      }
    }
    return true;
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!check({a, b})) return result;
      for (std::size_t c = 0; c < k; ++c) {
        if (!check({a, b, c})) return result;
      }
    }
  }
  return result;
}

bool YSpace::words_equal(const YWord& a, const YWord& b, const ConfluenceResult& certificate) const {
  if (certificate.confluent) return normalize(a) == normalize(b);
  const auto da = descendants(a);
  const auto db = descendants(b);
  for (const auto& w : da) {
    if (std::binary_search(db.begin(), db.end(), w)) return true;
  }
  throw Error(ErrorKind::ConfluenceUnverified,
              format(a) + " and " + format(b) + " share no descendant and confluence failed");
}

bool YSpace::words_equal(const YWord& a, const YWord& b) const {
  return words_equal(a, b, check_confluence());
}

YWord YSpace::wedge(std::span<const Element> ms, const ChainSet& y) const {
  YWord w;
  w.reserve(ms.size());
  for (Element m : ms) w.push_back(act(m, y));
  return normalize(std::move(w));
}

std::string YSpace::format(const ChainSet& x) const {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += '{';
    const auto elements = members(ideals_[x[i]]);
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (j > 0) out += ',';
      out += monoid_.name(elements[j]);
    }
    out += '}';
  }
  return out + "}";
}

std::string YSpace::format(const YWord& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += " v ";
    out += format(w[i]);
  }
  return out;
}

std::optional<Element> fact_44_failure(const FiniteMonoid& m) {
  const YSpace space(m);
  const auto& ideals = space.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (!ideals[i].is_subset_of(ideals[j]) && !ideals[j].is_subset_of(ideals[i])) {
        throw Error(ErrorKind::PreconditionViolated, "X(M) is not linear");
      }
    }
  }
  for (Element a : m.elements()) {
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < ideals.size(); ++i) image.insert(space.act_ideal(a, i));
    std::set<std::size_t> below;
    const auto& aM = ideals[space.ideal_of(a)];
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (ideals[i].is_subset_of(aM)) below.insert(i);
    }
    if (image != below) return a;
  }
  return std::nullopt;
}

bool verify_fact_44(const FiniteMonoid& m) { return !fact_44_failure(m); }

}  // namespace monoidlab
