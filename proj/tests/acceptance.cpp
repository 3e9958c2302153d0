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
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monoidlab/classify.hpp"
#include "monoidlab/corpus.hpp"
#include "monoidlab/dynamics.hpp"
#include "monoidlab/families.hpp"
#include "monoidlab/green.hpp"
#include "monoidlab/isomorphism.hpp"
#include "monoidlab/oracle.hpp"
#include "monoidlab/syntactic.hpp"
#include "monoidlab/yspace.hpp"
#include "oracles.hpp"

using namespace monoidlab;

namespace {

// Collects the first few reasons a criterion failed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    " + f;
    if (count_ > failures_.size()) out += "\n    (" + std::to_string(count_) + " failures)";
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

const std::vector<CorpusEntry>& corpus() {
  static const auto entries = build_corpus();
  return entries;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_1(Check& c) {
  auto start = std::chrono::steady_clock::now();
  const auto one = classify(table1());
  c.expect(seconds_since(start) < 1.0, "table1 took over a second");
  c.expect(one.aperiodic, "table1 aperiodic");
  c.expect(one.x_linear, "table1 x_linear");
  c.expect(one.ramsey, "table1 ramsey");
  start = std::chrono::steady_clock::now();
  const auto two = classify(table2());
  c.expect(seconds_since(start) < 1.0, "table2 took over a second");
  c.expect(two.aperiodic, "table2 aperiodic");
  c.expect(!two.xr_linear, "table2 xr_linear=false");
  c.expect(two.y_controllable == YControllability{YVerdict::Yes, "Prop7.1"}, "table2 verdict");
  c.expect(!two.ramsey, "table2 ramsey=false");
}

void criterion_2(Check& c) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto m = i_monoid(k);
    c.expect(m.size() == (std::size_t{1} << (k - 1)), "|I_" + std::to_string(k) + "|");
    c.expect(classify(m).ramsey == (k <= 3), "I_" + std::to_string(k) + " ramsey");
  }
}

void criterion_3(Check& c) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = classify(cyclic(n));
    c.expect(!r.ramsey, "cyclic " + std::to_string(n) + " ramsey");
    c.expect(r.y_controllable.verdict == YVerdict::No, "cyclic " + std::to_string(n) + " verdict");
  }
}

void criterion_4(Check& c) {
  for (const auto& e : corpus()) {
    const bool want = oracle::aperiodic(e.monoid);
    const auto green = green_classes(e.monoid);
    for (auto method : {AperiodicityMethod::Power, AperiodicityMethod::Cancel,
                        AperiodicityMethod::RRigid, AperiodicityMethod::HTrivial,
                        AperiodicityMethod::NoSubgroup}) {
      c.expect(is_aperiodic(e.monoid, green, method).aperiodic == want,
               e.name + ": " + std::string(to_string(method)));
    }
    c.expect(is_aperiodic(e.monoid).aperiodic == want, e.name + ": all");
  }
}

void criterion_5(Check& c) {
  for (const auto& e : corpus()) {
    const auto& m = e.monoid;
    const auto r = classify(m);
    if (oracle::almost_r_trivial(m)) {
      c.expect(r.almost_r_trivial, e.name + ": almost R-trivial flag");
      c.expect(oracle::aperiodic(m) && oracle::xr_linear(m), e.name + ": almost R-trivial implication");
    }
    if (oracle::x_linear(m)) {
      c.expect(oracle::aperiodic(m) == oracle::l_trivial(m), e.name + ": aperiodic iff L-trivial");
      c.expect(r.aperiodic == r.l_trivial, e.name + ": report aperiodic iff L-trivial");
      for (const auto& check : check_linear_structure(m)) {
        c.expect(check.passed, e.name + ": " + check.name);
      }
    }
  }
}

void criterion_6(Check& c) {
  const auto m = direct_product(gowers(3), carlson1({"x", "y"}));
  const auto r = classify(m);
  c.expect(r.aperiodic && oracle::aperiodic(m), "aperiodic");
  c.expect(r.xr_linear && oracle::xr_linear(m), "xr_linear");
  c.expect(!r.almost_r_trivial && !oracle::almost_r_trivial(m), "almost_r_trivial=false");
}

// u is idempotent, lies in the kernel and is fixed across R-classes.
void check_controlled(Check& c, const std::string& name, const ActionSystem& system, Element u,
                      bool right_zero) {
  const auto& m = system.monoid();
  c.expect(system.product(u, u) == u, name + ": u idempotent");
  // A right-zero semigroup is its own kernel.
  if (!right_zero) {
    // The absorber is a zero, so it alone forms the kernel.
    const auto& words = dynamic_cast<const TruncatedWordAction&>(system);
    c.expect(u == words.absorber(), name + ": u in kernel");
  }
  for (Element a : m.elements())
    for (Element b : m.elements())
      if (oracle::r_related(m, a, b)) c.expect(system.act(a, u) == system.act(b, u), name + ": a(u)=b(u)");
}

void criterion_7(Check& c) {
  std::size_t qualifying = 0;
  for (const auto& e : corpus()) {
    const auto& m = e.monoid;
    if (!oracle::aperiodic(m) || !oracle::xr_linear(m)) continue;
    ++qualifying;
    const RightZeroSelfAction rz(m);
    const TruncatedWordAction words(m, 3);
    for (const auto& [system, right_zero] :
         {std::pair<const ActionSystem*, bool>{&rz, true}, {&words, false}}) {
      try {
        const auto u = find_controlled_idempotent(*system).u;
        check_controlled(c, e.name, *system, u, right_zero);
        build_good_witness(*system, u);
        c.expect(verify_corollary_35(*system), e.name + ": class images");
      } catch (const Error& err) {
        c.expect(false, e.name + ": " + err.what());
      }
    }
    for (Element a : m.elements()) {
      for (Element b : m.elements()) {
        if (a == b || !oracle::r_related(m, a, b)) continue;
        const auto [g, h] = lemma_witnesses(m, a, b);
        c.expect(m.product(a, g) == b && m.product(b, h) == a && m.product(g, h) == h &&
                     m.product(h, g) == g,
                 e.name + ": witness pair");
      }
    }
  }
  c.expect(qualifying > 0, "no qualifying corpus monoid");
}

void criterion_8(Check& c) {
  for (std::size_t n : {2, 3}) {
    const auto m = cyclic(n);
    for (std::size_t l = 1; l <= 5; ++l) {
      c.expect(verify_adversarial(m, m.element("g"), l),
               "cyclic " + std::to_string(n) + " L=" + std::to_string(l));
    }
  }
}

// The orbit {m y0 y1} is recomputed here and must be single-colored, and
// both words must be variable.
bool independently_monochromatic(const FiniteMonoid& m, const PairWitness& w, const Coloring& col) {
  auto variable = [&](const Word& y) {
    return std::find(y.begin(), y.end(), m.identity()) != y.end();
  };
  if (!variable(w.y0) || !variable(w.y1)) return false;
  std::set<Color> colors;
  for (Element a : m.elements()) {
    Word x;
    for (Element l : w.y0) x.push_back(m.product(a, l));
    x.insert(x.end(), w.y1.begin(), w.y1.end());
    colors.insert(col(x));
  }
  return colors.size() == 1;
}

void criterion_9(Check& c) {
  const auto g2 = gowers(2);
  const auto parity = Coloring::from_function(
      [](std::span<const Element> w) { return static_cast<Color>(std::count(w.begin(), w.end(), 1) % 2); },
      3, "parity");
  const auto found = search_mono_pair(g2, parity, 3);
  c.expect(found && found->y0 == Word{0, 0} && found->y1 == Word{0}, "gowers(2) parity witness");
  if (found) c.expect(independently_monochromatic(g2, *found, parity), "parity re-verification");

  const auto t1 = table1();
  // Color by the last letter; the right factor is never moved.
  const auto last = Coloring::from_function(
      [](std::span<const Element> w) { return w.empty() ? kBottom : static_cast<Color>(w.back()); },
      4, "last letter");
  const auto a = search_mono_pair(t1, last, 4);
  c.expect(a.has_value(), "table1 last-letter witness");
  if (a) c.expect(independently_monochromatic(t1, *a, last), "last-letter re-verification");

  const auto g3 = gowers(3);
  // Color by whether the top element 2 occurs.
  const auto top = Coloring::from_function(
      [](std::span<const Element> w) { return static_cast<Color>(std::count(w.begin(), w.end(), 2) > 0); },
      4, "has top");
  const auto b = search_mono_pair(g3, top, 4);
  c.expect(b.has_value(), "gowers(3) top witness");
  if (b) c.expect(independently_monochromatic(g3, *b, top), "top re-verification");
}

void criterion_10(Check& c) {
  const std::string s = "(g|h)*h|(g|h)*a(g|h)*g|(a|g|h)*a(a|g|h)*a(a|g|h)*";
  const auto r = parse_regex(s, "agh");
  const auto m = syntactic_monoid(r, "agh");
  c.expect(m.size() == 6, "|syntactic monoid| = 6");
  c.expect(find_isomorphism(m, table1()).has_value(), "isomorphic to table1");
  c.expect(is_star_free(r, "agh"), "S star-free");
  c.expect(!is_star_free(parse_regex("(aa)*", "a"), "a"), "(aa)* not star-free");
  const auto dfa = minimize_dfa(regex_to_dfa(r, "agh"));
  for (const auto& w : oracle::all_words("agh", 6)) {
    c.expect(dfa.accepts(w) == oracle::in_s(w), "membership of '" + w + "'");
  }
}

// Deletion closure computed independently of the library's rewriting code.
std::set<YWord> closure(const YSpace& y, const YWord& w) {
  auto below = [&](const ChainSet& p, const ChainSet& q) {
    for (auto i : p)
      if (std::find(q.begin(), q.end(), i) == q.end()) return false;
    for (auto j : q) {
      if (std::find(p.begin(), p.end(), j) != p.end()) continue;
      for (auto i : p)
        if (!y.ideals()[i].is_proper_subset_of(y.ideals()[j])) return false;
    }
    return true;
  };
  std::set<YWord> seen{w};
  std::vector<YWord> todo{w};
  while (!todo.empty()) {
    const auto cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!((i > 0 && below(cur[i], cur[i - 1])) || (i + 1 < cur.size() && below(cur[i], cur[i + 1]))))
        continue;
      auto next = cur;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

void criterion_11(Check& c) {
  std::vector<const CorpusEntry*> small;
  for (const auto& e : corpus()) {
    const YSpace y(e.monoid);
    if (y.ideals().size() > 5) continue;
    small.push_back(&e);
    c.expect(y.check_confluence().confluent, e.name + ": confluence");
  }
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> pick_monoid(0, small.size() - 1), length(1, 4);
  for (int i = 0; i < 500; ++i) {
    const auto& e = *small[pick_monoid(rng)];
    const YSpace y(e.monoid);
    const auto chains = y.elements();
    std::uniform_int_distribution<std::size_t> pick(0, chains.size() - 1);
    auto word = [&] {
      YWord w(length(rng));
      for (auto& l : w) l = chains[pick(rng)];
      return w;
    };
    const auto a = word();
    const auto b = word();
    const auto ca = closure(y, a), cb = closure(y, b);
    bool joint = false;
    for (const auto& w : ca) joint = joint || cb.count(w) > 0;
    c.expect(y.words_equal(a, b) == joint, e.name + ": pair " + std::to_string(i));
  }
}

void criterion_12(Check& c) {
  std::mt19937_64 rng(44);
  for (const auto& e : corpus()) {
    const auto& m = e.monoid;
    if (!oracle::x_linear(m)) continue;
    c.expect(verify_fact_44(m), e.name + ": ideal images");
    const YSpace y(m);
    const auto top = y.top();
    auto check = [&](const std::vector<Element>& ms) {
      c.expect(y.wedge(ms, top) == YWord{top}, e.name + ": wedge");
    };
    const Element one = m.identity();
    for (Element a : m.elements()) {
      check({a, one});
      check({one, a});
    }
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(m.size() - 1));
    for (int i = 0; i < 50; ++i) check({pick(rng), one, pick(rng), pick(rng)});
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"six- and five-element tables classify as expected", criterion_1},
      {"i_monoid(k) is Ramsey exactly for k <= 3", criterion_2},
      {"cyclic groups are neither Ramsey nor controllable", criterion_3},
      {"aperiodicity tests agree on the corpus", criterion_4},
      {"implications and linear structure on the corpus", criterion_5},
      {"gowers(3) x carlson1 classification", criterion_6},
      {"controlled idempotents and good witnesses", criterion_7},
      {"adversarial coloring on cyclic groups", criterion_8},
      {"monochromatic pair search on fixed colorings", criterion_9},
      {"syntactic monoid of S and star-freeness", criterion_10},
      {"confluence and word equality", criterion_11},
      {"ideal images and wedges for linear families", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
         << static_cast<int>(seconds_since(start) * 1000) << " ms)";
    std::cout << line.str() << c.summary() << std::endl;
    if (!c.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
