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
#include "monoidlab/classify.hpp"

#include <sstream>

namespace monoidlab {

namespace {

std::optional<std::vector<Element>> power_failure(const FiniteMonoid& m) {
  for (Element a : m.elements()) {
    Element p = a;
    bool stable = false;
    for (std::size_t k = 1; k <= m.size() && !stable; ++k) {
      const Element next = m.product(p, a);
      stable = next == p;
      p = next;
    }
    if (!stable) return std::vector<Element>{a};
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> cancel_failure(const FiniteMonoid& m) {
  for (Element g : m.elements()) {
    for (Element a : m.elements()) {
      const Element ga = m.product(g, a);
      for (Element h : m.elements()) {
        if (m.product(ga, h) != a) continue;
        if (ga != a || m.product(a, h) != a) return std::vector<Element>{g, a, h};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> r_rigid_failure(const FiniteMonoid& m, const GreenData& green) {
  for (Element a : m.elements()) {
    for (Element b : m.elements()) {
      const Element ab = m.product(a, b);
      if (ab != b && green.r.related(ab, b)) return std::vector<Element>{a, b};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> nontrivial_class(const Partition& p) {
  for (const auto& cls : p.classes) {
    if (cls.size() > 1) return std::vector<Element>{cls[0], cls[1]};
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> subgroup_failure(const FiniteMonoid& m, const GreenData& green) {
  for (Element e : m.elements()) {
    if (!m.is_idempotent(e)) continue;
    for (Element x : green.h.class_containing(e)) {
      if (x != e) return std::vector<Element>{e, x};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> failure(const FiniteMonoid& m, const GreenData& green,
                                            AperiodicityMethod method) {
  switch (method) {
    case AperiodicityMethod::Power: return power_failure(m);
    case AperiodicityMethod::Cancel: return cancel_failure(m);
    case AperiodicityMethod::RRigid: return r_rigid_failure(m, green);
    case AperiodicityMethod::HTrivial: return nontrivial_class(green.h);
    case AperiodicityMethod::NoSubgroup: return subgroup_failure(m, green);
    case AperiodicityMethod::All: break;
  }
  return std::nullopt;
}

constexpr AperiodicityMethod kMethods[] = {
    AperiodicityMethod::Power,    AperiodicityMethod::Cancel,     AperiodicityMethod::RRigid,
    AperiodicityMethod::HTrivial, AperiodicityMethod::NoSubgroup,
};

// First pair of members of the family, indexed by representative element,
// whose ideals are incomparable.
std::optional<std::vector<Element>> incomparable_pair(const GreenData& green,
                                                      const std::vector<Element>& reps) {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = i + 1; k < reps.size(); ++k) {
      const auto& x = green.right_ideals[reps[i]];
      const auto& y = green.right_ideals[reps[k]];
      if (!x.is_subset_of(y) && !y.is_subset_of(x)) return std::vector<Element>{reps[i], reps[k]};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> almost_r_trivial_failure(const FiniteMonoid& m,
                                                             const GreenData& green) {
  for (const auto& cls : green.r.classes) {
    if (cls.size() < 2) continue;
    for (Element a : cls) {
      for (Element x : m.elements()) {
        if (m.product(x, a) != a) return std::vector<Element>{a, x};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> class_condition_failure(const FiniteMonoid& m,
                                                            const GreenData& green) {
  for (const auto& cls : green.r.classes) {
    if (cls.size() < 2) continue;
    for (Element a : cls) {
      if (!m.is_idempotent(a)) return std::vector<Element>{a};
      for (Element b : cls) {
        if (a == b) continue;
        for (Element x : m.elements()) {
          if (x != m.identity() && m.product(a, x) != m.product(b, x)) {
            return std::vector<Element>{a, b, x};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::string joined_names(const FiniteMonoid& m, const std::vector<Element>& elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += m.name(elements[i]);
  }
  return out;
}

}  // namespace

std::string_view to_string(AperiodicityMethod method) noexcept {
  switch (method) {
    case AperiodicityMethod::Power: return "power";
    case AperiodicityMethod::Cancel: return "cancel";
    case AperiodicityMethod::RRigid: return "r_rigid";
    case AperiodicityMethod::HTrivial: return "h_trivial";
    case AperiodicityMethod::NoSubgroup: return "no_subgroup";
    case AperiodicityMethod::All: return "all";
  }
  return "?";
}

std::optional<AperiodicityMethod> parse_aperiodicity_method(std::string_view text) {
  for (auto method : kMethods) {
    if (to_string(method) == text) return method;
  }
  if (text == "all") return AperiodicityMethod::All;
  return std::nullopt;
}

AperiodicityResult is_aperiodic(const FiniteMonoid& m, const GreenData& green,
                                AperiodicityMethod method) {
  if (method != AperiodicityMethod::All) {
    auto w = failure(m, green, method);
    return {!w, w ? std::move(*w) : std::vector<Element>{}};
  }
  AperiodicityResult result;
  for (auto each : kMethods) {
    auto w = failure(m, green, each);
    if (each == AperiodicityMethod::Power) {
      result = {!w, w ? *w : std::vector<Element>{}};
    } else if (result.aperiodic != !w) {
      throw Error(ErrorKind::CharacterizationDisagreement,
                  "power test says " + std::string(result.aperiodic ? "aperiodic" : "periodic") +
                      " but " + std::string(to_string(each)) + " disagrees",
                  w ? *w : result.witness);
    }
  }
  return result;
}

AperiodicityResult is_aperiodic(const FiniteMonoid& m, AperiodicityMethod method) {
  return is_aperiodic(m, green_classes(m), method);
}

bool is_almost_r_trivial(const FiniteMonoid& m, const GreenData& green) {
  return !almost_r_trivial_failure(m, green);
}

bool is_almost_r_trivial(const FiniteMonoid& m) { return is_almost_r_trivial(m, green_classes(m)); }

bool is_k_trivial(const FiniteMonoid& m, GreenRelation relation) {
  return green_classes(m).classes(relation).is_trivial();
}

std::string_view to_string(YVerdict verdict) noexcept {
  switch (verdict) {
    case YVerdict::Yes: return "Yes";
    case YVerdict::No: return "No";
    case YVerdict::Unknown: return "Unknown";
  }
  return "?";
}

ClassificationReport classify(const FiniteMonoid& m) {
  const auto green = green_classes(m);
  ClassificationReport report;
  auto note = [&](const char* flag, bool& target, std::optional<std::vector<Element>> w) {
    target = !w;
    if (w) report.witnesses[flag] = std::move(*w);
  };

  const auto aperiodic = is_aperiodic(m, green, AperiodicityMethod::All);
  report.aperiodic = aperiodic.aperiodic;
  if (!aperiodic.aperiodic) report.witnesses["aperiodic"] = aperiodic.witness;
  report.checks.power = report.checks.cancel = report.checks.r_rigid = report.checks.h_trivial =
      report.checks.no_subgroup = report.aperiodic;

  std::vector<Element> all_reps;
  std::vector<Element> nontrivial_reps;
  for (const auto& cls : green.r.classes) {
    all_reps.push_back(cls.front());
    if (cls.size() > 1) nontrivial_reps.push_back(cls.front());
  }
  note("x_linear", report.x_linear, incomparable_pair(green, all_reps));
  note("xr_linear", report.xr_linear, incomparable_pair(green, nontrivial_reps));
  note("almost_r_trivial", report.almost_r_trivial, almost_r_trivial_failure(m, green));
  note("r_trivial", report.r_trivial, nontrivial_class(green.r));
  note("l_trivial", report.l_trivial, nontrivial_class(green.l));
  note("h_trivial", report.h_trivial, nontrivial_class(green.h));
  note("idempotent_class_condition", report.idempotent_class_condition,
       class_condition_failure(m, green));

  report.ramsey = report.aperiodic && report.x_linear;
  if (!report.aperiodic) {
    report.y_controllable = {YVerdict::No, "not-aperiodic"};
  } else if (report.xr_linear) {
    report.y_controllable = {YVerdict::Yes, "XR-linear"};
  } else if (report.idempotent_class_condition) {
    report.y_controllable = {YVerdict::Yes, "Prop7.1"};
  } else {
    report.y_controllable = {YVerdict::Unknown, ""};
  }
  return report;
}

std::string format_report(const FiniteMonoid& m, const ClassificationReport& report) {
  std::ostringstream out;
  auto flag = [&](const char* key, bool value) {
    out << key << '=' << (value ? "true" : "false") << '\n';
  };
  out << "size=" << m.size() << '\n';
  flag("aperiodic", report.aperiodic);
  flag("aperiodic.power", report.checks.power);
  flag("aperiodic.cancel", report.checks.cancel);
  flag("aperiodic.r_rigid", report.checks.r_rigid);
  flag("aperiodic.h_trivial", report.checks.h_trivial);
  flag("aperiodic.no_subgroup", report.checks.no_subgroup);
  flag("x_linear", report.x_linear);
  flag("xr_linear", report.xr_linear);
  flag("almost_r_trivial", report.almost_r_trivial);
  flag("r_trivial", report.r_trivial);
  flag("l_trivial", report.l_trivial);
  flag("h_trivial", report.h_trivial);
  flag("idempotent_class_condition", report.idempotent_class_condition);
  flag("ramsey", report.ramsey);
  out << "y_controllable=" << to_string(report.y_controllable.verdict);
  if (!report.y_controllable.reason.empty()) out << '(' << report.y_controllable.reason << ')';
  out << '\n';
  for (const auto& [key, elements] : report.witnesses) {
    out << "witness." << key << '=' << joined_names(m, elements) << '\n';
  }
  return out.str();
}

std::vector<StructureCheck> check_linear_structure(const FiniteMonoid& m) {
  const auto green = green_classes(m);
  if (!x_family(green).linear) {
    throw Error(ErrorKind::PreconditionViolated, "X(M) is not linear");
  }
  std::vector<StructureCheck> out;

  StructureCheck two_sided{"right_ideals_two_sided", true, {}};
  for (Element x : m.elements()) {
    for (Element a : m.elements()) {
      if (two_sided.passed && !green.right_ideals[a].test(m.product(x, a))) {
        two_sided = {two_sided.name, false, {x, a}};
      }
    }
  }
  out.push_back(two_sided);

  StructureCheck classes{"r_equals_j_and_l_equals_h", true, {}};
  for (Element a : m.elements()) {
    const bool same = green.r.class_containing(a) == green.j.class_containing(a) &&
                      green.l.class_containing(a) == green.h.class_containing(a) &&
                      green.leq_r[a] == green.leq_j[a] && green.leq_l[a] == green.leq_h[a];
    if (!same) {
      classes = {classes.name, false, {a}};
      break;
    }
  }
  out.push_back(classes);

  StructureCheck congruence{"r_congruence", true, {}};
  StructureCheck invariant{"leq_r_translation_invariant", true, {}};
  for (Element a : m.elements()) {
    for (Element b : m.elements()) {
      const bool related = green.r.related(a, b);
      const bool below = green.leq_r[a].test(b);
      if (!related && !below) continue;
      for (Element c : m.elements()) {
        const Element ca = m.product(c, a), cb = m.product(c, b);
        const Element ac = m.product(a, c), bc = m.product(b, c);
        if (related && congruence.passed &&
            (!green.r.related(ca, cb) || !green.r.related(ac, bc))) {
          congruence = {congruence.name, false, {a, b, c}};
        }
        if (below && invariant.passed &&
            (!green.leq_r[ca].test(cb) || !green.leq_r[ac].test(bc))) {
          invariant = {invariant.name, false, {a, b, c}};
        }
      }
    }
  }
  out.push_back(congruence);
  out.push_back(invariant);
  return out;
}

}  // namespace monoidlab
