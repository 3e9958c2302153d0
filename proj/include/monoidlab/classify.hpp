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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/green.hpp"
#include "monoidlab/semigroup.hpp"

namespace monoidlab {

enum class AperiodicityMethod { Power, Cancel, RRigid, HTrivial, NoSubgroup, All };

std::string_view to_string(AperiodicityMethod method) noexcept;
std::optional<AperiodicityMethod> parse_aperiodicity_method(std::string_view text);

/// On failure `witness` holds the offending elements: a for Power, (g, a, g')
/// for Cancel, (a, b) for RRigid, two H-related elements for HTrivial, and
/// (idempotent, other member of its H-class) for NoSubgroup.
struct AperiodicityResult {
  bool aperiodic = true;
  std::vector<Element> witness;
};

/// Method All runs the five tests and throws CharacterizationDisagreement
/// if they do not agree; its witness is the Power witness.
AperiodicityResult is_aperiodic(const FiniteMonoid& m,
                                AperiodicityMethod method = AperiodicityMethod::All);
AperiodicityResult is_aperiodic(const FiniteMonoid& m, const GreenData& green,
                                AperiodicityMethod method);

/// Every non-trivial R-class [a] satisfies Ma = {a}.
bool is_almost_r_trivial(const FiniteMonoid& m);
bool is_almost_r_trivial(const FiniteMonoid& m, const GreenData& green);

/// All classes of the relation are singletons.
bool is_k_trivial(const FiniteMonoid& m, GreenRelation relation);

enum class YVerdict { Yes, No, Unknown };

std::string_view to_string(YVerdict verdict) noexcept;

struct YControllability {
  YVerdict verdict = YVerdict::Unknown;
  /// "XR-linear" or "Prop7.1" for Yes, "not-aperiodic" for No, empty otherwise.
  std::string reason;

  bool operator==(const YControllability&) const = default;
};

struct AperiodicityChecks {
  bool power = true;
  bool cancel = true;
  bool r_rigid = true;
  bool h_trivial = true;
  bool no_subgroup = true;
};

struct ClassificationReport {
  bool aperiodic = false;
  AperiodicityChecks checks;
  bool x_linear = false;
  bool xr_linear = false;
  bool almost_r_trivial = false;
  bool r_trivial = false;
  bool l_trivial = false;
  bool h_trivial = false;
  /// Whether every pair of distinct R-related a, b has a^2 = a and ax = bx
  /// for all x other than the identity.
  bool idempotent_class_condition = false;
  bool ramsey = false;
  YControllability y_controllable;
  /// Counterexample elements keyed by the name of each false flag.
  std::map<std::string, std::vector<Element>> witnesses;
};

ClassificationReport classify(const FiniteMonoid& m);

/// key=value lines, one per flag, in a fixed order.
std::string format_report(const FiniteMonoid& m, const ClassificationReport& report);

struct StructureCheck {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;
};

/// Consequences of X(M) being a chain: every aM is a two-sided ideal; R = J
/// and L = H (with matching quasi-orders); R is a congruence; <=_R is
/// invariant under left and right translation. Throws PreconditionViolated
/// if X(M) is not linear.
std::vector<StructureCheck> check_linear_structure(const FiniteMonoid& m);

}  // namespace monoidlab
