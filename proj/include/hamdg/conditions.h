// Copyright 2026 The hamdg Authors.
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


// Hypothesis checkers for classical and conjectured sufficient conditions
// for Hamiltonicity. Each checker evaluates a premise, never the conclusion,
// and reports the first violation in canonical order.

#ifndef HAMDG_CONDITIONS_H_
#define HAMDG_CONDITIONS_H_

#include <string>
#include <string_view>

#include "hamdg/digraph.h"
#include "hamdg/graphcore.h"
#include "hamdg/verdict.h"

namespace hamdg {

enum class DegreeRuleId {
  kGhouilaHouri,        // strong, delta^+ + delta^- >= n
  kWoodall,             // strong, n >= 2, d^+(x) + d^-(y) >= n when x-/->y
  kMeyniel,             // strong, n >= 2, d(x) + d(y) >= 2n-1, non-adjacent
  kBgl,                 // as Meyniel, dominated non-adjacent pairs only
  kOreOriented,         // oriented, d^+(x) + d^-(y) >= (3/4 + alpha) n
  kHaggkvistStar,       // oriented, delta + delta^+ + delta^- > (3n-3)/2
  kOrientedSemidegree,  // oriented, delta^0 >= (3n-4)/8
  kDigraphSemidegree,   // delta^0 >= n/2
  kKOrderedSemidegree,  // delta^0 >= ceil((n+k)/2) - 1
  kPowerTournament,     // tournament, delta^0 >= n/4 + eps n
  kShortCycle,          // oriented, delta^0 >= floor(n/k) + 1 (k from l)
};

struct ConditionRule {
  DegreeRuleId id = DegreeRuleId::kGhouilaHouri;
  Fraction fraction = 0;  // alpha or eps
  int integer = 0;        // k for k-ordered, l for short cycles

  static ConditionRule Simple(DegreeRuleId id) { return {id, 0, 0}; }
  static ConditionRule OreOriented(Fraction alpha) {
    return {DegreeRuleId::kOreOriented, alpha, 0};
  }
  static ConditionRule KOrdered(int k) {
    return {DegreeRuleId::kKOrderedSemidegree, 0, k};
  }
  static ConditionRule PowerTournament(Fraction eps) {
    return {DegreeRuleId::kPowerTournament, eps, 0};
  }
  static ConditionRule ShortCycle(int length) {
    return {DegreeRuleId::kShortCycle, 0, length};
  }

  // e.g. "ghouila_houri", "ore_oriented(1/10)", "short_cycle(6)".
  std::string Name() const;
};

// Throws ClassMismatch when the rule is for oriented graphs (or
// tournaments) and g is not one; BadParams for out-of-range parameters.
// Side conditions (strong connectivity, n >= 2) fail with a kReason witness.
Verdict CheckDegreeCondition(const Digraph& g, const ConditionRule& rule);

// Smallest integer k > 2 that does not divide `length`.
int ShortCycleModulus(int length);

enum class SequenceRuleId { kNashWilliams, kPosaDigraph, kCkko };

struct SequenceRule {
  SequenceRuleId id = SequenceRuleId::kNashWilliams;
  Fraction beta = 0;  // ckko only, 0 < beta < 1

  std::string Name() const;
};

// Nash-Williams additionally requires strong connectivity and n >= 3.
// Witness: least failing 1-based index i with both clauses of the failing
// disjunction in `values` = {lhs1, rhs1, lhs2, rhs2}; a second clause whose
// degree index is out of range is reported with lhs2 = -1.
Verdict CheckSequenceCondition(const Digraph& g, const SequenceRule& rule);

// The degree-sequence part only, without any connectivity side condition.
Verdict EvaluateSequenceRule(const DegreeSequencePair& seq,
                             const SequenceRule& rule);

enum class ConnectivityRuleId { kJacksonFactorial, kJacksonOrdaz };

std::string Name(ConnectivityRuleId id);

// Exact kappa and alpha_2. Throws BudgetExceeded if n > alpha_cap.
Verdict CheckConnectivityCondition(const Digraph& g, ConnectivityRuleId rule,
                                   int alpha_cap = kDefaultIndependenceCap);

// 2^a (a+2)!, saturating at INT64_MAX.
std::int64_t JacksonThreshold(int alpha2);

// Parses any rule name accepted by the three checkers and evaluates it.
// Throws BadParams for an unknown name.
Verdict CheckRuleByName(const Digraph& g, std::string_view name);

}  // namespace hamdg

#endif  // HAMDG_CONDITIONS_H_
