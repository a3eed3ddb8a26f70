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


// Outcome of a hypothesis checker or certificate validator.

#ifndef HAMDG_VERDICT_H_
#define HAMDG_VERDICT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hamdg/digraph.h"
#include "json.hpp"

// Boost 1.74 spells mixed rational/integer equality as a member template plus
// a reversed free template; C++20 rewritten comparisons make those two call
// each other forever. These exact-match overloads win overload resolution.
namespace boost {
#define HAMDG_RATIONAL_EQ(T)                                                  \
  inline bool operator==(const rational<std::int64_t>& a, T b) {              \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b); \
  }                                                                           \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; } \
  inline bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); } \
  inline bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }
HAMDG_RATIONAL_EQ(int)
HAMDG_RATIONAL_EQ(long)
HAMDG_RATIONAL_EQ(long long)
#undef HAMDG_RATIONAL_EQ
}  // namespace boost

namespace hamdg {

// Exact rational used for every fractional threshold.
using Fraction = boost::rational<std::int64_t>;

std::string ToString(const Fraction& f);

// Parses "3", "-2", "3/8" or a finite decimal such as "0.125" exactly.
// Throws BadParams on anything else.
Fraction ParseFraction(std::string_view text);

enum class WitnessKind {
  kVertex,  // one vertex violates a per-vertex bound
  kPair,    // ordered pair (x, y)
  kIndex,   // sequence index i (1-based)
  kSet,     // vertex set (e.g. a separating set or expansion witness)
  kArc,     // an arc, e.g. uncovered or reused
  kSlack,   // a global inequality with no localized culprit
  kReason,  // a side condition failed (see detail)
};

std::string_view ToString(WitnessKind k);

// A violated inequality. Inequalities are normalized so that the violation
// reads lhs < rhs. For sequence rules both failed clauses are recorded in
// `values` as (lhs1, rhs1, lhs2, rhs2) of the first disjunction and so on.
struct Witness {
  WitnessKind kind = WitnessKind::kSlack;
  std::vector<Vertex> vertices;
  int index = -1;
  Fraction lhs = 0;
  Fraction rhs = 0;
  std::vector<Fraction> values;
  std::string detail;
  bool operator==(const Witness&) const = default;
};

struct Verdict {
  std::string rule;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds

  static Verdict Holds(std::string rule) { return {std::move(rule), true, {}}; }
  static Verdict Fails(std::string rule, Witness w) {
    return {std::move(rule), false, std::move(w)};
  }
};

nlohmann::json ToJson(const Verdict& v);
// One line: "<rule> holds" or "<rule> fails <kind> ..." for terminals.
std::string ToText(const Verdict& v);

}  // namespace hamdg

#endif  // HAMDG_VERDICT_H_
