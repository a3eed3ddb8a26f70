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


#include "hamdg/conditions.h"

#include <algorithm>
#include <limits>

#include "hamdg/errors.h"

namespace hamdg {
namespace {

Witness MakeWitness(WitnessKind kind, std::vector<Vertex> vs, Fraction lhs,
                    Fraction rhs, std::string detail = {}) {
  Witness w;
  w.kind = kind;
  w.vertices = std::move(vs);
  w.lhs = lhs;
  w.rhs = rhs;
  w.detail = std::move(detail);
  return w;
}

// Fails with the first unreachable pair when g is not strongly connected.
std::optional<Verdict> RequireStrong(const Digraph& g, const std::string& rule) {
  if (IsStronglyConnected(g)) return std::nullopt;
  const auto [u, v] = UnreachablePair(g);
  return Verdict::Fails(rule, MakeWitness(WitnessKind::kReason, {u, v}, 0, 1,
                                          "not strongly connected"));
}

std::optional<Verdict> RequireAtLeast(const Digraph& g, int min_n,
                                      const std::string& rule) {
  if (g.num_vertices() >= min_n) return std::nullopt;
  return Verdict::Fails(
      rule, MakeWitness(WitnessKind::kReason, {}, g.num_vertices(), min_n,
                        "needs n >= " + std::to_string(min_n)));
}

void RequireOriented(const Digraph& g, const std::string& rule) {
  if (!IsInClass(g, GraphClass::kOriented)) {
    throw ClassMismatch(rule + " applies to oriented graphs only");
  }
}

int Total(const Digraph& g, Vertex v) { return g.OutDegree(v) + g.InDegree(v); }

// Lowest vertex attaining delta^0, compared against `rhs`.
Verdict SemidegreeBound(const Digraph& g, const std::string& rule, Fraction rhs) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int out = g.OutDegree(v);
    const int in = g.InDegree(v);
    const int semi = std::min(out, in);
    if (Fraction(semi) < rhs) {
      return Verdict::Fails(rule, MakeWitness(WitnessKind::kVertex, {v}, semi,
                                              rhs, out <= in ? "out" : "in"));
    }
  }
  return Verdict::Holds(rule);
}

// First ordered pair x != y without arc x->y violating d+(x)+d-(y) >= rhs.
Verdict OrePairs(const Digraph& g, const std::string& rule, Fraction rhs) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
      if (x == y || g.HasArc(x, y)) continue;
      const int lhs = g.OutDegree(x) + g.InDegree(y);
      if (Fraction(lhs) < rhs) {
        return Verdict::Fails(rule, MakeWitness(WitnessKind::kPair, {x, y}, lhs, rhs));
      }
    }
  }
  return Verdict::Holds(rule);
}

// Non-adjacent pairs x < y (optionally dominated) with d(x)+d(y) >= 2n-1.
Verdict TotalDegreePairs(const Digraph& g, const std::string& rule,
                         bool dominated_only) {
  const int rhs = 2 * g.num_vertices() - 1;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = x + 1; y < g.num_vertices(); ++y) {
      if (g.Adjacent(x, y)) continue;
      if (dominated_only && (g.In(x) & g.In(y)) == 0) continue;
      const int lhs = Total(g, x) + Total(g, y);
      if (lhs < rhs) {
        return Verdict::Fails(rule, MakeWitness(WitnessKind::kPair, {x, y}, lhs, rhs));
      }
    }
  }
  return Verdict::Holds(rule);
}

std::string FractionArg(const Fraction& f) { return "(" + ToString(f) + ")"; }

}  // namespace

int ShortCycleModulus(int length) {
  int k = 3;
  while (length % k == 0) ++k;
  return k;
}

std::string ConditionRule::Name() const {
  switch (id) {
    case DegreeRuleId::kGhouilaHouri: return "ghouila_houri";
    case DegreeRuleId::kWoodall: return "woodall";
    case DegreeRuleId::kMeyniel: return "meyniel";
    case DegreeRuleId::kBgl: return "bgl";
    case DegreeRuleId::kOreOriented: return "ore_oriented" + FractionArg(fraction);
    case DegreeRuleId::kHaggkvistStar: return "haggkvist_star";
    case DegreeRuleId::kOrientedSemidegree: return "oriented_semidegree";
    case DegreeRuleId::kDigraphSemidegree: return "digraph_semidegree";
    case DegreeRuleId::kKOrderedSemidegree:
      return "kordered_semidegree(" + std::to_string(integer) + ")";
    case DegreeRuleId::kPowerTournament: return "power_tournament" + FractionArg(fraction);
    case DegreeRuleId::kShortCycle: return "short_cycle(" + std::to_string(integer) + ")";
  }
  return "unknown";
}

Verdict CheckDegreeCondition(const Digraph& g, const ConditionRule& rule) {
  const std::string name = rule.Name();
  const int n = g.num_vertices();
  switch (rule.id) {
    case DegreeRuleId::kGhouilaHouri: {
      if (auto v = RequireStrong(g, name)) return *v;
      if (n == 0) return Verdict::Holds(name);
      Vertex x = 0, y = 0;
      for (Vertex v = 1; v < n; ++v) {
        if (g.OutDegree(v) < g.OutDegree(x)) x = v;
        if (g.InDegree(v) < g.InDegree(y)) y = v;
      }
      const int lhs = g.OutDegree(x) + g.InDegree(y);
      if (lhs >= n) return Verdict::Holds(name);
      if (x == y) {
        return Verdict::Fails(name, MakeWitness(WitnessKind::kVertex, {x}, lhs, n));
      }
      return Verdict::Fails(name, MakeWitness(WitnessKind::kPair, {x, y}, lhs, n,
                                              "argmin out-degree, argmin in-degree"));
    }
    case DegreeRuleId::kWoodall:
      if (auto v = RequireAtLeast(g, 2, name)) return *v;
      if (auto v = RequireStrong(g, name)) return *v;
      return OrePairs(g, name, n);
    case DegreeRuleId::kMeyniel:
      if (auto v = RequireAtLeast(g, 2, name)) return *v;
      if (auto v = RequireStrong(g, name)) return *v;
      return TotalDegreePairs(g, name, false);
    case DegreeRuleId::kBgl:
      if (auto v = RequireAtLeast(g, 2, name)) return *v;
      if (auto v = RequireStrong(g, name)) return *v;
      return TotalDegreePairs(g, name, true);
    case DegreeRuleId::kOreOriented:
      if (rule.fraction < 0 || rule.fraction > 1) {
        throw BadParams("ore_oriented needs 0 <= alpha <= 1");
      }
      RequireOriented(g, name);
      return OrePairs(g, name, (Fraction(3, 4) + rule.fraction) * n);
    case DegreeRuleId::kHaggkvistStar: {
      RequireOriented(g, name);
      if (n == 0) return Verdict::Holds(name);
      int min_total = std::numeric_limits<int>::max();
      for (Vertex v = 0; v < n; ++v) min_total = std::min(min_total, Total(g, v));
      const SemiDegrees d = ComputeSemiDegrees(g);
      const int star = min_total + d.min_out + d.min_in;
      // delta* > (3n-3)/2 is equivalent to delta* >= (3n-2)/2 on integers.
      const Fraction rhs(3 * n - 2, 2);
      if (Fraction(star) >= rhs) return Verdict::Holds(name);
      Witness w = MakeWitness(WitnessKind::kSlack, {}, star, rhs,
                              "delta + delta^+ + delta^-");
      w.values = {min_total, d.min_out, d.min_in};
      return Verdict::Fails(name, w);
    }
    case DegreeRuleId::kOrientedSemidegree:
      RequireOriented(g, name);
      return SemidegreeBound(g, name, Fraction(3 * n - 4, 8));
    case DegreeRuleId::kDigraphSemidegree:
      return SemidegreeBound(g, name, Fraction(n, 2));
    case DegreeRuleId::kKOrderedSemidegree: {
      const int k = rule.integer;
      if (k < 1) throw BadParams("kordered_semidegree needs k >= 1");
      return SemidegreeBound(g, name, (n + k + 1) / 2 - 1);
    }
    case DegreeRuleId::kPowerTournament:
      if (rule.fraction < 0 || rule.fraction > 1) {
        throw BadParams("power_tournament needs 0 <= eps <= 1");
      }
      if (!IsInClass(g, GraphClass::kTournament)) {
        throw ClassMismatch(name + " applies to tournaments only");
      }
      return SemidegreeBound(g, name, Fraction(n, 4) + rule.fraction * n);
    case DegreeRuleId::kShortCycle: {
      if (rule.integer < 4) throw BadParams("short_cycle needs length >= 4");
      RequireOriented(g, name);
      const int k = ShortCycleModulus(rule.integer);
      return SemidegreeBound(g, name, n / k + 1);
    }
  }
  throw BadParams("unknown degree rule");
}

std::string SequenceRule::Name() const {
  switch (id) {
    case SequenceRuleId::kNashWilliams: return "nash_williams";
    case SequenceRuleId::kPosaDigraph: return "posa_digraph";
    case SequenceRuleId::kCkko: return "ckko" + FractionArg(beta);
  }
  return "unknown";
}

namespace {

// 1-based access into a sorted sequence; nullopt outside 1..n.
std::optional<int> At(const std::vector<int>& seq, std::int64_t i) {
  if (i < 1 || i > static_cast<std::int64_t>(seq.size())) return std::nullopt;
  return seq[i - 1];
}

std::int64_t Floor(const Fraction& f) {
  std::int64_t q = f.numerator() / f.denominator();
  if (f.numerator() % f.denominator() != 0 && f.numerator() < 0) --q;
  return q;
}

Verdict IndexFailure(const std::string& rule, int i, std::string clause,
                     Fraction lhs1, Fraction rhs1, Fraction lhs2, Fraction rhs2) {
  Witness w = MakeWitness(WitnessKind::kIndex, {}, lhs1, rhs1, std::move(clause));
  w.index = i;
  w.values = {lhs1, rhs1, lhs2, rhs2};
  return Verdict::Fails(rule, w);
}

}  // namespace

Verdict EvaluateSequenceRule(const DegreeSequencePair& seq, const SequenceRule& rule) {
  const std::string name = rule.Name();
  const auto& out = seq.out_seq;
  const auto& in = seq.in_seq;
  const int n = static_cast<int>(out.size());
  if (static_cast<int>(in.size()) != n) throw BadParams("sequence lengths differ");
  switch (rule.id) {
    case SequenceRuleId::kNashWilliams: {
      for (int i = 1; 2 * i < n; ++i) {
        const int other = *At(in, n - i);
        if (!(*At(out, i) >= i + 1 || other >= n - i)) {
          return IndexFailure(name, i, "(i)", *At(out, i), i + 1, other, n - i);
        }
        const int other2 = *At(out, n - i);
        if (!(*At(in, i) >= i + 1 || other2 >= n - i)) {
          return IndexFailure(name, i, "(ii)", *At(in, i), i + 1, other2, n - i);
        }
      }
      return Verdict::Holds(name);
    }
    case SequenceRuleId::kPosaDigraph: {
      for (int i = 1; 2 * i < n - 1; ++i) {
        if (*At(out, i) < i + 1) return IndexFailure(name, i, "out", *At(out, i), i + 1, 0, 0);
        if (*At(in, i) < i + 1) return IndexFailure(name, i, "in", *At(in, i), i + 1, 0, 0);
      }
      if (n % 2 == 1) {
        const int c = (n + 1) / 2;
        if (*At(out, c) < c) return IndexFailure(name, c, "out", *At(out, c), c, 0, 0);
        if (*At(in, c) < c) return IndexFailure(name, c, "in", *At(in, c), c, 0, 0);
      }
      return Verdict::Holds(name);
    }
    case SequenceRuleId::kCkko: {
      if (rule.beta <= 0 || rule.beta >= 1) throw BadParams("ckko needs 0 < beta < 1");
      const Fraction beta_n = rule.beta * n;
      for (int i = 1; 2 * i < n; ++i) {
        const Fraction cap = std::min(Fraction(i) + beta_n, Fraction(n, 2));
        const std::int64_t j = Floor(Fraction(n - i) - beta_n);
        const auto check = [&](const std::vector<int>& first,
                               const std::vector<int>& second,
                               const char* clause) -> std::optional<Verdict> {
          if (Fraction(*At(first, i)) >= cap) return std::nullopt;
          const auto d2 = At(second, j);
          if (d2 && *d2 >= n - i) return std::nullopt;
          Verdict v = IndexFailure(name, i, clause, *At(first, i), cap,
                                   d2 ? *d2 : -1, n - i);
          if (!d2) v.witness->detail += " second index " + std::to_string(j) + " out of range";
          return v;
        };
        if (auto v = check(out, in, "(i)")) return *v;
        if (auto v = check(in, out, "(ii)")) return *v;
      }
      return Verdict::Holds(name);
    }
  }
  throw BadParams("unknown sequence rule");
}

Verdict CheckSequenceCondition(const Digraph& g, const SequenceRule& rule) {
  if (rule.id == SequenceRuleId::kNashWilliams) {
    const std::string name = rule.Name();
    if (auto v = RequireAtLeast(g, 3, name)) return *v;
    if (auto v = RequireStrong(g, name)) return *v;
  }
  if (rule.id == SequenceRuleId::kPosaDigraph) {
    if (auto v = RequireAtLeast(g, 3, rule.Name())) return *v;
  }
  return EvaluateSequenceRule(DegreeSequences(g), rule);
}

std::string Name(ConnectivityRuleId id) {
  return id == ConnectivityRuleId::kJacksonFactorial ? "jackson_factorial"
                                                     : "jackson_ordaz";
}

std::int64_t JacksonThreshold(int alpha2) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t t = 1;
  for (int i = 0; i < alpha2; ++i) {
    if (t > kMax / 2) return kMax;
    t *= 2;
  }
  for (int f = 2; f <= alpha2 + 2; ++f) {
    if (t > kMax / f) return kMax;
    t *= f;
  }
  return t;
}

Verdict CheckConnectivityCondition(const Digraph& g, ConnectivityRuleId rule,
                                   int alpha_cap) {
  const std::string name = Name(rule);
  if (auto v = RequireAtLeast(g, 2, name)) return *v;
  const int alpha2 = ComputeIndependenceNumbers(g, alpha_cap).alpha2;
  const int kappa = VertexConnectivity(g);
  const std::int64_t rhs = rule == ConnectivityRuleId::kJacksonFactorial
                               ? JacksonThreshold(alpha2)
                               : alpha2 + 1;
  if (kappa >= rhs) return Verdict::Holds(name);
  Witness w = MakeWitness(WitnessKind::kSlack, {}, kappa, rhs, "kappa vs alpha_2 bound");
  w.values = {kappa, alpha2};
  return Verdict::Fails(name, w);
}

namespace {

// Splits "name(arg)" into name and arg; arg empty when absent.
std::pair<std::string_view, std::string_view> SplitCall(std::string_view s) {
  const auto open = s.find('(');
  if (open == std::string_view::npos) return {s, {}};
  if (s.back() != ')') throw BadParams("malformed rule '" + std::string(s) + "'");
  return {s.substr(0, open), s.substr(open + 1, s.size() - open - 2)};
}

int ParseSmallInt(std::string_view s, std::string_view rule) {
  const Fraction f = ParseFraction(s);
  if (f.denominator() != 1) {
    throw BadParams("rule '" + std::string(rule) + "' needs an integer argument");
  }
  return static_cast<int>(f.numerator());
}

}  // namespace

Verdict CheckRuleByName(const Digraph& g, std::string_view full) {
  const auto [name, arg] = SplitCall(full);
  auto need_arg = [&] {
    if (arg.empty()) throw BadParams("rule '" + std::string(name) + "' needs an argument");
  };
  auto simple = [&](DegreeRuleId id) {
    return CheckDegreeCondition(g, ConditionRule::Simple(id));
  };
  if (name == "ghouila_houri") return simple(DegreeRuleId::kGhouilaHouri);
  if (name == "woodall") return simple(DegreeRuleId::kWoodall);
  if (name == "meyniel") return simple(DegreeRuleId::kMeyniel);
  if (name == "bgl") return simple(DegreeRuleId::kBgl);
  if (name == "haggkvist_star") return simple(DegreeRuleId::kHaggkvistStar);
  if (name == "oriented_semidegree") return simple(DegreeRuleId::kOrientedSemidegree);
  if (name == "digraph_semidegree") return simple(DegreeRuleId::kDigraphSemidegree);
  if (name == "ore_oriented") {
    need_arg();
    return CheckDegreeCondition(g, ConditionRule::OreOriented(ParseFraction(arg)));
  }
  if (name == "power_tournament") {
    need_arg();
    return CheckDegreeCondition(g, ConditionRule::PowerTournament(ParseFraction(arg)));
  }
  if (name == "kordered_semidegree") {
    need_arg();
    return CheckDegreeCondition(g, ConditionRule::KOrdered(ParseSmallInt(arg, name)));
  }
  if (name == "short_cycle") {
    need_arg();
    return CheckDegreeCondition(g, ConditionRule::ShortCycle(ParseSmallInt(arg, name)));
  }
  if (name == "nash_williams") {
    return CheckSequenceCondition(g, {SequenceRuleId::kNashWilliams, 0});
  }
  if (name == "posa_digraph") {
    return CheckSequenceCondition(g, {SequenceRuleId::kPosaDigraph, 0});
  }
  if (name == "ckko") {
    need_arg();
    return CheckSequenceCondition(g, {SequenceRuleId::kCkko, ParseFraction(arg)});
  }
  if (name == "jackson_factorial") {
    return CheckConnectivityCondition(g, ConnectivityRuleId::kJacksonFactorial);
  }
  if (name == "jackson_ordaz") {
    return CheckConnectivityCondition(g, ConnectivityRuleId::kJacksonOrdaz);
  }
  throw BadParams("unknown rule '" + std::string(full) + "'");
}

}  // namespace hamdg
