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

#include <gtest/gtest.h>

#include "hamdg/constructions.h"
#include "hamdg/errors.h"
#include "hamdg/rng.h"
#include "hamdg/solvers.h"
#include "oracles.h"

namespace hamdg {
namespace {

Verdict Check(const Digraph& g, DegreeRuleId id) {
  return CheckDegreeCondition(g, ConditionRule::Simple(id));
}

int TotalDegree(const Digraph& g, Vertex v) { return g.OutDegree(v) + g.InDegree(v); }

TEST(DegreeRules, GhouilaHouri) {
  EXPECT_TRUE(Check(CompleteDigraph(3), DegreeRuleId::kGhouilaHouri).holds);
  const Verdict v = Check(DirectedCycle(3), DegreeRuleId::kGhouilaHouri);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, WitnessKind::kVertex);
  EXPECT_EQ(v.witness->vertices, std::vector<Vertex>{0});
  EXPECT_EQ(v.witness->lhs, 2);
  EXPECT_EQ(v.witness->rhs, 3);
}

TEST(DegreeRules, SideConditionsFailWithReason) {
  const Verdict v = Check(TransitiveTournament(4), DegreeRuleId::kWoodall);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, WitnessKind::kReason);
  const Verdict w = Check(Digraph(1), DegreeRuleId::kMeyniel);
  ASSERT_FALSE(w.holds);
  EXPECT_EQ(w.witness->kind, WitnessKind::kReason);
}

TEST(DegreeRules, MeynielOnFig2) {
  for (int n = 6; n <= 8; ++n) {
    const Instance inst = Fig2(n);
    const Vertex z = PartVertices(inst.parts, "z")[0];
    const Verdict v = Check(inst.graph, DegreeRuleId::kMeyniel);
    ASSERT_FALSE(v.holds);
    ASSERT_EQ(v.witness->kind, WitnessKind::kPair);
    EXPECT_EQ(v.witness->vertices, (std::vector<Vertex>{0, z}));
    EXPECT_EQ(v.witness->lhs, 2 * n - 2);
    EXPECT_EQ(v.witness->rhs, 2 * n - 1);
    EXPECT_FALSE(Check(inst.graph, DegreeRuleId::kBgl).holds);
  }
}

TEST(DegreeRules, OrientedSemidegreeOnFig3) {
  const Verdict v = Check(Fig3Haggkvist(1).graph, DegreeRuleId::kOrientedSemidegree);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->lhs, 2);
  EXPECT_EQ(v.witness->rhs, Fraction(17, 8));
}

TEST(DegreeRules, OrientedRulesRejectTwoCycles) {
  const Digraph k3 = CompleteDigraph(3);
  EXPECT_THROW(Check(k3, DegreeRuleId::kOrientedSemidegree), ClassMismatch);
  EXPECT_THROW(Check(k3, DegreeRuleId::kHaggkvistStar), ClassMismatch);
  EXPECT_THROW(CheckDegreeCondition(k3, ConditionRule::OreOriented(Fraction(1, 10))),
               ClassMismatch);
  EXPECT_THROW(CheckDegreeCondition(k3, ConditionRule::ShortCycle(5)), ClassMismatch);
  EXPECT_THROW(CheckDegreeCondition(DirectedCycle(4), ConditionRule::PowerTournament(0)),
               ClassMismatch);
}

TEST(DegreeRules, ParametrisedThresholds) {
  // Regular tournament on 9 vertices: delta0 = 4.
  const Digraph t = CirculantTournament(9);
  EXPECT_TRUE(CheckDegreeCondition(t, ConditionRule::PowerTournament(Fraction(1, 36))).holds);
  EXPECT_FALSE(CheckDegreeCondition(t, ConditionRule::PowerTournament(Fraction(1, 5))).holds);
  // ceil((9+k)/2) - 1 <= 4 iff k <= 1... k = 1 gives 4.
  EXPECT_TRUE(CheckDegreeCondition(t, ConditionRule::KOrdered(1)).holds);
  EXPECT_FALSE(CheckDegreeCondition(t, ConditionRule::KOrdered(2)).holds);
  // short_cycle(4): k = 3, floor(9/3) + 1 = 4.
  EXPECT_EQ(ShortCycleModulus(4), 3);
  EXPECT_EQ(ShortCycleModulus(6), 4);
  EXPECT_EQ(ShortCycleModulus(12), 5);
  EXPECT_TRUE(CheckDegreeCondition(t, ConditionRule::ShortCycle(4)).holds);
  // (3n-4)/8 = 23/8 <= 4.
  EXPECT_TRUE(Check(t, DegreeRuleId::kOrientedSemidegree).holds);
  // delta* = 8 + 4 + 4 = 16 > (27-3)/2 = 12.
  EXPECT_TRUE(Check(t, DegreeRuleId::kHaggkvistStar).holds);
  // Every non-arc pair of a regular tournament sums to 8 >= (3/4)9.
  EXPECT_TRUE(CheckDegreeCondition(t, ConditionRule::OreOriented(0)).holds);
  EXPECT_FALSE(CheckDegreeCondition(t, ConditionRule::OreOriented(Fraction(1, 5))).holds);
  EXPECT_THROW(CheckDegreeCondition(t, ConditionRule::ShortCycle(3)), BadParams);
}

TEST(DegreeRules, HaggkvistBoundaryIsStrict) {
  // delta* must exceed (3n-3)/2: for n = 3 the cyclic triangle has
  // delta* = 2 + 1 + 1 = 4 > 3.
  EXPECT_TRUE(Check(DirectedCycle(3), DegreeRuleId::kHaggkvistStar).holds);
  // n = 5 circulant: delta* = 4 + 2 + 2 = 8 > 6.
  EXPECT_TRUE(Check(CirculantTournament(5), DegreeRuleId::kHaggkvistStar).holds);
  // Directed 4-cycle: delta* = 2 + 1 + 1 = 4, (3*4-3)/2 = 4.5.
  const Verdict v = Check(DirectedCycle(4), DegreeRuleId::kHaggkvistStar);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->lhs, 4);
  EXPECT_EQ(v.witness->rhs, Fraction(10, 2));
}

// Re-derives the inequality named by a witness from the graph alone.
void ExpectWitnessReproduces(const Digraph& g, const Verdict& v, DegreeRuleId id) {
  if (v.holds) return;
  const Witness& w = *v.witness;
  const int n = g.num_vertices();
  ASSERT_LT(w.lhs, w.rhs);
  switch (w.kind) {
    case WitnessKind::kPair: {
      const Vertex x = w.vertices[0], y = w.vertices[1];
      if (id == DegreeRuleId::kMeyniel || id == DegreeRuleId::kBgl) {
        EXPECT_FALSE(g.Adjacent(x, y));
        EXPECT_EQ(w.lhs, TotalDegree(g, x) + TotalDegree(g, y));
        EXPECT_EQ(w.rhs, 2 * n - 1);
      } else if (id == DegreeRuleId::kWoodall) {
        EXPECT_FALSE(g.HasArc(x, y));
        EXPECT_EQ(w.lhs, g.OutDegree(x) + g.InDegree(y));
        EXPECT_EQ(w.rhs, n);
      } else {
        EXPECT_EQ(w.lhs, g.OutDegree(x) + g.InDegree(y));
      }
      break;
    }
    case WitnessKind::kVertex:
      if (id == DegreeRuleId::kGhouilaHouri) {
        EXPECT_EQ(w.lhs, g.OutDegree(w.vertices[0]) + g.InDegree(w.vertices[0]));
      } else {
        EXPECT_EQ(w.lhs, std::min(g.OutDegree(w.vertices[0]), g.InDegree(w.vertices[0])));
      }
      break;
    case WitnessKind::kReason:
      EXPECT_FALSE(oracle::IsStrong(g) && n >= 2);
      break;
    default:
      break;
  }
}

TEST(DegreeRules, SoundnessMonotonicityAndWitnesses) {
  Rng rng(2024);
  const DegreeRuleId ids[] = {DegreeRuleId::kGhouilaHouri, DegreeRuleId::kWoodall,
                              DegreeRuleId::kMeyniel};
  int holding = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = rng.UniformInt(2, 7);
    Digraph g = RandomDigraph(n, 0.5 + 0.5 * rng.UniformReal(), rng.Next());
    for (DegreeRuleId id : ids) {
      const Verdict v = Check(g, id);
      ExpectWitnessReproduces(g, v, id);
      if (!v.holds) continue;
      ++holding;
      ASSERT_TRUE(oracle::IsHamiltonian(g)) << v.rule << " trial " << trial;
      // Adding any missing arc keeps the hypothesis.
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          if (a == b || g.HasArc(a, b)) continue;
          Digraph h = g;
          h.AddArc(a, b);
          ASSERT_TRUE(Check(h, id).holds);
        }
      }
    }
  }
  EXPECT_GT(holding, 500);
}

TEST(SequenceRules, NwExtremalFailsExactlyAtK) {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const Verdict v = CheckSequenceCondition(NwExtremal(n, k).graph,
                                               {SequenceRuleId::kNashWilliams, 0});
      ASSERT_FALSE(v.holds);
      EXPECT_EQ(v.witness->index, k) << n << " " << k;
      EXPECT_EQ(v.witness->values[0], k);
      EXPECT_EQ(v.witness->values[1], k + 1);
      EXPECT_EQ(v.witness->values[2], n - 1 - k);
      EXPECT_EQ(v.witness->values[3], n - k);
      // Raising the kth degrees by one would satisfy the kth disjunction.
      DegreeSequencePair seq = DegreeSequences(NwExtremal(n, k).graph);
      for (int i = 0; i < k; ++i) {
        seq.out_seq[i] = k + 1;
        seq.in_seq[i] = k + 1;
      }
      EXPECT_TRUE(EvaluateSequenceRule(seq, {SequenceRuleId::kNashWilliams, 0}).holds);
    }
  }
}

TEST(SequenceRules, CompleteDigraphs) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_TRUE(CheckSequenceCondition(CompleteDigraph(n), {SequenceRuleId::kNashWilliams, 0}).holds);
    EXPECT_TRUE(CheckSequenceCondition(CompleteDigraph(n), {SequenceRuleId::kPosaDigraph, 0}).holds);
  }
  EXPECT_TRUE(CheckSequenceCondition(CompleteDigraph(8),
                                     {SequenceRuleId::kCkko, Fraction(1, 10)}).holds);
}

TEST(SequenceRules, PosaOddMiddleClause) {
  // n = 5: indices i < 2 need d_1 >= 2; the odd clause needs d_3 >= 3.
  DegreeSequencePair seq{{2, 2, 2, 4, 4}, {2, 2, 3, 4, 4}};
  const Verdict v = EvaluateSequenceRule(seq, {SequenceRuleId::kPosaDigraph, 0});
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->index, 3);
  EXPECT_EQ(v.witness->detail, "out");
  seq.out_seq[2] = 3;
  EXPECT_TRUE(EvaluateSequenceRule(seq, {SequenceRuleId::kPosaDigraph, 0}).holds);
}

TEST(SequenceRules, CkkoIndexFloorAndRange) {
  // n = 10, beta = 1/4: beta n = 5/2. For i = 4 the second index is
  // floor(10 - 4 - 5/2) = 3; for i = 1 it is 6.
  DegreeSequencePair seq{{1, 9, 9, 9, 9, 9, 9, 9, 9, 9}, {0, 0, 0, 0, 0, 8, 9, 9, 9, 9}};
  Verdict v = EvaluateSequenceRule(seq, {SequenceRuleId::kCkko, Fraction(1, 4)});
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->index, 1);
  EXPECT_EQ(v.witness->detail, "(i)");
  EXPECT_EQ(v.witness->values[0], 1);
  EXPECT_EQ(v.witness->values[1], Fraction(7, 2));
  EXPECT_EQ(v.witness->values[2], 8);  // d^-_6 = 8 < 10 - 1
  EXPECT_EQ(v.witness->values[3], 9);
  EXPECT_THROW(EvaluateSequenceRule(seq, {SequenceRuleId::kCkko, 0}), BadParams);
}

TEST(SequenceRules, CkkoWithSmallBetaMatchesNashWilliamsBelowHalf) {
  Rng rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.UniformInt(3, 14);
    DegreeSequencePair seq;
    for (int i = 0; i < n; ++i) {
      seq.out_seq.push_back(rng.UniformInt(0, (n - 1) / 2));
      seq.in_seq.push_back(rng.UniformInt(0, (n - 1) / 2));
    }
    std::sort(seq.out_seq.begin(), seq.out_seq.end());
    std::sort(seq.in_seq.begin(), seq.in_seq.end());
    const Verdict nw = EvaluateSequenceRule(seq, {SequenceRuleId::kNashWilliams, 0});
    const Verdict ck = EvaluateSequenceRule(seq, {SequenceRuleId::kCkko, Fraction(1, 2 * n)});
    ASSERT_EQ(nw.holds, ck.holds);
    if (!nw.holds) {
      EXPECT_EQ(nw.witness->index, ck.witness->index);
      EXPECT_EQ(nw.witness->detail, ck.witness->detail);
    }
  }
}

TEST(SequenceRules, NashWilliamsNeedsStrongConnectivity) {
  const Verdict v = CheckSequenceCondition(TransitiveTournament(5),
                                           {SequenceRuleId::kNashWilliams, 0});
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->kind, WitnessKind::kReason);
}

TEST(ConnectivityRules, Examples) {
  const Digraph k5 = CompleteDigraph(5);
  const Verdict f = CheckConnectivityCondition(k5, ConnectivityRuleId::kJacksonFactorial);
  ASSERT_FALSE(f.holds);
  EXPECT_EQ(f.witness->lhs, 4);
  EXPECT_EQ(f.witness->rhs, 12);
  EXPECT_TRUE(CheckConnectivityCondition(k5, ConnectivityRuleId::kJacksonOrdaz).holds);
  for (auto id : {ConnectivityRuleId::kJacksonFactorial, ConnectivityRuleId::kJacksonOrdaz}) {
    EXPECT_FALSE(CheckConnectivityCondition(DirectedCycle(7), id).holds);
  }
  EXPECT_TRUE(CheckConnectivityCondition(CompleteDigraph(13),
                                         ConnectivityRuleId::kJacksonFactorial).holds);
  EXPECT_FALSE(CheckConnectivityCondition(CompleteDigraph(12),
                                          ConnectivityRuleId::kJacksonFactorial).holds);
  EXPECT_THROW(CheckConnectivityCondition(DirectedCycle(31),
                                          ConnectivityRuleId::kJacksonOrdaz),
               BudgetExceeded);
}

TEST(ConnectivityRules, ThresholdSaturates) {
  EXPECT_EQ(JacksonThreshold(0), 2);
  EXPECT_EQ(JacksonThreshold(1), 12);
  EXPECT_EQ(JacksonThreshold(2), 96);
  EXPECT_EQ(JacksonThreshold(40), std::numeric_limits<std::int64_t>::max());
}

TEST(RuleNames, ParseAndDispatch) {
  const Digraph t = CirculantTournament(9);
  EXPECT_EQ(CheckRuleByName(t, "ore_oriented(0.2)").rule, "ore_oriented(1/5)");
  EXPECT_TRUE(CheckRuleByName(t, "short_cycle(4)").holds);
  EXPECT_TRUE(CheckRuleByName(t, "kordered_semidegree(1)").holds);
  EXPECT_EQ(CheckRuleByName(t, "ckko(1/10)").rule, "ckko(1/10)");
  EXPECT_THROW(CheckRuleByName(t, "dirac"), BadParams);
  EXPECT_THROW(CheckRuleByName(t, "ore_oriented"), BadParams);
  EXPECT_THROW(CheckRuleByName(t, "short_cycle(2.5)"), BadParams);
}

TEST(VerdictText, SerializesWitness) {
  const Verdict v = Check(DirectedCycle(3), DegreeRuleId::kGhouilaHouri);
  EXPECT_EQ(ToText(v), "ghouila_houri fails vertex {0} 2 < 3");
  const auto j = ToJson(v);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"]["kind"], "vertex");
  EXPECT_EQ(j["witness"]["rhs"], "3");
  EXPECT_EQ(ParseFraction("0.125"), Fraction(1, 8));
  EXPECT_EQ(ParseFraction("-3/6"), Fraction(-1, 2));
  EXPECT_THROW(ParseFraction("1/0"), BadParams);
  EXPECT_THROW(ParseFraction("abc"), BadParams);
}

}  // namespace
}  // namespace hamdg
