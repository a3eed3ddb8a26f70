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


#include "hamdg/graphcore.h"

#include <gtest/gtest.h>

#include <numeric>

#include "hamdg/constructions.h"
#include "hamdg/errors.h"
#include "hamdg/rng.h"
#include "hamdg/solvers.h"
#include "oracles.h"

namespace hamdg {
namespace {

TEST(SemiDegrees, DirectedTriangle) {
  const auto d = ComputeSemiDegrees(DirectedCycle(3));
  EXPECT_EQ(d.min_out, 1);
  EXPECT_EQ(d.min_in, 1);
  EXPECT_EQ(d.min_semi, 1);
}

TEST(SemiDegrees, CompleteDigraph) {
  const auto d = ComputeSemiDegrees(CompleteDigraph(4));
  EXPECT_EQ(d.min_out, 3);
  EXPECT_EQ(d.min_in, 3);
  EXPECT_EQ(d.min_semi, 3);
}

TEST(SemiDegrees, HaggkvistSmallest) {
  const Digraph g = Fig3Haggkvist(1).graph;
  ASSERT_EQ(g.num_vertices(), 7);
  // ceil((3*7-4)/8) - 1 = 3 - 1.
  EXPECT_EQ(ComputeSemiDegrees(g).min_semi, 2);
}

TEST(DegreeSequences, NwExtremal) {
  const auto seq = DegreeSequences(NwExtremal(7, 2).graph);
  const std::vector<int> expected{2, 2, 4, 4, 4, 6, 6};
  EXPECT_EQ(seq.out_seq, expected);
  EXPECT_EQ(seq.in_seq, expected);
}

TEST(DegreeSequences, SmallCases) {
  const auto c3 = DegreeSequences(DirectedCycle(3));
  EXPECT_EQ(c3.out_seq, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(c3.in_seq, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(DegreeSequences(TransitiveTournament(3)).out_seq,
            (std::vector<int>{0, 1, 2}));
}

TEST(StrongConnectivity, Examples) {
  EXPECT_TRUE(IsStronglyConnected(DirectedCycle(3)));
  EXPECT_FALSE(IsStronglyConnected(TransitiveTournament(3)));
  EXPECT_TRUE(IsStronglyConnected(Fig2(7).graph));
  EXPECT_TRUE(IsStronglyConnected(Digraph(1)));
  const auto [u, v] = UnreachablePair(TransitiveTournament(3));
  EXPECT_EQ(u, 1);
  EXPECT_EQ(v, 0);
  EXPECT_EQ(UnreachablePair(DirectedCycle(4)), std::make_pair(-1, -1));
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(VertexConnectivity(CompleteDigraph(4)), 3);
  EXPECT_EQ(VertexConnectivity(DirectedCycle(6)), 1);
  EXPECT_EQ(VertexConnectivity(DirectedCycle(14)), 1);
  EXPECT_EQ(VertexConnectivity(Fig1(2).graph), 2);
  EXPECT_EQ(VertexConnectivity(TransitiveTournament(5)), 0);
  EXPECT_THROW(VertexConnectivity(Digraph(1)), BadParams);
}

TEST(VertexConnectivity, FlowMatchesDeletionAndOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.UniformInt(2, 9);
    const double p = 0.3 + 0.6 * rng.UniformReal();
    const Digraph g = RandomDigraph(n, p, rng.Next());
    const int oracle = oracle::Kappa(g);
    ASSERT_EQ(VertexConnectivityByDeletion(g), oracle) << "trial " << trial;
    ASSERT_EQ(VertexConnectivityByFlow(g), oracle) << "trial " << trial;
  }
}

TEST(Independence, TournamentsAndComplete) {
  const auto t = ComputeIndependenceNumbers(CirculantTournament(9));
  EXPECT_EQ(t.alpha0, 1);
  EXPECT_EQ(t.alpha2, 9);
  const auto k = ComputeIndependenceNumbers(CompleteDigraph(6));
  EXPECT_EQ(k.alpha0, 1);
  EXPECT_EQ(k.alpha2, 1);
}

TEST(Independence, NwExtremalFrozen) {
  // I together with one vertex of K outside X induces no arc.
  const Digraph g = NwExtremal(7, 2).graph;
  EXPECT_EQ(oracle::Alpha(g, false), 3);
  const auto r = ComputeIndependenceNumbers(g);
  EXPECT_EQ(r.alpha0, 3);
  EXPECT_EQ(r.alpha2, 3);
}

TEST(Independence, MatchesOracleAndIsOrdered) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.UniformInt(1, 12);
    const Digraph g = RandomDigraph(n, rng.UniformReal(), rng.Next());
    const auto r = ComputeIndependenceNumbers(g);
    ASSERT_EQ(r.alpha0, oracle::Alpha(g, false));
    ASSERT_EQ(r.alpha2, oracle::Alpha(g, true));
    ASSERT_LE(r.alpha0, r.alpha2);
  }
}

TEST(Independence, CapIsEnforced) {
  EXPECT_THROW(ComputeIndependenceNumbers(DirectedCycle(31)), BudgetExceeded);
  EXPECT_NO_THROW(ComputeIndependenceNumbers(DirectedCycle(31), 31));
}

TEST(DominatedPairs, Examples) {
  EXPECT_TRUE(DominatedPairs(DirectedCycle(3)).empty());
  EXPECT_EQ(DominatedPairs(CompleteDigraph(3)).size(), 3u);
}

TEST(DominatedPairs, Fig2NonAdjacentPairsAreZWithK) {
  const Instance inst = Fig2(7);
  const Vertex z = PartVertices(inst.parts, "z")[0];
  const auto& k = PartVertices(inst.parts, "K");
  std::vector<std::pair<Vertex, Vertex>> non_adjacent;
  for (const auto& [x, y] : DominatedPairs(inst.graph)) {
    if (!inst.graph.Adjacent(x, y)) non_adjacent.emplace_back(x, y);
  }
  ASSERT_EQ(non_adjacent.size(), k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    EXPECT_EQ(non_adjacent[i], std::make_pair(k[i], z));
  }
}

TEST(ContractMatching, DirectedTriangle) {
  const Digraph g = DirectedCycle(3);
  const Contraction c = ContractMatching(g, Matching{{{0, 1}}});
  ASSERT_EQ(c.graph.num_vertices(), 2);
  EXPECT_TRUE(c.graph.HasArc(0, 1));
  EXPECT_TRUE(c.graph.HasArc(1, 0));
  EXPECT_EQ(c.origin[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(c.origin[1], (std::vector<Vertex>{2}));
  EXPECT_EQ(c.Lift(HamiltonCycle{{0, 1}}).order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(ContractMatching, EmptyMatchingIsIdentity) {
  const Digraph g = CirculantTournament(5);
  EXPECT_EQ(ContractMatching(g, {}).graph, g);
}

TEST(ContractMatching, Errors) {
  const Digraph g = CompleteDigraph(4);
  EXPECT_THROW(ContractMatching(g, Matching{{{0, 1}, {1, 2}}}), NotAMatching);
  EXPECT_THROW(ContractMatching(DirectedCycle(4), Matching{{{1, 0}}}), ArcMissing);
}

TEST(ContractMatching, CirculantLiftContainsMatching) {
  const Digraph g = CirculantTournament(7);
  const Matching m{{{0, 1}}};
  const Contraction c = ContractMatching(g, m);
  EXPECT_EQ(c.graph.num_vertices(), 6);
  const auto h = FindHamiltonCycle(c.graph);
  ASSERT_TRUE(h.has_value());
  const HamiltonCycle lifted = c.Lift(*h);
  EXPECT_TRUE(IsHamiltonCycle(g, lifted));
  const auto arcs = CycleArcs(lifted.order);
  EXPECT_NE(std::find(arcs.begin(), arcs.end(), Arc{0, 1}), arcs.end());
}

TEST(ContractMatching, LiftPropertyOnRandomInstances) {
  Rng rng(99);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.UniformInt(3, 8);
    const Digraph g = RandomDigraph(n, 0.4 + 0.5 * rng.UniformReal(), rng.Next());
    // Random matching from a shuffled arc list.
    auto arcs = g.Arcs();
    rng.Shuffle(arcs);
    Matching m;
    VertexSet used = 0;
    for (const Arc& a : arcs) {
      if (Contains(used, a.from) || Contains(used, a.to) || rng.Bernoulli(0.6)) continue;
      used |= Bit(a.from) | Bit(a.to);
      m.arcs.push_back(a);
    }
    const Contraction c = ContractMatching(g, m);
    ASSERT_EQ(c.graph.num_vertices(), n - static_cast<int>(m.arcs.size()));
    if (c.graph.num_vertices() < 2) continue;
    ForEachHamiltonCycle(c.graph, [&](const std::vector<Vertex>& order) {
      const HamiltonCycle lifted = c.Lift(HamiltonCycle{order});
      EXPECT_TRUE(IsHamiltonCycle(g, lifted));
      const auto cyc = CycleArcs(lifted.order);
      for (const Arc& a : m.arcs) {
        EXPECT_NE(std::find(cyc.begin(), cyc.end(), a), cyc.end());
      }
      ++checked;
      return true;
    });
  }
  EXPECT_GT(checked, 100);
}

TEST(BlowUp, TriangleGivesOrientedThirdDegree) {
  const std::vector<int> sizes{4, 4, 4};
  const Digraph g = BlowUp(DirectedCycle(3), sizes);
  EXPECT_EQ(g.num_vertices(), 12);
  EXPECT_EQ(Classify(g), GraphClass::kOriented);
  EXPECT_EQ(ComputeSemiDegrees(g).min_semi, 4);
}

TEST(BlowUp, UnitSizesCopyTheGraph) {
  const Digraph g = CirculantTournament(7);
  const std::vector<int> ones(7, 1);
  EXPECT_EQ(BlowUp(g, ones), g);
}

TEST(BlowUp, FourCycleBlowUpHasEightCycle) {
  const std::vector<int> sizes{2, 2, 2, 2};
  const Digraph g = BlowUp(DirectedCycle(4), sizes);
  EXPECT_TRUE(FindHamiltonCycle(g).has_value());
  EXPECT_TRUE(oracle::IsHamiltonian(g));
}

TEST(BlowUp, ThinningIsSeededAndRejectsBadSizes) {
  const std::vector<int> sizes{5, 5, 5};
  const Digraph a = BlowUp(DirectedCycle(3), sizes, {0.5, 3});
  const Digraph b = BlowUp(DirectedCycle(3), sizes, {0.5, 3});
  EXPECT_EQ(a, b);
  EXPECT_LT(a.num_arcs(), 75);
  const std::vector<int> bad{1, 0, 1};
  EXPECT_THROW(BlowUp(DirectedCycle(3), bad), BadParams);
}

TEST(Digraph, DegreeSumsAndCapacity) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = RandomDigraph(rng.UniformInt(1, 30), 0.3, rng.Next());
    int out = 0, in = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out += g.OutDegree(v);
      in += g.InDegree(v);
    }
    EXPECT_EQ(out, g.num_arcs());
    EXPECT_EQ(in, g.num_arcs());
  }
  EXPECT_THROW(Digraph(65), CapacityExceeded);
  EXPECT_NO_THROW(Digraph(64));
}

TEST(GraphClass, Validation) {
  EXPECT_EQ(Classify(BlowUp(DirectedCycle(3), std::vector<int>{2, 2, 2})),
            GraphClass::kOriented);
  Digraph t = CirculantTournament(5);
  EXPECT_TRUE(IsInClass(t, GraphClass::kTournament));
  t.RemoveArc(0, 1);
  EXPECT_FALSE(IsInClass(t, GraphClass::kTournament));
  t.AddEdge(0, 1);
  EXPECT_FALSE(IsInClass(t, GraphClass::kTournament));
  EXPECT_THROW(RequireClass(t, GraphClass::kTournament), ClassMismatch);
}

}  // namespace
}  // namespace hamdg
