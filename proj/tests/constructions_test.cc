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


#include "hamdg/constructions.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hamdg/errors.h"
#include "hamdg/graphcore.h"
#include "hamdg/io.h"
#include "hamdg/solvers.h"
#include "oracles.h"

namespace hamdg {
namespace {

std::vector<int> OutDegrees(const Digraph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.OutDegree(v));
  return d;
}

bool IsRegularTournament(const Digraph& g) {
  const int n = g.num_vertices();
  if (!IsInClass(g, GraphClass::kTournament)) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.OutDegree(v) != (n - 1) / 2 || g.InDegree(v) != (n - 1) / 2) return false;
  }
  return true;
}

TEST(Fig1, RegularTwoConnectedNonHamiltonian) {
  for (int s : {2, 3}) {
    const Instance inst = Fig1(s);
    const Digraph& g = inst.graph;
    ASSERT_EQ(g.num_vertices(), 9 * s + 2);
    EXPECT_TRUE(IsInClass(g, inst.declared));
    EXPECT_EQ(inst.declared, GraphClass::kUndirected);
    for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(g.OutDegree(v), 3 * s - 1);
    EXPECT_EQ(VertexConnectivity(g), 2);
    EXPECT_FALSE(FindHamiltonCycle(g).has_value());
    // Removing a and b leaves three components.
    const VertexSet ab = Bit(PartVertices(inst.parts, "a")[0]) |
                         Bit(PartVertices(inst.parts, "b")[0]);
    EXPECT_EQ(WeakComponents(g, g.Vertices() & ~ab), 3);
  }
  EXPECT_THROW(Fig1(1), BadParams);
}

TEST(Fig1, PartSizes) {
  const Instance inst = Fig1(2);
  EXPECT_EQ(PartVertices(inst.parts, "Q1").size(), 6u);
  EXPECT_EQ(PartVertices(inst.parts, "A1").size(), 2u);
  EXPECT_EQ(PartVertices(inst.parts, "A3").size(), 1u);
  EXPECT_EQ(PartVertices(inst.parts, "B3").size(), 1u);
}

TEST(Fig2, HamiltonPathsOfFMinusXStartAtZ) {
  for (int n = 4; n <= 8; ++n) {
    const Instance inst = Fig2(n);
    EXPECT_TRUE(IsInClass(inst.graph, inst.declared));
    const Vertex x = PartVertices(inst.parts, "x")[0];
    const Vertex z = PartVertices(inst.parts, "z")[0];
    EXPECT_FALSE(inst.graph.HasArc(x, z));
    EXPECT_TRUE(inst.graph.HasArc(z, x));
    // F - x keeps labels 0..n-2 after deleting x = n-3; enumerate paths
    // by permutation.
    const Digraph f = inst.graph.Induced(inst.graph.Vertices() & ~Bit(x));
    const int m = f.num_vertices();
    const Vertex z_new = z - 1;
    std::vector<Vertex> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    int paths = 0;
    do {
      bool ok = true;
      for (int i = 0; i + 1 < m && ok; ++i) ok = f.HasArc(perm[i], perm[i + 1]);
      if (!ok) continue;
      ++paths;
      EXPECT_EQ(perm[0], z_new) << "n=" << n;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_GT(paths, 0);
    EXPECT_FALSE(oracle::IsHamiltonian(inst.graph)) << n;
  }
}

TEST(Fig3, SmallestInstance) {
  const Instance inst = Fig3Haggkvist(1);
  const Digraph& g = inst.graph;
  ASSERT_EQ(g.num_vertices(), 7);
  EXPECT_EQ(inst.declared, GraphClass::kOriented);
  EXPECT_TRUE(IsInClass(g, GraphClass::kOriented));
  EXPECT_EQ(PartVertices(inst.parts, "A").size(), 1u);
  EXPECT_EQ(PartVertices(inst.parts, "B").size(), 2u);
  EXPECT_EQ(PartVertices(inst.parts, "C").size(), 1u);
  EXPECT_EQ(PartVertices(inst.parts, "D").size(), 3u);
  EXPECT_FALSE(OneFactor(g).has_value());
  EXPECT_FALSE(oracle::HasOneFactor(g));
}

// Every directed cycle meets B at least as often as D.
TEST(Fig3, CyclesMeetBAtLeastAsOftenAsD) {
  const Instance inst = Fig3Haggkvist(1);
  const Digraph& g = inst.graph;
  const VertexSet b = FromVector(PartVertices(inst.parts, "B"));
  const VertexSet d = FromVector(PartVertices(inst.parts, "D"));
  const int n = g.num_vertices();
  int cycles = 0;
  for (VertexSet s = 1; s < FullSet(n) + 1; ++s) {
    if (Count(s) < 3) continue;
    const Digraph h = g.Induced(s);
    ForEachHamiltonCycle(h, [&](const std::vector<Vertex>&) {
      ++cycles;
      EXPECT_GE(Count(s & b), Count(s & d));
      return true;
    });
  }
  EXPECT_GT(cycles, 0);
}

TEST(Fig3, Semidegree) {
  for (int m : {1, 3, 5}) {
    const Instance inst = Fig3Haggkvist(m);
    const int n = inst.graph.num_vertices();
    ASSERT_EQ(n, 4 * m + 3);
    EXPECT_TRUE(IsInClass(inst.graph, GraphClass::kOriented));
    // ceil((3n-4)/8) - 1
    EXPECT_EQ(ComputeSemiDegrees(inst.graph).min_semi, (3 * n - 4 + 7) / 8 - 1) << m;
    EXPECT_EQ(PartVertices(inst.parts, "D").size(),
              PartVertices(inst.parts, "B").size() + 1);
  }
  EXPECT_FALSE(FindHamiltonCycle(Fig3Haggkvist(3).graph).has_value());
  EXPECT_THROW(Fig3Haggkvist(2), BadParams);
}

TEST(Fig3, BipartiteTournamentBalanced) {
  const Instance inst = Fig3Haggkvist(5);
  const auto b = PartVertices(inst.parts, "B");
  const auto d = PartVertices(inst.parts, "D");
  const VertexSet dset = FromVector(d), bset = FromVector(b);
  for (Vertex v : b) {
    const int out = Count(inst.graph.Out(v) & dset), in = Count(inst.graph.In(v) & dset);
    EXPECT_EQ(out + in, static_cast<int>(d.size()));
    EXPECT_LE(std::abs(out - in), 1);
  }
  for (Vertex v : d) {
    const int out = Count(inst.graph.Out(v) & bset), in = Count(inst.graph.In(v) & bset);
    EXPECT_LE(std::abs(out - in), 1);
  }
}

TEST(Fig4, NoSquareOfHamiltonCycle) {
  const Instance inst = Fig4Square(2);
  const Digraph& g = inst.graph;
  ASSERT_EQ(g.num_vertices(), 12);
  EXPECT_TRUE(IsInClass(g, GraphClass::kOriented));
  const std::vector<std::size_t> sizes = {2, 1, 5, 1, 3};
  const char* names[] = {"A", "B", "C", "D", "E"};
  for (int i = 0; i < 5; ++i) EXPECT_EQ(PartVertices(inst.parts, names[i]).size(), sizes[i]);
  EXPECT_FALSE(KthPowerHamilton(g, 2).has_value());
  // Its underlying structure still has an ordinary Hamilton cycle.
  EXPECT_TRUE(FindHamiltonCycle(g).has_value());
  // Frozen semidegree of this instance.
  EXPECT_EQ(ComputeSemiDegrees(g).min_semi, 3);
  EXPECT_THROW(Fig4Square(3), BadParams);
}

TEST(Fig4, LargerInstanceClassAndParts) {
  const Instance inst = Fig4Square(4);
  EXPECT_EQ(inst.graph.num_vertices(), 4 + 3 + 9 + 3 + 5);
  EXPECT_TRUE(IsInClass(inst.graph, GraphClass::kOriented));
  for (const char* p : {"B", "C", "D"}) {
    const VertexSet s = FromVector(PartVertices(inst.parts, p));
    EXPECT_TRUE(IsRegularTournament(inst.graph.Induced(s))) << p;
  }
  for (const char* p : {"A", "E"}) {
    const VertexSet s = FromVector(PartVertices(inst.parts, p));
    EXPECT_EQ(inst.graph.Induced(s).num_arcs(), 0) << p;
  }
}

TEST(NwExtremal, DegreeSequencesAndHamiltonicity) {
  const Instance inst = NwExtremal(7, 2);
  const DegreeSequencePair seq = DegreeSequences(inst.graph);
  const std::vector<int> expected = {2, 2, 4, 4, 4, 6, 6};
  EXPECT_EQ(seq.out_seq, expected);
  EXPECT_EQ(seq.in_seq, expected);
  EXPECT_TRUE(IsStronglyConnected(inst.graph));
  EXPECT_FALSE(oracle::IsHamiltonian(inst.graph));
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const Instance g = NwExtremal(n, k);
      // k vertices of degree k, n - 2k of degree n - k - 1, k of n - 1.
      std::vector<int> want;
      for (int i = 0; i < k; ++i) want.push_back(k);
      for (int i = 0; i < n - 2 * k; ++i) want.push_back(n - k - 1);
      for (int i = 0; i < k; ++i) want.push_back(n - 1);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(DegreeSequences(g.graph).out_seq, want) << n << "," << k;
      EXPECT_EQ(DegreeSequences(g.graph).in_seq, want);
      EXPECT_FALSE(oracle::IsHamiltonian(g.graph));
    }
  }
  EXPECT_THROW(NwExtremal(6, 3), BadParams);
}

TEST(OtherFamilies, Basics) {
  const Instance bip = PancyclicBipartite(6);
  EXPECT_EQ(ComputeSemiDegrees(bip.graph).min_semi, 3);
  EXPECT_FALSE(IsPancyclic(bip.graph).verdict.holds);
  const Instance two = TwoRegularTournaments(2);
  EXPECT_EQ(two.graph.num_vertices(), 10);
  EXPECT_FALSE(IsStronglyConnected(two.graph));
  EXPECT_TRUE(IsRegularTournament(two.graph.Induced(FromVector(PartVertices(two.parts, "T1")))));
  const std::vector<int> sizes = {2, 3, 1};
  const Instance blow = CycleBlowup(3, sizes);
  EXPECT_EQ(blow.graph.num_vertices(), 6);
  EXPECT_EQ(blow.graph.num_arcs(), 2 * 3 + 3 * 1 + 1 * 2);
}

TEST(Tournaments, Circulant) {
  const Digraph t = CirculantTournament(5);
  for (Vertex i = 0; i < 5; ++i) {
    EXPECT_TRUE(t.HasArc(i, (i + 1) % 5));
    EXPECT_TRUE(t.HasArc(i, (i + 2) % 5));
  }
  EXPECT_TRUE(IsRegularTournament(t));
  const std::vector<int> shifts = {1, 3};
  EXPECT_TRUE(IsRegularTournament(CirculantTournament(5, shifts)));
  const std::vector<int> bad = {1, 4};
  EXPECT_THROW(CirculantTournament(5, bad), BadParams);
  EXPECT_THROW(CirculantTournament(6), BadParams);
}

TEST(Tournaments, TransitiveAndRandom) {
  const Digraph t = TransitiveTournament(4);
  EXPECT_EQ(DegreeSequences(t).out_seq, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(IsStronglyConnected(t));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph r = RandomRegularTournament(9, seed);
    EXPECT_TRUE(IsRegularTournament(r));
    EXPECT_TRUE(IsInClass(RandomTournament(12, seed), GraphClass::kTournament));
  }
  EXPECT_NE(RandomRegularTournament(11, 1), CirculantTournament(11));
  EXPECT_THROW(RandomRegularTournament(8, 1), BadParams);
}

TEST(Tournaments, NearRegular) {
  for (int n = 3; n <= 20; ++n) {
    const Digraph t = NearRegularTournament(n);
    ASSERT_TRUE(IsInClass(t, GraphClass::kTournament));
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_LE(std::abs(t.OutDegree(v) - t.InDegree(v)), 1);
    }
  }
}

TEST(Classic, Examples) {
  EXPECT_EQ(CompleteDigraph(4).num_arcs(), 12);
  const Digraph kb = CompleteBipartiteDigraph(3, 3);
  EXPECT_EQ(ComputeSemiDegrees(kb).min_semi, 3);
  EXPECT_FALSE(IsPancyclic(kb).verdict.holds);
  EXPECT_FALSE(FindCycleOfLength(kb, 3).has_value());
  const Digraph c6 = DirectedCycle(6);
  EXPECT_TRUE(FindHamiltonCycle(c6).has_value());
  EXPECT_EQ(ComputeSemiDegrees(c6).min_semi, 1);
  EXPECT_TRUE(CompleteGraph(5).IsSymmetric());
  EXPECT_TRUE(UndirectedCycle(5).IsSymmetric());
}

TEST(RandomRegularGraph, RegularAndSeeded) {
  for (int d : {3, 4, 5}) {
    const Digraph g = RandomRegularGraph(16, d, 7);
    EXPECT_TRUE(g.IsSymmetric());
    for (Vertex v = 0; v < 16; ++v) EXPECT_EQ(g.OutDegree(v), d);
    EXPECT_EQ(g, RandomRegularGraph(16, d, 7));
  }
  EXPECT_NE(RandomRegularGraph(16, 4, 1), RandomRegularGraph(16, 4, 2));
  EXPECT_THROW(RandomRegularGraph(7, 3, 1), BadParams);
}

TEST(Determinism, SerializedOutputIsStable) {
  EXPECT_EQ(WriteDigraph(RandomTournament(15, 42)), WriteDigraph(RandomTournament(15, 42)));
  EXPECT_NE(WriteDigraph(RandomTournament(15, 42)), WriteDigraph(RandomTournament(15, 43)));
  EXPECT_EQ(WriteDigraph(RandomDigraph(10, 0.3, 5)), WriteDigraph(RandomDigraph(10, 0.3, 5)));
  EXPECT_EQ(WriteParts(Fig4Square(2).parts), WriteParts(Fig4Square(2).parts));
}

TEST(Enumeration, TournamentCounts) {
  int all = 0;
  ForEachTournament(5, [&](const Digraph& g) {
    EXPECT_TRUE(IsInClass(g, GraphClass::kTournament));
    ++all;
  });
  EXPECT_EQ(all, 1 << 10);
  // Regular labelled tournaments: 2, 24, 2640 for n = 3, 5, 7.
  const std::vector<std::pair<int, int>> expected = {{3, 2}, {5, 24}, {7, 2640}};
  for (const auto& [n, count] : expected) {
    int regular = 0, filtered = 0;
    ForEachRegularTournament(n, [&](const Digraph&) { ++regular; });
    if (n <= 5) {
      ForEachTournament(n, [&](const Digraph& g) {
        bool ok = true;
        for (Vertex v = 0; v < n; ++v) ok = ok && g.OutDegree(v) == (n - 1) / 2;
        filtered += ok;
      });
      EXPECT_EQ(filtered, regular);
    }
    EXPECT_EQ(regular, count) << n;
  }
}

}  // namespace
}  // namespace hamdg
