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


// Deterministic generators: extremal examples, tournaments, classic graphs,
// and seeded random families. Every generator is a pure function of its
// parameters and seed.

#ifndef HAMDG_CONSTRUCTIONS_H_
#define HAMDG_CONSTRUCTIONS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hamdg/digraph.h"
#include "hamdg/parts.h"

namespace hamdg {

// A generated graph with its labelled parts and the class it belongs to.
struct Instance {
  Digraph graph;
  PartMap parts;
  GraphClass declared = GraphClass::kDigraph;
};

// Three cliques on 3s vertices with sets A_i, B_i (|A_1| = |A_2| = s,
// |A_3| = s - 1) and a perfect matching between A_i and B_i removed; a
// joins every A_i, b joins every B_i. Undirected, n = 9s + 2. s >= 2.
// Parts: Q1..Q3 (cliques), A1..A3, B1..B3, a, b.
Instance Fig1(int s);

// Complete digraph K on n-3 vertices plus x, y, z (complete digraph on
// {x,y,z} without x->z), x <-> K, y -> K. Labels: K = 0..n-4, x = n-3,
// y = n-2, z = n-1. n >= 4. Parts: K, x, y, z.
Instance Fig2(int n);

// Parts A, B, C, D of sizes m, m+1, m, m+2. A and C span circulant
// tournaments, b_i -> d_j iff i + j is even (otherwise d_j -> b_i), and
// all arcs A->B, B->C, C->D, D->A. m odd >= 1, n = 4m + 3.
Instance Fig3Haggkvist(int m);

// Parts A, B, C, D, E of sizes m, m-1, 2m+1, m-1, m+1 (m even >= 2).
// B, C, D span circulant tournaments; A, E are independent. Balanced
// bipartite orientations between A-B and B-E; one-way arcs A->C, B->C,
// C->D, C->E, D->A, D->B, E->A, E->D.
Instance Fig4Square(int m);

// Independent set I (0..k-1), X (k..2k-1), and K = X plus the remaining
// vertices spanning a complete digraph; all arcs both ways between I and
// X. 1 <= k, 2k < n. Parts: I, X, K.
Instance NwExtremal(int n, int k);

// Complete bipartite digraph with classes floor(n/2), ceil(n/2). n >= 2.
Instance PancyclicBipartite(int n);

// Disjoint union of two circulant tournaments on 2d+1 vertices. d >= 1.
Instance TwoRegularTournaments(int d);

// Blow-up of the directed k-cycle with the given part sizes. k >= 2.
Instance CycleBlowup(int k, std::span<const int> sizes);

// Tournaments.
// shifts empty means {1, ..., (n-1)/2}. Throws BadParams unless n is odd
// and the shifts contain exactly one of d, n-d for every d in 1..n-1.
Digraph CirculantTournament(int n, std::span<const int> shifts = {});
Digraph RandomTournament(int n, std::uint64_t seed);
// Circulant start followed by 50 n^2 seeded attempts to reverse a cyclic
// triangle; semidegrees stay (n-1)/2. Odd n only.
Digraph RandomRegularTournament(int n, std::uint64_t seed);
// i -> j for all i < j.
Digraph TransitiveTournament(int n);
// Odd n: the circulant tournament. Even n: the circulant tournament on
// n+1 vertices minus its last vertex, so that |d^+(v) - d^-(v)| = 1.
Digraph NearRegularTournament(int n);

// Exhaustive enumeration of labelled tournaments: pairs (i, j), i < j, in
// lexicographic order, i -> j before j -> i. The regular variant prunes on
// semidegrees and visits only regular tournaments (n odd). n <= 9.
void ForEachTournament(int n, const std::function<void(const Digraph&)>& visit);
void ForEachRegularTournament(int n, const std::function<void(const Digraph&)>& visit);

// Classic graphs.
Digraph CompleteDigraph(int n);
Digraph CompleteGraph(int n);  // symmetric
Digraph CompleteBipartiteDigraph(int a, int b);
Digraph DirectedCycle(int n);
Digraph UndirectedCycle(int n);
// Each ordered pair is an arc independently with probability p.
Digraph RandomDigraph(int n, double p, std::uint64_t seed);
// Symmetric d-regular graph: circulant start (plus the antipodal matching
// for odd d) and 20 n d seeded double-edge switches. Needs d < n and n d
// even.
Digraph RandomRegularGraph(int n, int d, std::uint64_t seed);

}  // namespace hamdg

#endif  // HAMDG_CONSTRUCTIONS_H_
