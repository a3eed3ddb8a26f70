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

// Degree, connectivity, and independence primitives plus the structural
// transformations (matching contraction, blow-up) shared by all modules.

#ifndef HAMDG_GRAPHCORE_H_
#define HAMDG_GRAPHCORE_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hamdg/certificates.h"
#include "hamdg/digraph.h"

namespace hamdg {

struct SemiDegrees {
  int min_out = 0;   // delta^+
  int min_in = 0;    // delta^-
  int min_semi = 0;  // delta^0 = min(delta^+, delta^-)
};

// For n = 0 all three are 0.
SemiDegrees ComputeSemiDegrees(const Digraph& g);

// Out- and in-degree sequences, each sorted ascending independently.
struct DegreeSequencePair {
  std::vector<int> out_seq;
  std::vector<int> in_seq;
  bool operator==(const DegreeSequencePair&) const = default;
};

DegreeSequencePair DegreeSequences(const Digraph& g);

// Vertices reachable from `source` using only vertices in `within`
// (source itself is always included).
VertexSet ReachableFrom(const Digraph& g, Vertex source,
                        VertexSet within = ~VertexSet{0});
// Vertices that can reach `target` inside `within`.
VertexSet ReachingTo(const Digraph& g, Vertex target,
                     VertexSet within = ~VertexSet{0});

bool IsStronglyConnected(const Digraph& g);

// Some ordered pair (u, v) such that v is unreachable from u, lowest
// u then lowest v; {-1, -1} when g is strongly connected.
std::pair<Vertex, Vertex> UnreachablePair(const Digraph& g);

// Number of weakly connected components of g restricted to `within`.
int WeakComponents(const Digraph& g, VertexSet within);

// kappa(G): the size of a smallest vertex set S such that G - S is not
// strongly connected or is a single vertex. Needs n >= 2. Uses deletion
// enumeration for n <= 10 and max-flow otherwise.
int VertexConnectivity(const Digraph& g);
// Menger / unit-capacity max-flow on the vertex-split network.
int VertexConnectivityByFlow(const Digraph& g);
// Tries every vertex subset in order of size.
int VertexConnectivityByDeletion(const Digraph& g);

struct IndependenceNumbers {
  int alpha0 = 0;  // largest set inducing no arc
  int alpha2 = 0;  // largest set inducing no 2-cycle
};

inline constexpr int kDefaultIndependenceCap = 30;

// Exact branch-and-bound. Throws BudgetExceeded if n > max_vertices.
IndependenceNumbers ComputeIndependenceNumbers(
    const Digraph& g, int max_vertices = kDefaultIndependenceCap);

// Largest independent set of an undirected adjacency given as bit rows.
VertexSet MaximumIndependentSet(std::span<const VertexSet> adjacency);

// Unordered pairs {x, y}, x < y, that have a common in-neighbour.
std::vector<std::pair<Vertex, Vertex>> DominatedPairs(const Digraph& g);

// Result of contracting a matching: each arc x->y becomes one vertex whose
// in-neighbourhood is x's and out-neighbourhood is y's.
struct Contraction {
  Digraph graph;
  // For each contracted vertex, the original vertices it stands for in
  // path order: {w} or {x, y}.
  std::vector<std::vector<Vertex>> origin;

  // Expands a Hamilton cycle of `graph` into one of the original digraph.
  HamiltonCycle Lift(const HamiltonCycle& c) const;
};

// Throws NotAMatching if arcs share endpoints, ArcMissing if an arc is not
// in g. New vertices are numbered by ascending original vertex, skipping
// arc heads (a contracted vertex takes the slot of its tail).
Contraction ContractMatching(const Digraph& g, const Matching& m);

// How pair arc sets of a blow-up are filled in.
struct BlowupDensity {
  // 1.0 inserts every arc of the complete one-way bipartite graph; below 1
  // each arc is kept independently with this probability.
  double keep_probability = 1.0;
  std::uint64_t seed = 0;
};

// Each vertex v becomes an independent set of sizes[v] vertices (blocks
// numbered consecutively in vertex order); each arc u->v becomes one-way
// arcs from block u to block v. Throws BadParams on non-positive sizes.
Digraph BlowUp(const Digraph& g, std::span<const int> sizes,
               const BlowupDensity& density = {});

// Vertex blocks used by BlowUp for the given sizes.
std::vector<std::vector<Vertex>> BlowUpBlocks(std::span<const int> sizes);

}  // namespace hamdg

#endif  // HAMDG_GRAPHCORE_H_
