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

// Certificate objects returned by solvers. Each one can be re-checked
// against its host graph without trusting the code that produced it.

#ifndef HAMDG_CERTIFICATES_H_
#define HAMDG_CERTIFICATES_H_

#include <vector>

#include "hamdg/digraph.h"

namespace hamdg {

// Cyclic order of all vertices; order[i] -> order[i+1] and the wrap-around
// pair are arcs of the host.
struct HamiltonCycle {
  std::vector<Vertex> order;
  bool operator==(const HamiltonCycle&) const = default;
};

// Vertex-disjoint directed cycles covering every vertex.
struct CycleFactor {
  std::vector<std::vector<Vertex>> cycles;
  bool operator==(const CycleFactor&) const = default;
};

// Vertex-disjoint arcs.
struct Matching {
  std::vector<Arc> arcs;
  bool operator==(const Matching&) const = default;
};

// Arcs of a closed vertex sequence, including the wrap-around arc.
std::vector<Arc> CycleArcs(const std::vector<Vertex>& order);

// True iff `order` is a permutation of V(g) whose consecutive pairs
// (cyclically) are arcs of g. Needs n >= 2.
bool IsHamiltonCycle(const Digraph& g, const HamiltonCycle& c);

// True iff `cycle` is a directed cycle of g on distinct vertices, length >= 2.
bool IsCycle(const Digraph& g, const std::vector<Vertex>& cycle);

bool IsCycleFactor(const Digraph& g, const CycleFactor& f, int min_length = 2);

// Endpoints pairwise distinct and no loops. Does not look at a host graph.
bool IsMatching(const Matching& m);

// Matching whose arcs are all present in g.
bool IsMatchingIn(const Digraph& g, const Matching& m);

// Rotates so that the smallest vertex comes first.
HamiltonCycle Canonical(HamiltonCycle c);
std::vector<Vertex> CanonicalCycle(std::vector<Vertex> cycle);
// Canonicalizes each cycle and sorts cycles by first vertex.
CycleFactor Canonical(CycleFactor f);

}  // namespace hamdg

#endif  // HAMDG_CERTIFICATES_H_
