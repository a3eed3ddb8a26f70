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


// Robust outexpansion and the cluster machinery that turns a closed walk on
// a reduced digraph into a Hamilton cycle of a blown-up digraph: robust
// out-neighbourhoods, epsilon-regular pairs, shifted walks, the closed walk
// through the exceptional vertices, per-cluster matchings and their merging.

#ifndef HAMDG_EXPANDER_H_
#define HAMDG_EXPANDER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamdg/certificates.h"
#include "hamdg/digraph.h"
#include "hamdg/verdict.h"

namespace hamdg {

// Desk-scale defaults; the asymptotic hierarchy gives no concrete values.
struct ExpanderParams {
  Fraction nu{1, 20};
  Fraction tau{1, 5};
  Fraction eps{1, 5};
  Fraction d{1, 2};
  Fraction eta{3, 10};
};

// ceil(nu * n), the integer form of "at least nu n".
int NuThreshold(const Fraction& nu, int n);

// Vertices of `within` with at least ceil(nu |within|) in-neighbours in
// S & within.
VertexSet RobustOutNeighbourhood(const Digraph& g, VertexSet s, const Fraction& nu,
                                 VertexSet within = ~VertexSet{0});

enum class CheckMode { kExact, kSampled };

struct CheckOptions {
  CheckMode mode = CheckMode::kExact;
  int trials = 10'000;      // sampled mode
  std::uint64_t seed = 0;   // sampled mode
  int exact_max_vertices = 20;
};

// |RN^+(S)| >= |S| + nu n for every S with tau n < |S| < (1 - tau) n.
// Exact mode scans subsets by size, then numerically, and reports the first
// violation; it throws BudgetExceeded above exact_max_vertices. Sampled mode
// draws uniform subsets and can only refute. Requires nu <= tau.
Verdict IsRobustOutexpander(const Digraph& g, const Fraction& nu, const Fraction& tau,
                            const CheckOptions& opts = {});

// Arcs from class A to class B; adjacency[i] has bit j set iff a_i -> b_j.
struct BipartitePair {
  std::vector<Vertex> a;  // host labels
  std::vector<Vertex> b;
  std::vector<VertexSet> adjacency;

  static BipartitePair FromDigraph(const Digraph& g, const std::vector<Vertex>& a,
                                   const std::vector<Vertex>& b);
  int Edges() const;
  Fraction Density() const;
};

struct RegularityReport {
  Verdict verdict;
  Fraction density = 0;
  bool exact = true;
};

inline constexpr int kExactPairMaxSide = 14;

// For all X, Y with |X| >= eps|A|, |Y| >= eps|B|: |d(X,Y) - d(A,B)| < eps.
// For each X the extreme densities over |Y| = k come from the k highest and
// lowest degrees into X, so only subsets of A are enumerated. The witness
// is the most irregular pair found (largest deviation, then largest
// |X| + |Y|). Exact mode throws BudgetExceeded if a side exceeds
// kExactPairMaxSide; sampled mode draws `trials` sets X.
RegularityReport EpsilonRegularPair(const BipartitePair& pair, const Fraction& eps,
                                    const CheckOptions& opts = {});

// Epsilon-regular and every a has at least d|B| out-neighbours in B, every
// b at least d|A| in-neighbours in A.
RegularityReport SuperRegularPair(const BipartitePair& pair, const Fraction& eps,
                                  const Fraction& d, const CheckOptions& opts = {});

// Position of each cluster on the 1-factor F of the reduced digraph R.
struct FactorIndex {
  std::vector<int> cycle_of;
  std::vector<Vertex> pred;
  std::vector<Vertex> succ;

  // Throws BadParams unless f is a 1-factor of r.
  FactorIndex(const Digraph& r, const CycleFactor& f);
};

// W(A,B) = X_1 C_1 X_1^- X_2 ... X_t C_t X_t^- X_{t+1}, stored as the
// entry sequence X_1 .. X_{t+1}.
struct ShiftedWalk {
  std::vector<Vertex> entries;

  int t() const { return static_cast<int>(entries.size()) - 1; }
  std::vector<Vertex> EntryClusters() const;  // X_2 .. X_{t+1}
  std::vector<Vertex> ExitClusters(const FactorIndex& fi) const;
  // Full cluster sequence including every wound cycle.
  std::vector<Vertex> Expand(const FactorIndex& fi) const;
};

// Breadth-first over X -> Y whenever X^- -> Y is an arc of R, ascending
// neighbours; the walk has minimal t.
std::optional<ShiftedWalk> FindShiftedWalk(const Digraph& r, const CycleFactor& f,
                                           Vertex from, Vertex to);

bool IsValidShiftedWalk(const Digraph& r, const CycleFactor& f, const ShiftedWalk& w,
                        Vertex from, Vertex to);

// Exceptional vertex i leaves to cluster entry (T_i) and is entered from
// cluster exit (U_i).
struct Demand {
  Vertex entry = 0;
  Vertex exit = 0;
};

// A closed walk made of segments. Segment j enters cluster entries[j],
// winds its F-cycle and leaves from its predecessor; the link to segment
// j+1 passes through exceptional vertex via[j] (or none when -1). A link
// whose next entry equals the current one just winds the cycle again and
// fixes no arc.
struct ClosedWalk {
  std::vector<Vertex> entries;
  std::vector<int> via;
  // Per cluster: how often it is entered or left by a non-winding link.
  std::vector<int> entry_count;
  std::vector<int> exit_count;

  // Clusters as non-negative ids, exceptional vertex i as -(i + 1).
  std::vector<int> Expand(const FactorIndex& fi) const;
};

struct ClosedWalkOptions {
  int cluster_size = 1;  // m
  // Upper bound on entry_count + exit_count per cluster; defaults to m/10.
  std::optional<Fraction> demand_cap;
};

// Starts at T_1, follows shifted walks to U_2^+ (through one waypoint on
// each F-cycle the legs would otherwise miss), winds to U_2, passes a_2,
// and so on back to a_1. Throws DemandOverload when some cluster occurs
// too often as T_i / U_i or as an entry or exit cluster, Disconnected when
// a shifted walk is missing.
ClosedWalk BuildClosedWalk(const Digraph& r, const CycleFactor& f,
                           const std::vector<Demand>& demands,
                           const ClosedWalkOptions& opts);

// Checks (a) every cluster and every exceptional vertex is visited, the
// latter exactly once, (b) visits are equal along each F-cycle, (c) the
// counts respect the cap, plus arc membership of every link.
Verdict ValidateClosedWalk(const Digraph& r, const CycleFactor& f,
                           const std::vector<Demand>& demands, const ClosedWalk& w,
                           const ClosedWalkOptions& opts);

// Clusters i occupy vertices i*m .. i*m+m-1; exceptional vertices follow.
struct ClusterBlowup {
  Digraph graph;
  int cluster_size = 0;
  std::vector<std::vector<Vertex>> clusters;
  std::vector<Vertex> exceptional;
};

struct BlowupSpec {
  int cluster_size = 5;
  double pair_density = 1.0;  // per arc of each R-pair
  int exceptional = 0;
  int exceptional_degree = 3;  // in- and out-neighbours per cluster
  std::uint64_t seed = 0;
};

ClusterBlowup MakeClusterBlowup(const Digraph& r, const BlowupSpec& spec);

// Picks (T_i, U_i) for each exceptional vertex in order: a has an
// out-neighbour in T_i and an in-neighbour in U_i, a shifted walk leads from
// T_{i-1} to U_i^+ and from T_i to U_1^+. Among those, least used clusters
// first, then most neighbours, then lowest ids. Throws Disconnected when no
// pair qualifies.
std::vector<Demand> ChooseDemands(const ClusterBlowup& b, const Digraph& r,
                                  const CycleFactor& f);

struct MergeStep {
  Vertex cluster = 0;
  int j_vertices = 0;
  int cycles_before = 0;
  int cycles_after = 0;
  bool exact_fallback = false;
};

struct AssemblyTrace {
  std::vector<Arc> fixed_arcs;
  CycleFactor initial_factor;
  std::vector<MergeStep> merges;
};

struct AssemblyResult {
  HamiltonCycle cycle;
  AssemblyTrace trace;
};

// Fixes disjoint arcs for every non-winding link of W, matches each G_A
// perfectly, and merges each cluster through a Hamilton cycle of the
// auxiliary digraph J. Throws MatchingFailure naming the failing cluster
// pair (or link) and MergeFailure when J has no Hamilton cycle or the
// final factor is not a single cycle.
AssemblyResult AssembleHamilton(const ClusterBlowup& b, const Digraph& r,
                                const CycleFactor& f, const ClosedWalk& w);

// Every stage of one synthetic run, for inspection.
struct PipelineResult {
  ClusterBlowup blowup;
  // Super-regularity of each pair (A, A^+) along F, in cluster order.
  std::vector<RegularityReport> pair_reports;
  std::vector<Demand> demands;
  ClosedWalk walk;
  AssemblyResult assembly;
};

// Blow-up, demand choice, closed walk, and assembly. Pair checks use exact
// mode when m <= kExactPairMaxSide and sampled mode otherwise; they are
// reported, not enforced. The returned cycle is validated against the
// blow-up.
PipelineResult RunBlowupPipeline(const Digraph& r, const CycleFactor& f, const BlowupSpec& spec,
                                 const ClosedWalkOptions& walk_opts,
                                 const ExpanderParams& params = {});

}  // namespace hamdg

#endif  // HAMDG_EXPANDER_H_
