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


// Hamilton decompositions and covers: Walecki's construction, exact
// decomposition search, greedy extraction, Misra-Gries edge colouring, and
// the matching-based cover pipelines for regular tournaments and regular
// undirected graphs.

#ifndef HAMDG_DECOMP_H_
#define HAMDG_DECOMP_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hamdg/certificates.h"
#include "hamdg/digraph.h"
#include "hamdg/errors.h"
#include "hamdg/solvers.h"
#include "hamdg/verdict.h"

namespace hamdg {

// kArcs: a cycle covers its directed arcs. kEdges: the host is symmetric and
// a cycle covers the undirected edges {v_i, v_i+1}, keyed as Arc{min, max}.
enum class EdgeSemantics { kArcs, kEdges };

// Arcs (or edges, normalized min -> max) covered by one cycle.
std::vector<Arc> CoveredItems(const std::vector<Vertex>& order, EdgeSemantics sem);
// Arcs (or edges with from < to) of the host.
std::vector<Arc> HostItems(const Digraph& g, EdgeSemantics sem);

struct Decomposition {
  std::vector<HamiltonCycle> cycles;
  EdgeSemantics semantics = EdgeSemantics::kArcs;
};

struct Cover {
  std::vector<HamiltonCycle> cycles;
  EdgeSemantics semantics = EdgeSemantics::kArcs;
  // How many cycles use each arc (edge).
  std::map<Arc, int> multiplicity;
};

// Fills multiplicity from cycles.
void RecountMultiplicity(Cover& cover);

// Undirected proper colouring; each class holds edges as Arc{min, max}.
struct EdgeColoring {
  std::vector<Matching> classes;
};

// Raised when no Hamilton cycle of the host contains a required matching.
class CoverFailure : public Error {
 public:
  CoverFailure(const std::string& what, Matching m)
      : Error(what), matching_(std::move(m)) {}
  const Matching& matching() const { return matching_; }

 private:
  Matching matching_;
};

// Zigzag Hamilton decomposition of K_n (edge semantics). n odd >= 3.
Decomposition Walecki(int n);

// Every arc (edge) lies on exactly one Hamilton cycle. Backtracks over the
// cycles through the lowest remaining arc at vertex 0. Returns nothing when
// the graph is not regular or the search is exhausted. Throws
// BudgetExceeded once the total number of candidate cycles or the nodes of
// one inner search exceed opts.node_budget.
std::optional<Decomposition> DecomposeExact(
    const Digraph& g, EdgeSemantics sem = EdgeSemantics::kArcs,
    const SearchOptions& opts = {});

struct Extraction {
  std::vector<HamiltonCycle> cycles;
  Digraph leftover;  // arcs (both directions for edges) on no cycle
};

// Repeatedly removes the Hamilton cycle found by FindHamiltonCycle.
Extraction GreedyExtract(const Digraph& g, EdgeSemantics sem = EdgeSemantics::kArcs,
                         const SearchOptions& opts = {});

// Greedy extraction on `restarts` random relabellings as well as the
// identity; keeps the run with the fewest leftover arcs.
Extraction GreedyExtractWithRestarts(const Digraph& g, EdgeSemantics sem,
                                     int restarts, std::uint64_t seed,
                                     const SearchOptions& opts = {});

// Misra-Gries colouring of a symmetric digraph with at most Delta+1 classes.
// Throws ClassMismatch if f is not symmetric.
EdgeColoring VizingColor(const Digraph& f);

// Consecutive pieces of at most `cap` arcs. cap >= 1.
std::vector<Matching> SplitMatching(const Matching& m, int cap);

struct CoverOptions {
  int matching_cap = 0;        // 0 means ceil(sqrt(n))
  int exact_max_vertices = 9;  // exact decomposition first up to this n
  int greedy_restarts = 3;
  std::uint64_t seed = 0;
  SearchOptions search;
};

struct CoverStats {
  int extracted = 0;       // cycles from the decomposition stage
  int leftover = 0;        // arcs (edges) left for the matching stage
  int colors = 0;          // colour classes of the leftover
  int matchings = 0;       // pieces after splitting
  bool exact = false;      // the decomposition stage was exact
};

struct CoverResult {
  Cover cover;
  CoverStats stats;
};

// Extraction (exact when small), then one Hamilton cycle through each piece
// of the coloured leftover. Throws ClassMismatch unless g is a regular
// tournament; throws CoverFailure naming the first matching that no
// Hamilton cycle contains.
CoverResult CoverTournament(const Digraph& g, const CoverOptions& opts = {});

// Same pipeline for a symmetric regular graph. Each matching is oriented
// from smaller to larger endpoint while all other edges are doubled; the
// resulting cycle is read as an undirected one.
CoverResult CoverRegularGraph(const Digraph& g, const CoverOptions& opts = {});

// ceil((1/2 + xi) n).
int CoverBenchmark(int n, const Fraction& xi);

// "decomposition": every cycle is Hamiltonian, items pairwise disjoint,
// every host item used, and count = |items| / n.
Verdict Validate(const Decomposition& d, const Digraph& g);
// "cover": every cycle is Hamiltonian, every host item covered, recorded
// multiplicities agree with the cycles.
Verdict Validate(const Cover& c, const Digraph& g);
// "edge_coloring": classes are matchings of f, disjoint, covering E(f),
// at most Delta+1 of them.
Verdict Validate(const EdgeColoring& c, const Digraph& f);

}  // namespace hamdg

#endif  // HAMDG_DECOMP_H_
