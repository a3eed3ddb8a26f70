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


// Exact searches for Hamilton cycles and their variants. Every search
// returns a certificate that can be validated independently; a budget exit
// is reported by BudgetExceeded and never as "no solution".

#ifndef HAMDG_SOLVERS_H_
#define HAMDG_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hamdg/certificates.h"
#include "hamdg/digraph.h"
#include "hamdg/verdict.h"

namespace hamdg {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

// Cheap necessary conditions checked before a Hamilton search: minimum
// semidegree >= 1, strong connectivity, a 1-factor, and c(G - S) <= |S|
// for every |S| <= 2 in the underlying graph. False means no Hamilton cycle.
bool PassesHamiltonPrechecks(const Digraph& g);

// Backtracking from vertex 0 with ascending neighbour order, pruned by
// forced moves and bit-parallel reachability. Throws BudgetExceeded.
std::optional<HamiltonCycle> FindHamiltonCycle(const Digraph& g,
                                               const SearchOptions& opts = {});

// Calls `visit` once per Hamilton cycle (as an order starting at vertex 0)
// until it returns false. Returns the number of cycles visited.
std::uint64_t ForEachHamiltonCycle(
    const Digraph& g,
    const std::function<bool(const std::vector<Vertex>&)>& visit,
    const SearchOptions& opts = {});

using BigRational = boost::multiprecision::cpp_rational;

struct CountReport {
  std::uint64_t hamilton_paths = 0;
  std::uint64_t hamilton_cycles = 0;  // each cycle counted once
  BigRational f_reference;            // n! / 2^(n-1)
  BigRational g_reference;            // (n-1)! / 2^n
};

struct CountOptions {
  // Upper bound on DP table memory; larger tables throw BudgetExceeded.
  std::size_t memory_cap_bytes = std::size_t{1} << 30;
};

BigRational PathReference(int n);
BigRational CycleReference(int n);

// Subset dynamic programming over (visited set, endpoint). Throws
// BudgetExceeded when the table exceeds the cap or a count overflows
// 64 bits.
CountReport CountHamilton(const Digraph& g, const CountOptions& opts = {});

// Hamilton cycle containing every arc of m: contraction, search, lift.
// Throws NotAMatching / ArcMissing for invalid m.
std::optional<HamiltonCycle> HamiltonCycleThrough(const Digraph& g,
                                                  const Matching& m,
                                                  const SearchOptions& opts = {});

// Perfect matching of the bipartite double cover (Kuhn's augmenting paths,
// ascending order), read off as a cycle factor.
std::optional<CycleFactor> OneFactor(const Digraph& g);

// 3 when g has no 2-cycle, otherwise 2.
int MinCycleLength(const Digraph& g);

struct PancyclicityReport {
  Verdict verdict;
  int min_length = 0;
  // cycles[L - min_length] is a cycle of length L, for every length found
  // before the first missing one.
  std::vector<std::vector<Vertex>> cycles;
};

PancyclicityReport IsPancyclic(const Digraph& g, const SearchOptions& opts = {});

// Some cycle of exactly `length` vertices, or none.
std::optional<std::vector<Vertex>> FindCycleOfLength(const Digraph& g, int length,
                                                     const SearchOptions& opts = {});

// Cyclic order with v_i -> v_{i+j} for 1 <= j <= k. k >= 1.
std::optional<HamiltonCycle> KthPowerHamilton(const Digraph& g, int k,
                                              const SearchOptions& opts = {});
bool IsKthPowerCycle(const Digraph& g, const HamiltonCycle& c, int k);

// Hamilton cycle meeting `sequence` in this cyclic order. The result starts
// at sequence[0] when the sequence is non-empty.
std::optional<HamiltonCycle> KOrderedHamilton(const Digraph& g,
                                              std::span<const Vertex> sequence,
                                              const SearchOptions& opts = {});
bool VisitsInCyclicOrder(const HamiltonCycle& c, std::span<const Vertex> sequence);

// forward[i] says whether the i-th edge runs from the i-th vertex to the
// next one (true) or back (false).
struct OrientationPattern {
  std::vector<bool> forward;

  static OrientationPattern AllForward(int length);
  // Alternating forward/backward. Throws BadParams for odd length.
  static OrientationPattern Antidirected(int length);
  // 'F'/'B' characters, e.g. "FFBF".
  static OrientationPattern Parse(std::string_view text);
  // Bit i of mask set means edge i is forward.
  static OrientationPattern FromMask(int length, std::uint64_t mask);
};

// Cyclic order realizing the n-edge pattern. Tries every start vertex.
std::optional<std::vector<Vertex>> OrientedHamiltonCycle(
    const Digraph& g, const OrientationPattern& pattern,
    const SearchOptions& opts = {});
// Vertex order realizing an (n-1)-edge pattern along a Hamilton path.
std::optional<std::vector<Vertex>> OrientedHamiltonPath(
    const Digraph& g, const OrientationPattern& pattern,
    const SearchOptions& opts = {});
bool RealizesPattern(const Digraph& g, const std::vector<Vertex>& order,
                     const OrientationPattern& pattern, bool cyclic);

// Factor whose cycle lengths are exactly the given multiset. Throws
// BadParams if the lengths do not sum to n or some length is below 2.
std::optional<CycleFactor> DisjointCycleFactor(const Digraph& g,
                                               std::span<const int> lengths,
                                               const SearchOptions& opts = {});

// True iff `tree` is an orientation of a tree (connected, |A| = n - 1, no
// 2-cycles).
bool IsOrientedTree(const Digraph& tree);

// Injective image[t] for every tree vertex t with every tree arc mapped to
// a host arc in the same direction. Throws BadParams if `tree` is not an
// oriented tree.
std::optional<std::vector<Vertex>> EmbedTree(const Digraph& host,
                                             const Digraph& tree,
                                             const SearchOptions& opts = {});
bool IsEmbedding(const Digraph& host, const Digraph& tree,
                 const std::vector<Vertex>& image);

// Rotation-extension heuristic started from `start` (or a 1-factor found
// by OneFactor). Returns a Hamilton cycle or nothing; never throws on
// failure. Bounded by n^2 rotations.
std::optional<HamiltonCycle> RotationExtension(
    const Digraph& g, const std::optional<CycleFactor>& start = std::nullopt);

}  // namespace hamdg

#endif  // HAMDG_SOLVERS_H_
