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


// Independent brute-force oracles used to cross-check the library. These
// deliberately share no search code with the library: permutations and
// subset scans only.

#ifndef HAMDG_TESTS_ORACLES_H_
#define HAMDG_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hamdg/digraph.h"

namespace hamdg::oracle {

inline std::vector<std::vector<bool>> Matrix(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Arc& arc : g.Arcs()) a[arc.from][arc.to] = true;
  return a;
}

// Number of Hamilton cycles, each counted once (vertex 0 fixed first).
inline std::uint64_t CountCycles(const Digraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return 0;
  const auto a = Matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[p[i]][p[(i + 1) % n]];
    if (ok) ++count;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return count;
}

inline bool IsHamiltonian(const Digraph& g) { return CountCycles(g) > 0; }

inline std::uint64_t CountPaths(const Digraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  const auto a = Matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = a[p[i]][p[i + 1]];
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Transitive closure by Floyd-Warshall.
inline bool IsStrong(const Digraph& g) {
  const int n = g.num_vertices();
  auto r = Matrix(g);
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!r[i][j]) return false;
    }
  }
  return true;
}

// Smallest |S| such that G - S is not strong or a single vertex.
inline int Kappa(const Digraph& g) {
  const int n = g.num_vertices();
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<Vertex> keep;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1)) keep.push_back(v);
    }
    if (keep.size() <= 1) continue;
    if (!IsStrong(g.Induced(FromVector(keep)))) best = size;
  }
  return best;
}

// Largest subset with no arc (two_cycles_only = false) or no 2-cycle.
inline int Alpha(const Digraph& g, bool two_cycles_only) {
  const int n = g.num_vertices();
  const auto a = Matrix(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!((mask >> u) & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v) {
        if (!((mask >> v) & 1)) continue;
        const bool bad = two_cycles_only ? (a[u][v] && a[v][u]) : (a[u][v] || a[v][u]);
        if (bad) ok = false;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Has a cycle on exactly `len` vertices (choose the vertex set, permute).
inline bool HasCycleOfLength(const Digraph& g, int len) {
  const int n = g.num_vertices();
  const auto a = Matrix(g);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != len) continue;
    std::vector<int> p;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) p.push_back(v);
    }
    do {
      bool ok = true;
      for (int i = 0; i < len && ok; ++i) ok = a[p[i]][p[(i + 1) % len]];
      if (ok) return true;
    } while (std::next_permutation(p.begin() + 1, p.end()));
  }
  return false;
}

// Some permutation sigma with v -> sigma(v) for every v.
inline bool HasOneFactor(const Digraph& g) {
  const int n = g.num_vertices();
  const auto a = Matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = a[v][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Tournament on n vertices from the bits of `code` over pairs i < j
// (bit set means i -> j).
inline Digraph TournamentFromCode(int n, std::uint64_t code) {
  Digraph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1) {
        g.AddArc(i, j);
      } else {
        g.AddArc(j, i);
      }
    }
  }
  return g;
}

inline int PairCount(int n) { return n * (n - 1) / 2; }

// Digraph on n vertices from bits over ordered pairs (u, v), u != v.
inline Digraph DigraphFromCode(int n, std::uint64_t code) {
  Digraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((code >> bit) & 1) g.AddArc(u, v);
      ++bit;
    }
  }
  return g;
}

}  // namespace hamdg::oracle

#endif  // HAMDG_TESTS_ORACLES_H_
