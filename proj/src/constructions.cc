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

#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "hamdg/errors.h"
#include "hamdg/graphcore.h"
#include "hamdg/rng.h"

namespace hamdg {
namespace {

std::vector<Vertex> Range(Vertex first, int count) {
  std::vector<Vertex> vs(count);
  std::iota(vs.begin(), vs.end(), first);
  return vs;
}

// Circulant tournament with default shifts on the given (odd-size) list.
void AddCirculant(Digraph& g, const std::vector<Vertex>& vs) {
  const int k = static_cast<int>(vs.size());
  if (k % 2 == 0) throw BadParams("regular tournament part needs odd size");
  for (int i = 0; i < k; ++i) {
    for (int s = 1; s <= (k - 1) / 2; ++s) g.AddArc(vs[i], vs[(i + s) % k]);
  }
}

void AddAll(Digraph& g, const std::vector<Vertex>& from,
            const std::vector<Vertex>& to) {
  for (Vertex u : from) {
    for (Vertex v : to) g.AddArc(u, v);
  }
}

void AddClique(Digraph& g, const std::vector<Vertex>& vs) {
  for (Vertex u : vs) {
    for (Vertex v : vs) {
      if (u != v) g.AddArc(u, v);
    }
  }
}

// p_i -> q_j iff i + j is even, otherwise q_j -> p_i. Every vertex has
// in- and out-degree differing by at most one inside the pair.
void AddBalancedBipartite(Digraph& g, const std::vector<Vertex>& p,
                          const std::vector<Vertex>& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if ((i + j) % 2 == 0) {
        g.AddArc(p[i], q[j]);
      } else {
        g.AddArc(q[j], p[i]);
      }
    }
  }
}

void RequireVertices(int n) {
  if (n > kMaxVertices) {
    throw CapacityExceeded("instance needs " + std::to_string(n) +
                           " vertices; at most " +
                           std::to_string(kMaxVertices) + " are supported");
  }
}

}  // namespace

Instance Fig1(int s) {
  if (s < 2) throw BadParams("fig1 needs s >= 2");
  const int n = 9 * s + 2;
  RequireVertices(n);
  Instance inst{Digraph(n), {}, GraphClass::kUndirected};
  Digraph& g = inst.graph;
  const Vertex a = 9 * s;
  const Vertex b = 9 * s + 1;
  PartMap cliques, as, bs;
  for (int i = 0; i < 3; ++i) {
    const auto clique = Range(3 * s * i, 3 * s);
    AddClique(g, clique);
    const int size = i < 2 ? s : s - 1;
    std::vector<Vertex> ai(clique.begin(), clique.begin() + size);
    std::vector<Vertex> bi(clique.begin() + size, clique.begin() + 2 * size);
    for (int j = 0; j < size; ++j) {
      g.RemoveEdge(ai[j], bi[j]);
      g.AddEdge(a, ai[j]);
      g.AddEdge(b, bi[j]);
    }
    const std::string idx = std::to_string(i + 1);
    cliques.push_back({"Q" + idx, clique});
    as.push_back({"A" + idx, ai});
    bs.push_back({"B" + idx, bi});
  }
  for (auto* group : {&cliques, &as, &bs}) {
    inst.parts.insert(inst.parts.end(), group->begin(), group->end());
  }
  inst.parts.push_back({"a", {a}});
  inst.parts.push_back({"b", {b}});
  return inst;
}

Instance Fig2(int n) {
  if (n < 4) throw BadParams("fig2 needs n >= 4");
  RequireVertices(n);
  Instance inst{Digraph(n), {}, GraphClass::kDigraph};
  Digraph& g = inst.graph;
  const auto k = Range(0, n - 3);
  const Vertex x = n - 3, y = n - 2, z = n - 1;
  AddClique(g, k);
  AddClique(g, {x, y, z});
  g.RemoveArc(x, z);
  for (Vertex u : k) {
    g.AddEdge(x, u);
    g.AddArc(y, u);
  }
  inst.parts = {{"K", k}, {"x", {x}}, {"y", {y}}, {"z", {z}}};
  return inst;
}

Instance Fig3Haggkvist(int m) {
  if (m < 1 || m % 2 == 0) throw BadParams("fig3 needs odd m >= 1");
  const int n = 4 * m + 3;
  RequireVertices(n);
  Instance inst{Digraph(n), {}, GraphClass::kOriented};
  Digraph& g = inst.graph;
  const auto a = Range(0, m);
  const auto b = Range(m, m + 1);
  const auto c = Range(2 * m + 1, m);
  const auto d = Range(3 * m + 1, m + 2);
  AddCirculant(g, a);
  AddCirculant(g, c);
  AddBalancedBipartite(g, b, d);
  AddAll(g, a, b);
  AddAll(g, b, c);
  AddAll(g, c, d);
  AddAll(g, d, a);
  inst.parts = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};
  return inst;
}

Instance Fig4Square(int m) {
  if (m < 2 || m % 2 != 0) throw BadParams("fig4 needs even m >= 2");
  const int n = 6 * m;
  RequireVertices(n);
  Instance inst{Digraph(n), {}, GraphClass::kOriented};
  Digraph& g = inst.graph;
  const auto a = Range(0, m);
  const auto b = Range(m, m - 1);
  const auto c = Range(2 * m - 1, 2 * m + 1);
  const auto d = Range(4 * m, m - 1);
  const auto e = Range(5 * m - 1, m + 1);
  AddCirculant(g, b);
  AddCirculant(g, c);
  AddCirculant(g, d);
  AddBalancedBipartite(g, a, b);
  AddBalancedBipartite(g, b, e);
  AddAll(g, a, c);
  AddAll(g, b, c);
  AddAll(g, c, d);
  AddAll(g, c, e);
  AddAll(g, d, a);
  AddAll(g, d, b);
  AddAll(g, e, a);
  AddAll(g, e, d);
  inst.parts = {{"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e}};
  return inst;
}

Instance NwExtremal(int n, int k) {
  if (k < 1 || 2 * k >= n) throw BadParams("nw_extremal needs 1 <= k < n/2");
  RequireVertices(n);
  Instance inst{Digraph(n), {}, GraphClass::kDigraph};
  Digraph& g = inst.graph;
  const auto i_set = Range(0, k);
  const auto x_set = Range(k, k);
  const auto k_set = Range(k, n - k);
  AddClique(g, k_set);
  AddAll(g, i_set, x_set);
  AddAll(g, x_set, i_set);
  inst.parts = {{"I", i_set}, {"X", x_set}, {"K", k_set}};
  return inst;
}
Instance PancyclicBipartite(int n) {
  if (n < 2) throw BadParams("pancyclic_bipartite needs n >= 2");
  RequireVertices(n);
  const int a = n / 2;
  Instance inst{CompleteBipartiteDigraph(a, n - a), {}, GraphClass::kUndirected};
  inst.parts = {{"L", Range(0, a)}, {"R", Range(a, n - a)}};
  return inst;
}

Instance TwoRegularTournaments(int d) {
  if (d < 1) throw BadParams("two_regular_tournaments needs d >= 1");
  const int half = 2 * d + 1;
  RequireVertices(2 * half);
  const Digraph t = CirculantTournament(half);
  Instance inst{t.DisjointUnion(t), {}, GraphClass::kOriented};
  inst.parts = {{"T1", Range(0, half)}, {"T2", Range(half, half)}};
  return inst;
}

Instance CycleBlowup(int k, std::span<const int> sizes) {
  if (k < 2) throw BadParams("cycle_blowup needs k >= 2");
  if (static_cast<int>(sizes.size()) != k) {
    throw BadParams("cycle_blowup needs exactly k part sizes");
  }
  int total = 0;
  for (int s : sizes) total += s;
  RequireVertices(total);
  Instance inst{BlowUp(DirectedCycle(k), sizes), {},
                k == 2 ? GraphClass::kDigraph : GraphClass::kOriented};
  const auto blocks = BlowUpBlocks(sizes);
  for (int i = 0; i < k; ++i) {
    inst.parts.push_back({"V" + std::to_string(i), blocks[i]});
  }
  return inst;
}

Digraph CirculantTournament(int n, std::span<const int> shifts) {
  if (n < 1 || n % 2 == 0) throw BadParams("circulant tournament needs odd n");
  RequireVertices(n);
  std::vector<int> s(shifts.begin(), shifts.end());
  if (s.empty()) s = Range(1, (n - 1) / 2);
  std::vector<int> seen(n, 0);
  for (int d : s) {
    if (d < 1 || d >= n) throw BadParams("circulant shift out of range");
    ++seen[d];
    ++seen[n - d];
  }
  for (int d = 1; d < n; ++d) {
    if (seen[d] != 1) {
      throw BadParams("circulant shifts must contain exactly one of d, n-d");
    }
  }
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (int d : s) g.AddArc(i, (i + d) % n);
  }
  return g;
}

Digraph RandomTournament(int n, std::uint64_t seed) {
  RequireVertices(n);
  Digraph g(n);
  Rng rng(seed, 0x7a11);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.Bernoulli(0.5)) {
        g.AddArc(i, j);
      } else {
        g.AddArc(j, i);
      }
    }
  }
  return g;
}

Digraph RandomRegularTournament(int n, std::uint64_t seed) {
  Digraph g = CirculantTournament(n);
  if (n < 3) return g;
  Rng rng(seed, 0x2e90);
  const long steps = 50L * n * n;
  for (long step = 0; step < steps; ++step) {
    const Vertex a = rng.UniformInt(0, n - 1);
    const Vertex b = rng.UniformInt(0, n - 1);
    const Vertex c = rng.UniformInt(0, n - 1);
    if (a == b || b == c || a == c) continue;
    const bool forward = g.HasArc(a, b) && g.HasArc(b, c) && g.HasArc(c, a);
    const bool backward = g.HasArc(b, a) && g.HasArc(c, b) && g.HasArc(a, c);
    if (!forward && !backward) continue;
    const Vertex t[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
      const Vertex u = t[i], v = t[(i + 1) % 3];
      if (g.HasArc(u, v)) {
        g.RemoveArc(u, v);
        g.AddArc(v, u);
      } else {
        g.RemoveArc(v, u);
        g.AddArc(u, v);
      }
    }
  }
  return g;
}

Digraph TransitiveTournament(int n) {
  RequireVertices(n);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.AddArc(i, j);
  }
  return g;
}

Digraph NearRegularTournament(int n) {
  if (n < 1) throw BadParams("tournament needs n >= 1");
  if (n % 2 == 1) return CirculantTournament(n);
  RequireVertices(n + 1);
  return CirculantTournament(n + 1).Induced(FullSet(n));
}

namespace {

void EnumerateTournaments(int n, bool regular,
                          const std::function<void(const Digraph&)>& visit) {
  if (n < 1 || n > 9) throw BadParams("tournament enumeration needs 1 <= n <= 9");
  if (regular && n % 2 == 0) throw BadParams("regular tournaments need odd n");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const int half = (n - 1) / 2;
  std::vector<int> out(n, 0), in(n, 0);
  Digraph g(n);
  std::function<void(std::size_t)> step = [&](std::size_t p) {
    if (p == pairs.size()) {
      visit(g);
      return;
    }
    const auto [i, j] = pairs[p];
    for (int dir = 0; dir < 2; ++dir) {
      const int from = dir == 0 ? i : j, to = dir == 0 ? j : i;
      if (regular && (out[from] == half || in[to] == half)) continue;
      g.AddArc(from, to);
      ++out[from];
      ++in[to];
      step(p + 1);
      g.RemoveArc(from, to);
      --out[from];
      --in[to];
    }
  };
  step(0);
}

}  // namespace

void ForEachTournament(int n, const std::function<void(const Digraph&)>& visit) {
  EnumerateTournaments(n, false, visit);
}

void ForEachRegularTournament(int n, const std::function<void(const Digraph&)>& visit) {
  EnumerateTournaments(n, true, visit);
}

Digraph CompleteDigraph(int n) {
  RequireVertices(n);
  Digraph g(n);
  AddClique(g, Range(0, n));
  return g;
}

Digraph CompleteGraph(int n) { return CompleteDigraph(n); }

Digraph CompleteBipartiteDigraph(int a, int b) {
  if (a < 1 || b < 1) throw BadParams("complete bipartite needs sizes >= 1");
  RequireVertices(a + b);
  Digraph g(a + b);
  const auto left = Range(0, a);
  const auto right = Range(a, b);
  AddAll(g, left, right);
  AddAll(g, right, left);
  return g;
}

Digraph DirectedCycle(int n) {
  if (n < 2) throw BadParams("directed cycle needs n >= 2");
  RequireVertices(n);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) g.AddArc(i, (i + 1) % n);
  return g;
}

Digraph UndirectedCycle(int n) {
  if (n < 3) throw BadParams("undirected cycle needs n >= 3");
  RequireVertices(n);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Digraph RandomDigraph(int n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw BadParams("arc probability must lie in [0,1]");
  RequireVertices(n);
  Digraph g(n);
  Rng rng(seed, 0xd16a);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.Bernoulli(p)) g.AddArc(u, v);
    }
  }
  return g;
}

Digraph RandomRegularGraph(int n, int d, std::uint64_t seed) {
  if (d < 0 || d >= n || (n * d) % 2 != 0) {
    throw BadParams("regular graph needs 0 <= d < n and n*d even");
  }
  RequireVertices(n);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (int j = 1; j <= d / 2; ++j) g.AddEdge(i, (i + j) % n);
    if (d % 2 == 1) g.AddEdge(i, (i + n / 2) % n);
  }
  std::vector<Arc> edges;
  for (const Arc& a : g.Arcs()) {
    if (a.from < a.to) edges.push_back(a);
  }
  if (edges.size() < 2) return g;
  Rng rng(seed, 0x5e9a);
  const long steps = 20L * n * d;
  for (long step = 0; step < steps; ++step) {
    const auto i = rng.Uniform(edges.size());
    const auto j = rng.Uniform(edges.size());
    if (i == j) continue;
    Vertex a = edges[i].from, b = edges[i].to;
    Vertex c = edges[j].from, e = edges[j].to;
    if (rng.Bernoulli(0.5)) std::swap(c, e);
    // Replace {a,b},{c,e} by {a,c},{b,e}.
    if (a == c || a == e || b == c || b == e) continue;
    if (g.HasArc(a, c) || g.HasArc(b, e)) continue;
    g.RemoveEdge(a, b);
    g.RemoveEdge(c, e);
    g.AddEdge(a, c);
    g.AddEdge(b, e);
    edges[i] = {std::min(a, c), std::max(a, c)};
    edges[j] = {std::min(b, e), std::max(b, e)};
  }
  return g;
}

}  // namespace hamdg
