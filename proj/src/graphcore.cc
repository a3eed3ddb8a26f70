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

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "hamdg/errors.h"
#include "hamdg/rng.h"

namespace hamdg {

SemiDegrees ComputeSemiDegrees(const Digraph& g) {
  SemiDegrees d;
  if (g.num_vertices() == 0) return d;
  d.min_out = std::numeric_limits<int>::max();
  d.min_in = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    d.min_out = std::min(d.min_out, g.OutDegree(v));
    d.min_in = std::min(d.min_in, g.InDegree(v));
  }
  d.min_semi = std::min(d.min_out, d.min_in);
  return d;
}

DegreeSequencePair DegreeSequences(const Digraph& g) {
  DegreeSequencePair p;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    p.out_seq.push_back(g.OutDegree(v));
    p.in_seq.push_back(g.InDegree(v));
  }
  std::sort(p.out_seq.begin(), p.out_seq.end());
  std::sort(p.in_seq.begin(), p.in_seq.end());
  return p;
}

VertexSet ReachableFrom(const Digraph& g, Vertex source, VertexSet within) {
  within &= g.Vertices();
  VertexSet seen = Bit(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    ForEach(frontier, [&](Vertex v) { next |= g.Out(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexSet ReachingTo(const Digraph& g, Vertex target, VertexSet within) {
  within &= g.Vertices();
  VertexSet seen = Bit(target);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    ForEach(frontier, [&](Vertex v) { next |= g.In(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

namespace {

bool StronglyConnectedWithin(const Digraph& g, VertexSet w) {
  if (w == 0) return true;
  const Vertex s = Lowest(w);
  return ReachableFrom(g, s, w) == w && ReachingTo(g, s, w) == w;
}

}  // namespace

bool IsStronglyConnected(const Digraph& g) {
  return StronglyConnectedWithin(g, g.Vertices());
}

std::pair<Vertex, Vertex> UnreachablePair(const Digraph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const VertexSet missing = g.Vertices() & ~ReachableFrom(g, u);
    if (missing != 0) return {u, Lowest(missing)};
  }
  return {-1, -1};
}

int WeakComponents(const Digraph& g, VertexSet within) {
  within &= g.Vertices();
  int components = 0;
  while (within != 0) {
    const Vertex s = Lowest(within);
    VertexSet seen = Bit(s);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      ForEach(frontier, [&](Vertex v) { next |= g.Out(v) | g.In(v); });
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    within &= ~seen;
    ++components;
  }
  return components;
}

namespace {

// Unit vertex capacities on the split network; returns the number of
// internally disjoint u->v paths, stopping early at `stop_at`.
int LocalConnectivity(const Digraph& g, Vertex u, Vertex v, int stop_at) {
  const int n = g.num_vertices();
  const int nodes = 2 * n;
  auto in_node = [](Vertex w) { return 2 * w; };
  auto out_node = [](Vertex w) { return 2 * w + 1; };
  std::vector<int> cap(nodes * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[a * nodes + b]; };
  for (Vertex w = 0; w < n; ++w) {
    at(in_node(w), out_node(w)) = (w == u || w == v) ? n : 1;
    ForEach(g.Out(w), [&](Vertex x) { at(out_node(w), in_node(x)) = n; });
  }
  const int source = out_node(u);
  const int sink = in_node(v);
  int flow = 0;
  std::vector<int> parent(nodes);
  while (flow < stop_at) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] == -1) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] == -1 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] == -1) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int VertexConnectivityByFlow(const Digraph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw BadParams("vertex connectivity needs n >= 2");
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || g.HasArc(u, v)) continue;
      best = std::min(best, LocalConnectivity(g, u, v, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

int VertexConnectivityByDeletion(const Digraph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw BadParams("vertex connectivity needs n >= 2");
  const VertexSet all = g.Vertices();
  for (int size = 0; size <= n - 2; ++size) {
    if (size == 0) {
      if (!IsStronglyConnected(g)) return 0;
      continue;
    }
    // Gosper's hack over n-bit subsets of the given size.
    VertexSet s = FullSet(size);
    while (s <= all && (s & ~all) == 0) {
      if (!StronglyConnectedWithin(g, all & ~s)) return size;
      const VertexSet c = s & (~s + 1);
      const VertexSet r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n - 1;
}

int VertexConnectivity(const Digraph& g) {
  return g.num_vertices() <= 10 ? VertexConnectivityByDeletion(g)
                                : VertexConnectivityByFlow(g);
}

namespace {

void MisSearch(std::span<const VertexSet> adj, VertexSet cand,
               VertexSet chosen, VertexSet& best) {
  while (true) {
    if (Count(chosen) + Count(cand) <= Count(best)) return;
    if (cand == 0) {
      best = chosen;
      return;
    }
    Vertex min_v = -1;
    Vertex max_v = -1;
    int min_d = kMaxVertices + 1;
    int max_d = -1;
    ForEach(cand, [&](Vertex v) {
      const int d = Count(adj[v] & cand);
      if (d < min_d) min_d = d, min_v = v;
      if (d > max_d) max_d = d, max_v = v;
    });
    // A vertex of degree <= 1 lies in some maximum independent set.
    if (min_d <= 1) {
      chosen |= Bit(min_v);
      cand &= ~adj[min_v] & ~Bit(min_v);
      continue;
    }
    MisSearch(adj, cand & ~adj[max_v] & ~Bit(max_v), chosen | Bit(max_v),
              best);
    cand &= ~Bit(max_v);
  }
}

}  // namespace

VertexSet MaximumIndependentSet(std::span<const VertexSet> adj) {
  const VertexSet all = FullSet(static_cast<int>(adj.size()));
  // Greedy start: repeatedly take a minimum-degree vertex.
  VertexSet best = 0;
  VertexSet cand = all;
  while (cand != 0) {
    Vertex pick = -1;
    int pick_d = kMaxVertices + 1;
    ForEach(cand, [&](Vertex v) {
      const int d = Count(adj[v] & cand);
      if (d < pick_d) pick_d = d, pick = v;
    });
    best |= Bit(pick);
    cand &= ~adj[pick] & ~Bit(pick);
  }
  MisSearch(adj, all, 0, best);
  return best;
}

IndependenceNumbers ComputeIndependenceNumbers(const Digraph& g,
                                               int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices) {
    throw BudgetExceeded("independence numbers: n = " + std::to_string(n) +
                         " exceeds the exact-search cap " +
                         std::to_string(max_vertices));
  }
  std::vector<VertexSet> any_arc(n), two_cycle(n);
  for (Vertex v = 0; v < n; ++v) {
    any_arc[v] = g.Out(v) | g.In(v);
    two_cycle[v] = g.Out(v) & g.In(v);
  }
  IndependenceNumbers r;
  r.alpha0 = Count(MaximumIndependentSet(any_arc));
  r.alpha2 = Count(MaximumIndependentSet(two_cycle));
  return r;
}

std::vector<std::pair<Vertex, Vertex>> DominatedPairs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = x + 1; y < g.num_vertices(); ++y) {
      if ((g.In(x) & g.In(y)) != 0) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

HamiltonCycle Contraction::Lift(const HamiltonCycle& c) const {
  HamiltonCycle lifted;
  for (Vertex v : c.order) {
    for (Vertex w : origin.at(v)) lifted.order.push_back(w);
  }
  return lifted;
}

Contraction ContractMatching(const Digraph& g, const Matching& m) {
  if (!IsMatching(m)) throw NotAMatching("arcs of the matching share endpoints");
  const int n = g.num_vertices();
  std::vector<Vertex> head_of(n, -1);
  std::vector<bool> is_head(n, false);
  for (const Arc& a : m.arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n ||
        !g.HasArc(a.from, a.to)) {
      throw ArcMissing("matching arc " + std::to_string(a.from) + "->" +
                       std::to_string(a.to) + " is not in the digraph");
    }
    head_of[a.from] = a.to;
    is_head[a.to] = true;
  }
  Contraction c;
  for (Vertex v = 0; v < n; ++v) {
    if (is_head[v]) continue;
    if (head_of[v] >= 0) {
      c.origin.push_back({v, head_of[v]});
    } else {
      c.origin.push_back({v});
    }
  }
  const int k = static_cast<int>(c.origin.size());
  c.graph = Digraph(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b && g.HasArc(c.origin[a].back(), c.origin[b].front())) {
        c.graph.AddArc(a, b);
      }
    }
  }
  return c;
}

std::vector<std::vector<Vertex>> BlowUpBlocks(std::span<const int> sizes) {
  std::vector<std::vector<Vertex>> blocks;
  Vertex next = 0;
  for (int s : sizes) {
    if (s <= 0) throw BadParams("blow-up sizes must be positive");
    std::vector<Vertex> block;
    for (int i = 0; i < s; ++i) block.push_back(next++);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Digraph BlowUp(const Digraph& g, std::span<const int> sizes,
               const BlowupDensity& density) {
  if (static_cast<int>(sizes.size()) != g.num_vertices()) {
    throw BadParams("blow-up needs one size per vertex");
  }
  const auto blocks = BlowUpBlocks(sizes);
  int total = 0;
  for (int s : sizes) total += s;
  Digraph h(total);
  Rng rng(density.seed);
  for (const Arc& a : g.Arcs()) {
    for (Vertex x : blocks[a.from]) {
      for (Vertex y : blocks[a.to]) {
        if (density.keep_probability >= 1.0 ||
            rng.Bernoulli(density.keep_probability)) {
          h.AddArc(x, y);
        }
      }
    }
  }
  return h;
}

}  // namespace hamdg
