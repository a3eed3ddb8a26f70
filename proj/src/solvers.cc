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


#include "hamdg/solvers.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>

#include "hamdg/errors.h"
#include "hamdg/graphcore.h"

namespace hamdg {
namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void Tick() {
    if (++used_ > limit_) {
      throw BudgetExceeded("search node budget of " + std::to_string(limit_) +
                           " exhausted");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Path-extension search for Hamilton cycles starting at a fixed vertex.
// An optional sequence constrains the order in which its vertices are
// first reached: only the next pending sequence vertex may be entered.
class HamiltonEngine {
 public:
  // Returns true to stop the search.
  using Visitor = std::function<bool(const std::vector<Vertex>&)>;

  HamiltonEngine(const Digraph& g, Budget& budget) : g_(g), budget_(budget) {}

  // True iff the visitor stopped the search.
  bool Run(Vertex start, std::span<const Vertex> seq, const Visitor& visit) {
    start_ = start;
    seq_ = seq;
    seq_mask_ = FromVector(seq);
    visit_ = &visit;
    path_.assign(1, start);
    return Dfs(start, g_.Vertices() & ~Bit(start), seq.empty() ? 0 : 1);
  }

 private:
  bool Dfs(Vertex cur, VertexSet unvisited, std::size_t next_seq) {
    budget_.Tick();
    if (unvisited == 0) {
      return g_.HasArc(cur, start_) && (*visit_)(path_);
    }
    const VertexSet blocked =
        next_seq < seq_.size() ? (seq_mask_ & unvisited & ~Bit(seq_[next_seq])) : 0;
    const VertexSet enter_from = unvisited | Bit(cur);
    const VertexSet exit_to = unvisited | Bit(start_);
    VertexSet only_from_cur = 0;
    VertexSet only_to_start = 0;
    for (VertexSet s = unvisited; s != 0; s &= s - 1) {
      const Vertex u = Lowest(s);
      const VertexSet in = g_.In(u) & enter_from;
      const VertexSet out = g_.Out(u) & exit_to;
      if (in == 0 || out == 0) return false;
      if (in == Bit(cur)) only_from_cur |= Bit(u);
      if (out == Bit(start_)) only_to_start |= Bit(u);
    }
    if (Count(only_from_cur) > 1 || Count(only_to_start) > 1) return false;
    VertexSet candidates = g_.Out(cur) & unvisited & ~blocked;
    if (only_from_cur != 0) candidates &= only_from_cur;
    if (Count(unvisited) > 1) candidates &= ~only_to_start;
    if (candidates == 0) return false;
    if ((ReachableFrom(g_, cur, enter_from) & unvisited) != unvisited) return false;
    if ((ReachingTo(g_, start_, exit_to) & unvisited) != unvisited) return false;
    for (VertexSet s = candidates; s != 0; s &= s - 1) {
      const Vertex w = Lowest(s);
      std::size_t ns = next_seq;
      if (ns < seq_.size() && seq_[ns] == w) ++ns;
      path_.push_back(w);
      if (Dfs(w, unvisited & ~Bit(w), ns)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Digraph& g_;
  Budget& budget_;
  Vertex start_ = 0;
  std::span<const Vertex> seq_;
  VertexSet seq_mask_ = 0;
  const Visitor* visit_ = nullptr;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<CycleFactor> OneFactor(const Digraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return CycleFactor{};
  std::vector<Vertex> pred(n, -1);  // pred[v] = u with u -> v matched
  std::vector<Vertex> succ(n, -1);
  for (Vertex u = 0; u < n; ++u) {
    VertexSet seen = 0;
    std::function<bool(Vertex)> augment = [&](Vertex x) -> bool {
      for (VertexSet s = g.Out(x) & ~seen; s != 0; s &= s - 1) {
        const Vertex v = Lowest(s);
        if (Contains(seen, v)) continue;
        seen |= Bit(v);
        if (pred[v] < 0 || augment(pred[v])) {
          pred[v] = x;
          succ[x] = v;
          return true;
        }
      }
      return false;
    };
    if (!augment(u)) return std::nullopt;
  }
  CycleFactor f;
  VertexSet done = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (Contains(done, v)) continue;
    std::vector<Vertex> cycle;
    for (Vertex x = v; !Contains(done, x); x = succ[x]) {
      done |= Bit(x);
      cycle.push_back(x);
    }
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

bool PassesHamiltonPrechecks(const Digraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.OutDegree(v) == 0 || g.InDegree(v) == 0) return false;
  }
  if (!IsStronglyConnected(g)) return false;
  if (!OneFactor(g)) return false;
  if (n >= 3) {
    // Removing |S| vertices from a Hamilton cycle leaves at most |S| paths.
    const VertexSet all = g.Vertices();
    for (Vertex a = 0; a < n; ++a) {
      if (WeakComponents(g, all & ~Bit(a)) > 1) return false;
    }
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (WeakComponents(g, all & ~Bit(a) & ~Bit(b)) > 2) return false;
      }
    }
  }
  return true;
}

std::optional<HamiltonCycle> FindHamiltonCycle(const Digraph& g,
                                               const SearchOptions& opts) {
  if (!PassesHamiltonPrechecks(g)) return std::nullopt;
  Budget budget(opts.node_budget);
  HamiltonEngine engine(g, budget);
  std::optional<HamiltonCycle> found;
  engine.Run(0, {}, [&](const std::vector<Vertex>& order) {
    found = HamiltonCycle{order};
    return true;
  });
  return found;
}

std::uint64_t ForEachHamiltonCycle(
    const Digraph& g, const std::function<bool(const std::vector<Vertex>&)>& visit,
    const SearchOptions& opts) {
  if (!PassesHamiltonPrechecks(g)) return 0;
  Budget budget(opts.node_budget);
  HamiltonEngine engine(g, budget);
  std::uint64_t count = 0;
  engine.Run(0, {}, [&](const std::vector<Vertex>& order) {
    ++count;
    return !visit(order);
  });
  return count;
}

BigRational PathReference(int n) {
  if (n < 1) throw BadParams("reference values need n >= 1");
  boost::multiprecision::cpp_int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return BigRational(fact, boost::multiprecision::cpp_int(1) << (n - 1));
}

BigRational CycleReference(int n) {
  if (n < 1) throw BadParams("reference values need n >= 1");
  boost::multiprecision::cpp_int fact = 1;
  for (int i = 2; i <= n - 1; ++i) fact *= i;
  return BigRational(fact, boost::multiprecision::cpp_int(1) << n);
}

namespace {

void CheckedAdd(std::uint64_t& acc, std::uint64_t x) {
  if (acc > std::numeric_limits<std::uint64_t>::max() - x) {
    throw BudgetExceeded("Hamilton count exceeds 64 bits");
  }
  acc += x;
}

std::vector<std::uint64_t> AllocateTable(std::size_t masks, int n,
                                         const CountOptions& opts) {
  const std::size_t cells = masks * static_cast<std::size_t>(n);
  if (cells > opts.memory_cap_bytes / sizeof(std::uint64_t)) {
    throw BudgetExceeded("counting table needs " +
                         std::to_string(cells * sizeof(std::uint64_t)) +
                         " bytes, above the cap of " +
                         std::to_string(opts.memory_cap_bytes));
  }
  return std::vector<std::uint64_t>(cells, 0);
}

}  // namespace

CountReport CountHamilton(const Digraph& g, const CountOptions& opts) {
  const int n = g.num_vertices();
  CountReport r;
  if (n == 0) return r;
  r.f_reference = PathReference(n);
  r.g_reference = CycleReference(n);
  if (n > 40) throw BudgetExceeded("counting supports at most 40 vertices");
  if (n == 1) {
    r.hamilton_paths = 1;
    return r;
  }
  const std::size_t masks = std::size_t{1} << n;
  {
    // Paths with any start: dp[mask][end].
    auto dp = AllocateTable(masks, n, opts);
    for (Vertex v = 0; v < n; ++v) dp[(std::size_t{1} << v) * n + v] = 1;
    for (std::size_t mask = 1; mask < masks; ++mask) {
      for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t c = dp[mask * n + v];
        if (c == 0) continue;
        for (VertexSet s = g.Out(v) & ~static_cast<VertexSet>(mask); s; s &= s - 1) {
          const Vertex w = Lowest(s);
          CheckedAdd(dp[(mask | (std::size_t{1} << w)) * n + w], c);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) CheckedAdd(r.hamilton_paths, dp[(masks - 1) * n + v]);
  }
  {
    // Cycles anchored at vertex 0; index by mask >> 1 (bit 0 implicit).
    const std::size_t half = masks >> 1;
    auto dp = AllocateTable(half, n, opts);
    dp[0 * n + 0] = 1;
    for (std::size_t m = 0; m < half; ++m) {
      const VertexSet mask = (static_cast<VertexSet>(m) << 1) | 1;
      for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t c = dp[m * n + v];
        if (c == 0) continue;
        for (VertexSet s = g.Out(v) & ~mask; s; s &= s - 1) {
          const Vertex w = Lowest(s);
          const std::size_t next = static_cast<std::size_t>((mask | Bit(w)) >> 1);
          CheckedAdd(dp[next * n + w], c);
        }
      }
    }
    for (Vertex v = 1; v < n; ++v) {
      if (g.HasArc(v, 0)) CheckedAdd(r.hamilton_cycles, dp[(half - 1) * n + v]);
    }
  }
  return r;
}

std::optional<HamiltonCycle> HamiltonCycleThrough(const Digraph& g, const Matching& m,
                                                  const SearchOptions& opts) {
  const Contraction c = ContractMatching(g, m);
  const int k = c.graph.num_vertices();
  if (k == 1) {
    // The whole graph is one matching arc.
    const auto& path = c.origin[0];
    if (path.size() >= 2 && g.HasArc(path.back(), path.front())) {
      return HamiltonCycle{path};
    }
    return std::nullopt;
  }
  const auto h = FindHamiltonCycle(c.graph, opts);
  if (!h) return std::nullopt;
  return c.Lift(*h);
}

int MinCycleLength(const Digraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if ((g.Out(v) & g.In(v)) != 0) return 2;
  }
  return 3;
}

namespace {

// Calls visit(cycle) for each cycle of exactly `length` vertices that starts
// at `anchor` and otherwise uses vertices of `within`; stops when visit
// returns true. Returns true iff stopped.
bool EnumerateCyclesThrough(const Digraph& g, Vertex anchor, int length,
                            VertexSet within, Budget& budget,
                            const std::function<bool(const std::vector<Vertex>&)>& visit) {
  within &= ~Bit(anchor);
  const int n = g.num_vertices();
  // Distance from each vertex back to the anchor inside within.
  std::vector<int> dist(n, std::numeric_limits<int>::max());
  dist[anchor] = 0;
  std::deque<Vertex> queue{anchor};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    ForEach(g.In(v) & within, [&](Vertex u) {
      if (dist[u] == std::numeric_limits<int>::max()) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    });
  }
  std::vector<Vertex> path{anchor};
  std::function<bool(Vertex, VertexSet)> dfs = [&](Vertex cur, VertexSet free) -> bool {
    budget.Tick();
    const int len = static_cast<int>(path.size());
    if (len == length) return g.HasArc(cur, anchor) && visit(path);
    const int steps_left = length - len;  // vertices still to add
    for (VertexSet s = g.Out(cur) & free; s; s &= s - 1) {
      const Vertex w = Lowest(s);
      if (dist[w] > steps_left) continue;
      path.push_back(w);
      if (dfs(w, free & ~Bit(w))) return true;
      path.pop_back();
    }
    return false;
  };
  return dfs(anchor, within);
}

}  // namespace

std::optional<std::vector<Vertex>> FindCycleOfLength(const Digraph& g, int length,
                                                     const SearchOptions& opts) {
  const int n = g.num_vertices();
  if (length < 2) throw BadParams("cycle length must be at least 2");
  if (length > n) return std::nullopt;
  if (length == n) {
    const auto h = FindHamiltonCycle(g, opts);
    if (!h) return std::nullopt;
    return h->order;
  }
  Budget budget(opts.node_budget);
  std::optional<std::vector<Vertex>> found;
  for (Vertex a = 0; a < n && !found; ++a) {
    // Anchor at the smallest vertex of the cycle.
    const VertexSet above = g.Vertices() & ~FullSet(a + 1);
    EnumerateCyclesThrough(g, a, length, above, budget,
                           [&](const std::vector<Vertex>& c) {
                             found = c;
                             return true;
                           });
  }
  return found;
}

PancyclicityReport IsPancyclic(const Digraph& g, const SearchOptions& opts) {
  PancyclicityReport r;
  r.min_length = MinCycleLength(g);
  const int n = g.num_vertices();
  r.verdict = Verdict::Holds("pancyclic");
  if (n < r.min_length) {
    Witness w;
    w.kind = WitnessKind::kIndex;
    w.index = n;
    w.lhs = 0;
    w.rhs = 1;
    w.detail = "no cycle of length " + std::to_string(n);
    r.verdict = Verdict::Fails("pancyclic", w);
    return r;
  }
  for (int len = r.min_length; len <= n; ++len) {
    auto c = FindCycleOfLength(g, len, opts);
    if (!c) {
      Witness w;
      w.kind = WitnessKind::kIndex;
      w.index = len;
      w.lhs = 0;
      w.rhs = 1;
      w.detail = "no cycle of length " + std::to_string(len);
      r.verdict = Verdict::Fails("pancyclic", w);
      return r;
    }
    r.cycles.push_back(std::move(*c));
  }
  return r;
}

std::optional<HamiltonCycle> KthPowerHamilton(const Digraph& g, int k,
                                              const SearchOptions& opts) {
  if (k < 1) throw BadParams("power needs k >= 1");
  if (k == 1) return FindHamiltonCycle(g, opts);
  const int n = g.num_vertices();
  if (n < 2) return std::nullopt;
  const int reach = std::min(k, n - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (g.OutDegree(v) < reach || g.InDegree(v) < reach) return std::nullopt;
  }
  Budget budget(opts.node_budget);
  std::vector<Vertex> order(n, -1);
  order[0] = 0;
  std::function<bool(int, VertexSet)> dfs = [&](int pos, VertexSet unvisited) -> bool {
    budget.Tick();
    if (pos == n) return true;
    VertexSet cand = unvisited;
    for (int j = 1; j <= std::min(reach, pos); ++j) cand &= g.Out(order[pos - j]);
    for (VertexSet s = cand; s; s &= s - 1) {
      const Vertex w = Lowest(s);
      bool ok = true;
      for (int j = 1; j <= reach && ok; ++j) {
        if (pos + j >= n) ok = g.HasArc(w, order[pos + j - n]);
      }
      if (!ok) continue;
      order[pos] = w;
      if (dfs(pos + 1, unvisited & ~Bit(w))) return true;
    }
    return false;
  };
  if (!dfs(1, g.Vertices() & ~Bit(0))) return std::nullopt;
  return HamiltonCycle{order};
}

bool IsKthPowerCycle(const Digraph& g, const HamiltonCycle& c, int k) {
  if (!IsHamiltonCycle(g, c)) return false;
  const int n = static_cast<int>(c.order.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= std::min(k, n - 1); ++j) {
      if (!g.HasArc(c.order[i], c.order[(i + j) % n])) return false;
    }
  }
  return true;
}

std::optional<HamiltonCycle> KOrderedHamilton(const Digraph& g,
                                              std::span<const Vertex> sequence,
                                              const SearchOptions& opts) {
  const int n = g.num_vertices();
  if (static_cast<int>(sequence.size()) > n) throw BadParams("sequence longer than n");
  VertexSet seen = 0;
  for (Vertex v : sequence) {
    if (v < 0 || v >= n || Contains(seen, v)) {
      throw BadParams("sequence must hold distinct vertices of the graph");
    }
    seen |= Bit(v);
  }
  if (sequence.size() <= 1) {
    auto h = FindHamiltonCycle(g, opts);
    if (h && !sequence.empty()) {
      auto it = std::find(h->order.begin(), h->order.end(), sequence[0]);
      std::rotate(h->order.begin(), it, h->order.end());
    }
    return h;
  }
  if (!PassesHamiltonPrechecks(g)) return std::nullopt;
  Budget budget(opts.node_budget);
  HamiltonEngine engine(g, budget);
  std::optional<HamiltonCycle> found;
  engine.Run(sequence[0], sequence, [&](const std::vector<Vertex>& order) {
    found = HamiltonCycle{order};
    return true;
  });
  return found;
}

bool VisitsInCyclicOrder(const HamiltonCycle& c, std::span<const Vertex> sequence) {
  if (sequence.empty()) return true;
  const int n = static_cast<int>(c.order.size());
  std::vector<int> pos(kMaxVertices, -1);
  for (int i = 0; i < n; ++i) pos[c.order[i]] = i;
  if (pos[sequence[0]] < 0) return false;
  int last = -1;
  for (Vertex v : sequence) {
    if (v < 0 || v >= kMaxVertices || pos[v] < 0) return false;
    const int rel = (pos[v] - pos[sequence[0]] + n) % n;
    if (rel <= last) return false;
    last = rel;
  }
  return true;
}

OrientationPattern OrientationPattern::AllForward(int length) {
  return {std::vector<bool>(length, true)};
}

OrientationPattern OrientationPattern::Antidirected(int length) {
  if (length % 2 != 0) {
    throw BadParams("antidirected cycles need an even number of edges");
  }
  OrientationPattern p;
  for (int i = 0; i < length; ++i) p.forward.push_back(i % 2 == 0);
  return p;
}

OrientationPattern OrientationPattern::Parse(std::string_view text) {
  OrientationPattern p;
  for (char ch : text) {
    if (ch == 'F' || ch == 'f') {
      p.forward.push_back(true);
    } else if (ch == 'B' || ch == 'b') {
      p.forward.push_back(false);
    } else {
      throw BadParams("orientation pattern uses only F and B");
    }
  }
  return p;
}

OrientationPattern OrientationPattern::FromMask(int length, std::uint64_t mask) {
  OrientationPattern p;
  for (int i = 0; i < length; ++i) p.forward.push_back(((mask >> i) & 1) != 0);
  return p;
}

namespace {

bool EdgeMatches(const Digraph& g, Vertex a, Vertex b, bool forward) {
  return forward ? g.HasArc(a, b) : g.HasArc(b, a);
}

std::optional<std::vector<Vertex>> PatternSearch(const Digraph& g,
                                                 const OrientationPattern& p,
                                                 bool cyclic,
                                                 const SearchOptions& opts) {
  const int n = g.num_vertices();
  Budget budget(opts.node_budget);
  std::vector<Vertex> order;
  std::function<bool(Vertex, VertexSet)> dfs = [&](Vertex cur, VertexSet unvisited) -> bool {
    budget.Tick();
    if (unvisited == 0) {
      return !cyclic || EdgeMatches(g, cur, order[0], p.forward[n - 1]);
    }
    // Every remaining vertex must be reachable in the underlying graph.
    VertexSet seen = Bit(cur), frontier = seen;
    const VertexSet within = unvisited | Bit(cur);
    while (frontier) {
      VertexSet next = 0;
      ForEach(frontier, [&](Vertex v) { next |= g.Out(v) | g.In(v); });
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    if ((seen & unvisited) != unvisited) return false;
    const bool fwd = p.forward[order.size() - 1];
    const VertexSet cand = (fwd ? g.Out(cur) : g.In(cur)) & unvisited;
    for (VertexSet s = cand; s; s &= s - 1) {
      const Vertex w = Lowest(s);
      order.push_back(w);
      if (dfs(w, unvisited & ~Bit(w))) return true;
      order.pop_back();
    }
    return false;
  };
  for (Vertex v0 = 0; v0 < n; ++v0) {
    order.assign(1, v0);
    if (dfs(v0, g.Vertices() & ~Bit(v0))) return order;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> OrientedHamiltonCycle(
    const Digraph& g, const OrientationPattern& pattern, const SearchOptions& opts) {
  const int n = g.num_vertices();
  if (static_cast<int>(pattern.forward.size()) != n) {
    throw BadParams("cycle pattern length must equal n");
  }
  if (n < 2) return std::nullopt;
  return PatternSearch(g, pattern, true, opts);
}

std::optional<std::vector<Vertex>> OrientedHamiltonPath(
    const Digraph& g, const OrientationPattern& pattern, const SearchOptions& opts) {
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  if (static_cast<int>(pattern.forward.size()) != n - 1) {
    throw BadParams("path pattern length must equal n - 1");
  }
  return PatternSearch(g, pattern, false, opts);
}

bool RealizesPattern(const Digraph& g, const std::vector<Vertex>& order,
                     const OrientationPattern& pattern, bool cyclic) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  VertexSet seen = 0;
  for (Vertex v : order) {
    if (v < 0 || v >= n || Contains(seen, v)) return false;
    seen |= Bit(v);
  }
  const int edges = cyclic ? n : n - 1;
  if (static_cast<int>(pattern.forward.size()) != edges) return false;
  for (int i = 0; i < edges; ++i) {
    if (!EdgeMatches(g, order[i], order[(i + 1) % n], pattern.forward[i])) return false;
  }
  return true;
}

std::optional<CycleFactor> DisjointCycleFactor(const Digraph& g,
                                               std::span<const int> lengths,
                                               const SearchOptions& opts) {
  const int n = g.num_vertices();
  int total = 0;
  std::map<int, int> need;
  for (int len : lengths) {
    if (len < 2) throw BadParams("cycle lengths must be at least 2");
    total += len;
    ++need[len];
  }
  if (total != n) throw BadParams("cycle lengths must sum to n");
  Budget budget(opts.node_budget);
  CycleFactor factor;
  std::function<bool(VertexSet)> solve = [&](VertexSet remaining) -> bool {
    if (remaining == 0) return true;
    const Vertex v = Lowest(remaining);
    for (auto& [len, count] : need) {
      if (count == 0) continue;
      --count;
      const bool ok = EnumerateCyclesThrough(
          g, v, len, remaining, budget, [&](const std::vector<Vertex>& c) {
            factor.cycles.push_back(c);
            if (solve(remaining & ~FromVector(c))) return true;
            factor.cycles.pop_back();
            return false;
          });
      ++count;
      if (ok) return true;
    }
    return false;
  };
  if (!solve(g.Vertices())) return std::nullopt;
  return factor;
}

bool IsOrientedTree(const Digraph& tree) {
  const int n = tree.num_vertices();
  if (n == 0) return false;
  if (tree.num_arcs() != n - 1) return false;
  if (!IsInClass(tree, GraphClass::kOriented)) return false;
  return WeakComponents(tree, tree.Vertices()) == 1;
}

std::optional<std::vector<Vertex>> EmbedTree(const Digraph& host, const Digraph& tree,
                                             const SearchOptions& opts) {
  if (!IsOrientedTree(tree)) throw BadParams("not an oriented tree");
  const int k = tree.num_vertices();
  if (k > host.num_vertices()) return std::nullopt;
  // Breadth-first order from tree vertex 0; each later vertex hangs off an
  // earlier parent.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(k, -1);
  VertexSet placed = Bit(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex t = order[i];
    ForEach((tree.Out(t) | tree.In(t)) & ~placed, [&](Vertex c) {
      parent[c] = t;
      placed |= Bit(c);
      order.push_back(c);
    });
  }
  Budget budget(opts.node_budget);
  std::vector<Vertex> image(k, -1);
  std::function<bool(int, VertexSet)> dfs = [&](int i, VertexSet used) -> bool {
    budget.Tick();
    if (i == k) return true;
    const Vertex t = order[i];
    VertexSet cand = host.Vertices() & ~used;
    if (parent[t] >= 0) {
      const Vertex hp = image[parent[t]];
      cand &= tree.HasArc(parent[t], t) ? host.Out(hp) : host.In(hp);
    }
    for (VertexSet s = cand; s; s &= s - 1) {
      const Vertex h = Lowest(s);
      image[t] = h;
      if (dfs(i + 1, used | Bit(h))) return true;
    }
    image[t] = -1;
    return false;
  };
  if (!dfs(0, 0)) return std::nullopt;
  return image;
}

bool IsEmbedding(const Digraph& host, const Digraph& tree,
                 const std::vector<Vertex>& image) {
  if (static_cast<int>(image.size()) != tree.num_vertices()) return false;
  VertexSet used = 0;
  for (Vertex h : image) {
    if (h < 0 || h >= host.num_vertices() || Contains(used, h)) return false;
    used |= Bit(h);
  }
  for (const Arc& a : tree.Arcs()) {
    if (!host.HasArc(image[a.from], image[a.to])) return false;
  }
  return true;
}

namespace {

// Closes p_0..p_l into a cycle directly or as A C B with
// A = p_0..p_i, B = p_{i+1}..p_j, C = p_{j+1}..p_l.
std::optional<std::vector<Vertex>> ClosePath(const Digraph& g,
                                             const std::vector<Vertex>& p) {
  const int l = static_cast<int>(p.size()) - 1;
  if (l >= 1 && g.HasArc(p[l], p[0])) return p;
  for (int j = 1; j < l; ++j) {
    if (!g.HasArc(p[j], p[0])) continue;
    for (int i = 0; i < j; ++i) {
      if (g.HasArc(p[i], p[j + 1]) && g.HasArc(p[l], p[i + 1])) {
        std::vector<Vertex> c(p.begin(), p.begin() + i + 1);
        c.insert(c.end(), p.begin() + j + 1, p.end());
        c.insert(c.end(), p.begin() + i + 1, p.begin() + j + 1);
        return c;
      }
    }
  }
  return std::nullopt;
}

// All paths obtainable by one rotation at the end: with p_l -> p_i and
// p_{i-1} -> p_k (i < k <= l) the new path is
// p_0..p_{i-1} p_k..p_l p_i..p_{k-1}.
std::optional<std::vector<Vertex>> RotateEnd(const Digraph& g,
                                             const std::vector<Vertex>& p,
                                             VertexSet tried_ends) {
  const int l = static_cast<int>(p.size()) - 1;
  for (int i = 1; i < l; ++i) {
    if (!g.HasArc(p[l], p[i])) continue;
    for (int k = i + 1; k <= l; ++k) {
      if (!g.HasArc(p[i - 1], p[k]) || Contains(tried_ends, p[k - 1])) continue;
      std::vector<Vertex> q(p.begin(), p.begin() + i);
      q.insert(q.end(), p.begin() + k, p.end());
      q.insert(q.end(), p.begin() + i, p.begin() + k);
      return q;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<HamiltonCycle> RotationExtension(const Digraph& g,
                                               const std::optional<CycleFactor>& start) {
  const int n = g.num_vertices();
  if (n < 2) return std::nullopt;
  std::optional<CycleFactor> factor = start ? start : OneFactor(g);
  if (!factor || !IsCycleFactor(g, *factor)) return std::nullopt;
  if (factor->cycles.size() == 1) return HamiltonCycle{factor->cycles[0]};
  const Digraph rev = g.Reverse();

  // Untouched factor cycles keyed by vertex.
  std::vector<int> cycle_of(n, -1);
  for (std::size_t c = 0; c < factor->cycles.size(); ++c) {
    for (Vertex v : factor->cycles[c]) cycle_of[v] = static_cast<int>(c);
  }
  auto cycle_from = [&](Vertex w) {
    const auto& c = factor->cycles[cycle_of[w]];
    std::vector<Vertex> seq(c.size());
    const auto it = std::find(c.begin(), c.end(), w);
    std::rotate_copy(c.begin(), it, c.end(), seq.begin());
    return seq;  // starts at w, follows the cycle
  };

  std::vector<Vertex> path = factor->cycles[0];
  VertexSet in_path = FromVector(path);
  VertexSet tried_end = Bit(path.back());
  VertexSet tried_start = Bit(path.front());
  const long limit = static_cast<long>(n) * n;
  for (long step = 0; step < limit; ++step) {
    const VertexSet outside = g.Vertices() & ~in_path;
    const std::size_t before = path.size();
    if (outside != 0) {
      if (const VertexSet ext = g.Out(path.back()) & outside; ext) {
        for (Vertex v : cycle_from(Lowest(ext))) path.push_back(v);
      } else if (const VertexSet pre = g.In(path.front()) & outside; pre) {
        auto seq = cycle_from(Lowest(pre));
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());  // ends at w
        path.insert(path.begin(), seq.begin(), seq.end());
      }
    }
    if (path.size() != before) {
      in_path = FromVector(path);
      tried_end = Bit(path.back());
      tried_start = Bit(path.front());
      continue;
    }
    if (auto cyc = ClosePath(g, path)) {
      if (static_cast<int>(cyc->size()) == n) return HamiltonCycle{*cyc};
      // Reopen at a vertex with an arc leaving or entering the cycle.
      const int len = static_cast<int>(cyc->size());
      bool reopened = false;
      for (int i = 0; i < len && !reopened; ++i) {
        if (g.Out((*cyc)[i]) & outside) {
          std::rotate(cyc->begin(), cyc->begin() + (i + 1) % len, cyc->end());
          reopened = true;
        } else if (g.In((*cyc)[i]) & outside) {
          std::rotate(cyc->begin(), cyc->begin() + i, cyc->end());
          reopened = true;
        }
      }
      if (!reopened) return std::nullopt;
      path = *cyc;
      tried_end = Bit(path.back());
      tried_start = Bit(path.front());
      continue;
    }
    if (auto q = RotateEnd(g, path, tried_end)) {
      path = std::move(*q);
      tried_end |= Bit(path.back());
      continue;
    }
    std::vector<Vertex> reversed(path.rbegin(), path.rend());
    if (auto q = RotateEnd(rev, reversed, tried_start)) {
      path.assign(q->rbegin(), q->rend());
      tried_start |= Bit(path.front());
      continue;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace hamdg
