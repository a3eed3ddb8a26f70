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


#include "hamdg/expander.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "hamdg/errors.h"
#include "hamdg/rng.h"
#include "hamdg/solvers.h"

namespace hamdg {
namespace {

constexpr std::uint64_t kSampleKey = 0x5a3e;
constexpr std::uint64_t kBlowupKey = 0xb10b;

std::string SetText(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

// Next subset of the same size in increasing numeric order (Gosper).
VertexSet NextSameSize(VertexSet x) {
  const VertexSet c = x & (~x + 1);
  const VertexSet r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

Fraction Abs(const Fraction& f) { return f < 0 ? -f : f; }

std::string ModeSuffix(const CheckOptions& opts) {
  return opts.mode == CheckMode::kSampled ? " sampled(" + std::to_string(opts.trials) + ")"
                                          : "";
}

VertexSet RandomSubset(Rng& rng, int n, int size) {
  std::vector<Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  rng.Shuffle(vs);
  VertexSet s = 0;
  for (int i = 0; i < size; ++i) s |= Bit(vs[i]);
  return s;
}

// Most irregular Y for a fixed X, folded into the running best witness.
struct PairScan {
  const BipartitePair& pair;
  Fraction eps;
  Fraction density;
  int y_min;
  std::vector<VertexSet> columns;  // columns[j] = {i : a_i -> b_j}

  bool found = false;
  Fraction best_dev = 0;
  int best_size = -1;
  VertexSet best_x = 0;
  std::vector<int> best_y;

  PairScan(const BipartitePair& p, const Fraction& e, int ymin)
      : pair(p), eps(e), density(p.Density()), y_min(ymin), columns(p.b.size(), 0) {
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      ForEach(p.adjacency[i], [&](Vertex j) { columns[j] |= Bit(static_cast<Vertex>(i)); });
    }
  }

  void Visit(VertexSet x) {
    const int nb = static_cast<int>(pair.b.size());
    const int xs = Count(x);
    std::vector<std::pair<int, int>> deg(nb);
    for (int j = 0; j < nb; ++j) deg[j] = {Count(columns[j] & x), j};
    std::sort(deg.begin(), deg.end());
    // Ascending: prefix sums give the minimum, suffix sums the maximum.
    std::vector<int> low(nb + 1, 0), high(nb + 1, 0);
    for (int k = 1; k <= nb; ++k) {
      low[k] = low[k - 1] + deg[k - 1].first;
      high[k] = high[k - 1] + deg[nb - k].first;
    }
    for (int k = y_min; k <= nb; ++k) {
      for (int side = 0; side < 2; ++side) {
        const int e = side == 0 ? high[k] : low[k];
        const Fraction dev = Abs(Fraction(e, static_cast<std::int64_t>(xs) * k) - density);
        if (dev < eps) continue;
        const int size = xs + k;
        if (found && (dev < best_dev || (dev == best_dev && size <= best_size))) continue;
        found = true;
        best_dev = dev;
        best_size = size;
        best_x = x;
        best_y.clear();
        for (int t = 0; t < k; ++t) {
          best_y.push_back(side == 0 ? deg[nb - 1 - t].second : deg[t].second);
        }
        std::sort(best_y.begin(), best_y.end());
      }
    }
  }

  Witness MakeWitness() const {
    Witness w;
    w.kind = WitnessKind::kSet;
    std::vector<Vertex> xs, ys;
    ForEach(best_x, [&](Vertex i) { xs.push_back(pair.a[i]); });
    for (int j : best_y) ys.push_back(pair.b[j]);
    w.vertices = xs;
    w.vertices.insert(w.vertices.end(), ys.begin(), ys.end());
    w.lhs = eps;
    w.rhs = best_dev;
    w.values = {density};
    w.detail = "X=" + SetText(xs) + " Y=" + SetText(ys) + " |d(X,Y) - d(A,B)| >= eps";
    return w;
  }
};

int CountCycles(const std::vector<Vertex>& succ) {
  std::vector<bool> seen(succ.size(), false);
  int cycles = 0;
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (Vertex u = static_cast<Vertex>(v); !seen[u]; u = succ[u]) seen[u] = true;
  }
  return cycles;
}

CycleFactor FactorOf(const std::vector<Vertex>& succ) {
  CycleFactor f;
  std::vector<bool> seen(succ.size(), false);
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> cycle;
    for (Vertex u = static_cast<Vertex>(v); !seen[u]; u = succ[u]) {
      seen[u] = true;
      cycle.push_back(u);
    }
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

// Perfect matching left -> right along arcs of g (Kuhn), or nothing.
std::optional<std::vector<Vertex>> PerfectMatching(const Digraph& g,
                                                   const std::vector<Vertex>& left,
                                                   const std::vector<Vertex>& right) {
  const int s = static_cast<int>(left.size());
  if (static_cast<int>(right.size()) != s) return std::nullopt;
  std::vector<int> match_right(s, -1);
  std::vector<bool> seen;
  std::function<bool(int)> augment = [&](int i) {
    for (int j = 0; j < s; ++j) {
      if (seen[j] || !g.HasArc(left[i], right[j])) continue;
      seen[j] = true;
      if (match_right[j] < 0 || augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < s; ++i) {
    seen.assign(s, false);
    if (!augment(i)) return std::nullopt;
  }
  std::vector<Vertex> partner(s);
  for (int j = 0; j < s; ++j) partner[match_right[j]] = right[j];
  return partner;
}

std::vector<int> BfsDistances(const Digraph& r, const FactorIndex& fi, Vertex from) {
  std::vector<int> dist(r.num_vertices(), -1);
  std::deque<Vertex> queue = {from};
  dist[from] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    ForEach(r.Out(fi.pred[x]), [&](Vertex y) {
      if (dist[y] >= 0) return;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    });
  }
  return dist;
}

}  // namespace

int NuThreshold(const Fraction& nu, int n) {
  const Fraction v = nu * n;
  std::int64_t q = v.numerator() / v.denominator();
  if (Fraction(q) < v) ++q;
  return static_cast<int>(q);
}

VertexSet RobustOutNeighbourhood(const Digraph& g, VertexSet s, const Fraction& nu,
                                 VertexSet within) {
  within &= g.Vertices();
  s &= within;
  const int threshold = NuThreshold(nu, Count(within));
  VertexSet result = 0;
  ForEach(within, [&](Vertex x) {
    if (Count(g.In(x) & s) >= threshold) result |= Bit(x);
  });
  return result;
}

Verdict IsRobustOutexpander(const Digraph& g, const Fraction& nu, const Fraction& tau,
                            const CheckOptions& opts) {
  if (nu <= 0 || tau >= 1 || nu > tau) {
    throw BadParams("robust outexpansion needs 0 < nu <= tau < 1");
  }
  const std::string rule =
      "robust_outexpander(" + ToString(nu) + "," + ToString(tau) + ")" + ModeSuffix(opts);
  const int n = g.num_vertices();
  const Fraction lo = tau * n, hi = (1 - tau) * n, slack = nu * n;
  int s_min = static_cast<int>(lo.numerator() / lo.denominator()) + 1;
  int s_max = static_cast<int>(hi.numerator() / hi.denominator());
  if (Fraction(s_max) == hi) --s_max;
  s_min = std::max(s_min, 0);
  const auto check = [&](VertexSet s) -> std::optional<Verdict> {
    const int rn = Count(RobustOutNeighbourhood(g, s, nu));
    const Fraction need = Fraction(Count(s)) + slack;
    if (rn >= need) return std::nullopt;
    Witness w;
    w.kind = WitnessKind::kSet;
    w.vertices = ToVector(s);
    w.lhs = rn;
    w.rhs = need;
    w.detail = "|RN+(S)| < |S| + nu n";
    return Verdict::Fails(rule, std::move(w));
  };
  if (opts.mode == CheckMode::kExact) {
    if (n > opts.exact_max_vertices) {
      throw BudgetExceeded("exact expansion check is limited to " +
                           std::to_string(opts.exact_max_vertices) + " vertices");
    }
    for (int size = s_min; size <= s_max; ++size) {
      if (size == 0) {
        if (auto v = check(0)) return *v;
        continue;
      }
      const VertexSet last = FullSet(n) & ~FullSet(n - size);
      for (VertexSet s = FullSet(size);; s = NextSameSize(s)) {
        if (auto v = check(s)) return *v;
        if (s == last) break;
      }
    }
    return Verdict::Holds(rule);
  }
  if (s_min > s_max) return Verdict::Holds(rule);
  Rng rng(opts.seed, kSampleKey);
  for (int trial = 0; trial < opts.trials; ++trial) {
    const int size = rng.UniformInt(s_min, s_max);
    if (auto v = check(RandomSubset(rng, n, size))) return *v;
  }
  return Verdict::Holds(rule);
}

BipartitePair BipartitePair::FromDigraph(const Digraph& g, const std::vector<Vertex>& a,
                                         const std::vector<Vertex>& b) {
  if (b.size() > 64) throw CapacityExceeded("pair side exceeds 64 vertices");
  BipartitePair p{a, b, std::vector<VertexSet>(a.size(), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (g.HasArc(a[i], b[j])) p.adjacency[i] |= Bit(static_cast<Vertex>(j));
    }
  }
  return p;
}

int BipartitePair::Edges() const {
  int e = 0;
  for (VertexSet row : adjacency) e += Count(row);
  return e;
}

Fraction BipartitePair::Density() const {
  return Fraction(Edges(), static_cast<std::int64_t>(a.size() * b.size()));
}

RegularityReport EpsilonRegularPair(const BipartitePair& pair, const Fraction& eps,
                                    const CheckOptions& opts) {
  if (pair.a.empty() || pair.b.empty() || pair.adjacency.size() != pair.a.size()) {
    throw BadParams("pair classes must be non-empty");
  }
  if (eps <= 0 || eps >= 1) throw BadParams("eps must lie in (0, 1)");
  const int na = static_cast<int>(pair.a.size()), nb = static_cast<int>(pair.b.size());
  if (na > 63) throw CapacityExceeded("pair side exceeds 63 vertices");
  const std::string rule = "epsilon_regular(" + ToString(eps) + ")" + ModeSuffix(opts);
  const int x_min = std::max(1, NuThreshold(eps, na));
  const int y_min = std::max(1, NuThreshold(eps, nb));
  PairScan scan(pair, eps, y_min);
  RegularityReport report{Verdict::Holds(rule), scan.density, opts.mode == CheckMode::kExact};
  if (opts.mode == CheckMode::kExact) {
    if (na > kExactPairMaxSide || nb > kExactPairMaxSide) {
      throw BudgetExceeded("exact regularity check is limited to sides of " +
                           std::to_string(kExactPairMaxSide));
    }
    for (VertexSet x = 1; x < (VertexSet{1} << na); ++x) {
      if (Count(x) >= x_min) scan.Visit(x);
    }
  } else {
    Rng rng(opts.seed, kSampleKey);
    for (int trial = 0; trial < opts.trials; ++trial) {
      scan.Visit(RandomSubset(rng, na, rng.UniformInt(x_min, na)));
    }
  }
  if (scan.found) report.verdict = Verdict::Fails(rule, scan.MakeWitness());
  return report;
}

RegularityReport SuperRegularPair(const BipartitePair& pair, const Fraction& eps,
                                  const Fraction& d, const CheckOptions& opts) {
  RegularityReport report = EpsilonRegularPair(pair, eps, opts);
  const std::string rule = "super_regular(" + ToString(eps) + "," + ToString(d) + ")" +
                           ModeSuffix(opts);
  report.verdict.rule = rule;
  if (!report.verdict.holds) return report;
  const int na = static_cast<int>(pair.a.size()), nb = static_cast<int>(pair.b.size());
  const auto fail = [&](Vertex v, int deg, const Fraction& need, const char* side) {
    Witness w;
    w.kind = WitnessKind::kVertex;
    w.vertices = {v};
    w.lhs = deg;
    w.rhs = need;
    w.detail = side;
    report.verdict = Verdict::Fails(rule, std::move(w));
  };
  for (int i = 0; i < na; ++i) {
    const int deg = Count(pair.adjacency[i]);
    if (deg < d * nb) {
      fail(pair.a[i], deg, d * nb, "out-degree into B");
      return report;
    }
  }
  for (int j = 0; j < nb; ++j) {
    int deg = 0;
    for (int i = 0; i < na; ++i) deg += Contains(pair.adjacency[i], j);
    if (deg < d * na) {
      fail(pair.b[j], deg, d * na, "in-degree from A");
      return report;
    }
  }
  return report;
}

FactorIndex::FactorIndex(const Digraph& r, const CycleFactor& f)
    : cycle_of(r.num_vertices(), -1), pred(r.num_vertices(), -1), succ(r.num_vertices(), -1) {
  if (!IsCycleFactor(r, f)) throw BadParams("F is not a 1-factor of R");
  for (std::size_t c = 0; c < f.cycles.size(); ++c) {
    const auto& cycle = f.cycles[c];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex x = cycle[i];
      cycle_of[x] = static_cast<int>(c);
      succ[x] = cycle[(i + 1) % cycle.size()];
      pred[x] = cycle[(i + cycle.size() - 1) % cycle.size()];
    }
  }
}

std::vector<Vertex> ShiftedWalk::EntryClusters() const {
  return {entries.begin() + 1, entries.end()};
}

std::vector<Vertex> ShiftedWalk::ExitClusters(const FactorIndex& fi) const {
  std::vector<Vertex> exits;
  for (int i = 0; i < t(); ++i) exits.push_back(fi.pred[entries[i]]);
  return exits;
}

std::vector<Vertex> ShiftedWalk::Expand(const FactorIndex& fi) const {
  std::vector<Vertex> seq;
  for (int i = 0; i < t(); ++i) {
    Vertex x = entries[i];
    do {
      seq.push_back(x);
      x = fi.succ[x];
    } while (x != entries[i]);
  }
  seq.push_back(entries.back());
  return seq;
}

std::optional<ShiftedWalk> FindShiftedWalk(const Digraph& r, const CycleFactor& f,
                                           Vertex from, Vertex to) {
  const FactorIndex fi(r, f);
  const int k = r.num_vertices();
  if (from < 0 || from >= k || to < 0 || to >= k) throw BadParams("cluster out of range");
  std::vector<Vertex> parent(k, -1);
  std::vector<bool> seen(k, false);
  std::deque<Vertex> queue = {from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const Vertex x = queue.front();
    queue.pop_front();
    ForEach(r.Out(fi.pred[x]), [&](Vertex y) {
      if (seen[y]) return;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    });
  }
  if (!seen[to]) return std::nullopt;
  ShiftedWalk w;
  for (Vertex x = to; x != -1; x = parent[x]) w.entries.push_back(x);
  std::reverse(w.entries.begin(), w.entries.end());
  return w;
}

bool IsValidShiftedWalk(const Digraph& r, const CycleFactor& f, const ShiftedWalk& w,
                        Vertex from, Vertex to) {
  const FactorIndex fi(r, f);
  if (w.entries.empty() || w.entries.front() != from || w.entries.back() != to) return false;
  for (Vertex x : w.entries) {
    if (x < 0 || x >= r.num_vertices()) return false;
  }
  for (int i = 0; i < w.t(); ++i) {
    if (!r.HasArc(fi.pred[w.entries[i]], w.entries[i + 1])) return false;
  }
  return true;
}

std::vector<int> ClosedWalk::Expand(const FactorIndex& fi) const {
  std::vector<int> seq;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    Vertex x = entries[j];
    do {
      seq.push_back(x);
      x = fi.succ[x];
    } while (x != entries[j]);
    if (via[j] >= 0) seq.push_back(-(via[j] + 1));
  }
  return seq;
}

namespace {

void CountLinks(const FactorIndex& fi, ClosedWalk& w, int k) {
  w.entry_count.assign(k, 0);
  w.exit_count.assign(k, 0);
  const std::size_t s = w.entries.size();
  for (std::size_t j = 0; j < s; ++j) {
    const Vertex next = w.entries[(j + 1) % s];
    if (w.via[j] < 0 && next == w.entries[j]) continue;
    ++w.exit_count[fi.pred[w.entries[j]]];
    ++w.entry_count[next];
  }
}

Fraction DemandCap(const ClosedWalkOptions& opts) {
  return opts.demand_cap.value_or(Fraction(opts.cluster_size, 10));
}

}  // namespace

ClosedWalk BuildClosedWalk(const Digraph& r, const CycleFactor& f,
                           const std::vector<Demand>& demands,
                           const ClosedWalkOptions& opts) {
  const FactorIndex fi(r, f);
  const int k = r.num_vertices();
  const int ell = static_cast<int>(demands.size());
  const Fraction cap = DemandCap(opts);
  std::vector<int> demand_count(k, 0);
  for (const Demand& d : demands) {
    if (d.entry < 0 || d.entry >= k || d.exit < 0 || d.exit >= k) {
      throw BadParams("demand cluster out of range");
    }
    ++demand_count[d.entry];
    ++demand_count[d.exit];
  }
  for (int c = 0; c < k; ++c) {
    if (demand_count[c] > cap) {
      throw DemandOverload("cluster " + std::to_string(c) + " is named by " +
                           std::to_string(demand_count[c]) + " demands, cap " + ToString(cap));
    }
  }
  const auto walk = [&](Vertex a, Vertex b) {
    auto w = FindShiftedWalk(r, f, a, b);
    if (!w) {
      throw Disconnected("no shifted walk from cluster " + std::to_string(a) + " to " +
                         std::to_string(b));
    }
    return w->entries;
  };
  const auto append = [](std::vector<Vertex>& seq, const std::vector<Vertex>& path) {
    seq.insert(seq.end(), path.begin() + 1, path.end());
  };
  // Extends `seq` (ending at its last entry) through one cluster of every
  // cycle not in `visited`, nearest first.
  const auto visit_rest = [&](std::vector<Vertex>& seq, std::vector<bool>& visited) {
    for (std::size_t c = 0; c < f.cycles.size(); ++c) {
      if (visited[c]) continue;
      const std::vector<int> dist = BfsDistances(r, fi, seq.back());
      Vertex target = -1;
      for (Vertex z : f.cycles[c]) {
        if (dist[z] >= 0 && (target < 0 || dist[z] < dist[target] ||
                             (dist[z] == dist[target] && z < target))) {
          target = z;
        }
      }
      if (target < 0) {
        throw Disconnected("no shifted walk reaches the F-cycle of cluster " +
                           std::to_string(f.cycles[c][0]));
      }
      append(seq, walk(seq.back(), target));
      for (Vertex x : seq) visited[fi.cycle_of[x]] = true;
    }
  };
  ClosedWalk w;
  std::vector<bool> visited(f.cycles.size(), false);
  if (ell == 0) {
    if (k == 0) return w;
    std::vector<Vertex> seq = {0};
    visited[fi.cycle_of[0]] = true;
    visit_rest(seq, visited);
    if (seq.back() != 0) {
      append(seq, walk(seq.back(), 0));
      seq.pop_back();
    }
    w.entries = seq;
    w.via.assign(seq.size(), -1);
  } else {
    std::vector<std::vector<Vertex>> legs(ell);
    for (int i = 1; i < ell; ++i) {
      legs[i] = walk(demands[i].entry, fi.succ[demands[(i + 1) % ell].exit]);
      for (Vertex x : legs[i]) visited[fi.cycle_of[x]] = true;
    }
    legs[0] = {demands[0].entry};
    visited[fi.cycle_of[demands[0].entry]] = true;
    visit_rest(legs[0], visited);
    append(legs[0], walk(legs[0].back(), fi.succ[demands[1 % ell].exit]));
    for (int i = 0; i < ell; ++i) {
      for (std::size_t j = 0; j < legs[i].size(); ++j) {
        w.entries.push_back(legs[i][j]);
        w.via.push_back(j + 1 == legs[i].size() ? (i + 1) % ell : -1);
      }
    }
  }
  CountLinks(fi, w, k);
  for (int c = 0; c < k; ++c) {
    if (w.entry_count[c] + w.exit_count[c] > cap) {
      throw DemandOverload("cluster " + std::to_string(c) + " is used " +
                           std::to_string(w.entry_count[c] + w.exit_count[c]) +
                           " times as an entry or exit cluster, cap " + ToString(cap));
    }
  }
  return w;
}

Verdict ValidateClosedWalk(const Digraph& r, const CycleFactor& f,
                           const std::vector<Demand>& demands, const ClosedWalk& w,
                           const ClosedWalkOptions& opts) {
  const std::string rule = "closed_walk";
  const FactorIndex fi(r, f);
  const int k = r.num_vertices();
  const int ell = static_cast<int>(demands.size());
  const auto fail = [&](WitnessKind kind, std::vector<Vertex> vs, std::string detail) {
    Witness wit;
    wit.kind = kind;
    wit.vertices = std::move(vs);
    wit.detail = std::move(detail);
    return Verdict::Fails(rule, std::move(wit));
  };
  if (w.entries.empty() || w.via.size() != w.entries.size()) {
    return fail(WitnessKind::kReason, {}, "malformed walk");
  }
  const std::size_t s = w.entries.size();
  for (std::size_t j = 0; j < s; ++j) {
    const Vertex exit = fi.pred[w.entries[j]];
    const Vertex next = w.entries[(j + 1) % s];
    if (w.via[j] >= 0) {
      if (w.via[j] >= ell || demands[w.via[j]].exit != exit || demands[w.via[j]].entry != next) {
        return fail(WitnessKind::kPair, {exit, next}, "link does not match its demand");
      }
    } else if (!r.HasArc(exit, next)) {
      return fail(WitnessKind::kArc, {exit, next}, "link is not an arc of R");
    }
  }
  const std::vector<int> seq = w.Expand(fi);
  std::vector<int> visits(k, 0), exceptional(ell, 0);
  for (int x : seq) {
    if (x >= 0) {
      ++visits[x];
    } else {
      ++exceptional[-x - 1];
    }
  }
  for (int c = 0; c < k; ++c) {
    if (visits[c] == 0) return fail(WitnessKind::kVertex, {c}, "(a) cluster never visited");
  }
  for (int i = 0; i < ell; ++i) {
    if (exceptional[i] != 1) {
      return fail(WitnessKind::kIndex, {i}, "(a) exceptional vertex not visited exactly once");
    }
  }
  for (const auto& cycle : f.cycles) {
    for (Vertex x : cycle) {
      if (visits[x] != visits[cycle[0]]) {
        return fail(WitnessKind::kSet, cycle, "(b) unequal visits along an F-cycle");
      }
    }
  }
  ClosedWalk recount = w;
  CountLinks(fi, recount, k);
  if (recount.entry_count != w.entry_count || recount.exit_count != w.exit_count) {
    return fail(WitnessKind::kReason, {}, "recorded entry/exit counts are stale");
  }
  const Fraction cap = DemandCap(opts);
  for (int c = 0; c < k; ++c) {
    if (w.entry_count[c] + w.exit_count[c] > cap) {
      Witness wit;
      wit.kind = WitnessKind::kVertex;
      wit.vertices = {c};
      wit.lhs = cap;
      wit.rhs = w.entry_count[c] + w.exit_count[c];
      wit.detail = "(c) too many entries and exits";
      return Verdict::Fails(rule, std::move(wit));
    }
  }
  return Verdict::Holds(rule);
}

ClusterBlowup MakeClusterBlowup(const Digraph& r, const BlowupSpec& spec) {
  const int k = r.num_vertices();
  const int m = spec.cluster_size;
  if (m < 1 || spec.exceptional < 0 || spec.exceptional_degree < 0) {
    throw BadParams("blow-up sizes must be positive");
  }
  const int n = k * m + spec.exceptional;
  if (n > kMaxVertices) throw CapacityExceeded("blow-up exceeds 64 vertices");
  ClusterBlowup b;
  b.graph = Digraph(n);
  b.cluster_size = m;
  for (int c = 0; c < k; ++c) {
    b.clusters.emplace_back();
    for (int i = 0; i < m; ++i) b.clusters.back().push_back(c * m + i);
  }
  Rng rng(spec.seed, kBlowupKey);
  for (const Arc& a : r.Arcs()) {
    for (Vertex x : b.clusters[a.from]) {
      for (Vertex y : b.clusters[a.to]) {
        if (spec.pair_density >= 1.0 || rng.Bernoulli(spec.pair_density)) b.graph.AddArc(x, y);
      }
    }
  }
  const int deg = std::min(spec.exceptional_degree, m);
  for (int i = 0; i < spec.exceptional; ++i) {
    const Vertex a = k * m + i;
    b.exceptional.push_back(a);
    for (const auto& cluster : b.clusters) {
      std::vector<Vertex> order = cluster;
      rng.Shuffle(order);
      for (int t = 0; t < deg; ++t) b.graph.AddArc(a, order[t]);
      rng.Shuffle(order);
      for (int t = 0; t < deg; ++t) b.graph.AddArc(order[t], a);
    }
  }
  return b;
}

std::vector<Demand> ChooseDemands(const ClusterBlowup& b, const Digraph& r,
                                  const CycleFactor& f) {
  const FactorIndex fi(r, f);
  const int k = static_cast<int>(b.clusters.size());
  if (k != r.num_vertices()) throw BadParams("cluster count differs from R");
  std::vector<VertexSet> sets;
  for (const auto& cluster : b.clusters) sets.push_back(FromVector(cluster));
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (Vertex x = 0; x < k; ++x) {
    const std::vector<int> dist = BfsDistances(r, fi, x);
    for (Vertex y = 0; y < k; ++y) reach[x][y] = dist[y] >= 0;
  }
  std::vector<int> used(k, 0);
  std::vector<Demand> demands;
  for (Vertex a : b.exceptional) {
    struct Candidate {
      int usage, weight;
      Demand d;
    };
    std::optional<Candidate> best;
    for (Vertex t = 0; t < k; ++t) {
      const int out = Count(b.graph.Out(a) & sets[t]);
      if (out == 0) continue;
      for (Vertex u = 0; u < k; ++u) {
        const int in = Count(b.graph.In(a) & sets[u]);
        if (in == 0) continue;
        const Vertex first_u = demands.empty() ? u : demands[0].exit;
        if (!reach[t][fi.succ[first_u]]) continue;
        if (!demands.empty() && !reach[demands.back().entry][fi.succ[u]]) continue;
        const Candidate c{used[t] + used[u] + (t == u), std::min(out, in), {t, u}};
        if (!best || c.usage < best->usage ||
            (c.usage == best->usage && c.weight > best->weight)) {
          best = c;
        }
      }
    }
    if (!best) {
      throw Disconnected("no admissible entry and exit clusters for exceptional vertex " +
                         std::to_string(a));
    }
    ++used[best->d.entry];
    ++used[best->d.exit];
    demands.push_back(best->d);
  }
  return demands;
}

AssemblyResult AssembleHamilton(const ClusterBlowup& b, const Digraph& r,
                                const CycleFactor& f, const ClosedWalk& w) {
  const FactorIndex fi(r, f);
  const Digraph& g = b.graph;
  const int n = g.num_vertices();
  const int k = r.num_vertices();
  if (static_cast<int>(b.clusters.size()) != k) throw BadParams("cluster count differs from R");
  std::vector<Vertex> succ(n, -1), pred(n, -1);
  AssemblyResult result;
  const auto fix = [&](Vertex x, Vertex y) {
    succ[x] = y;
    pred[y] = x;
    result.trace.fixed_arcs.push_back({x, y});
  };
  const auto free_vertex = [&](Vertex v) { return succ[v] < 0 && pred[v] < 0; };
  // Links through exceptional vertices first: they have the fewest choices.
  const std::size_t s = w.entries.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < s; ++j) {
      const Vertex exit = fi.pred[w.entries[j]];
      const Vertex next = w.entries[(j + 1) % s];
      if (pass == 0 && w.via[j] >= 0) {
        const Vertex a = b.exceptional.at(w.via[j]);
        Vertex y = -1, x = -1;
        for (Vertex v : b.clusters[exit]) {
          if (free_vertex(v) && g.HasArc(v, a)) {
            y = v;
            break;
          }
        }
        if (y >= 0) fix(y, a);
        for (Vertex v : b.clusters[next]) {
          if (free_vertex(v) && g.HasArc(a, v)) {
            x = v;
            break;
          }
        }
        if (y < 0 || x < 0) {
          throw MatchingFailure("no free arc between exceptional vertex " + std::to_string(a) +
                                " and cluster " + std::to_string(y < 0 ? exit : next));
        }
        fix(a, x);
      } else if (pass == 1 && w.via[j] < 0 && next != w.entries[j]) {
        bool done = false;
        for (Vertex x : b.clusters[exit]) {
          if (!free_vertex(x)) continue;
          for (Vertex y : b.clusters[next]) {
            if (x != y && free_vertex(y) && g.HasArc(x, y)) {
              fix(x, y);
              done = true;
              break;
            }
          }
          if (done) break;
        }
        if (!done) {
          throw MatchingFailure("no free arc from cluster " + std::to_string(exit) +
                                " to cluster " + std::to_string(next));
        }
      }
    }
  }
  // G_A: A \ A_exit versus A^+ \ A^+_entry.
  const auto classes = [&](Vertex c) {
    std::pair<std::vector<Vertex>, std::vector<Vertex>> lr;
    for (Vertex v : b.clusters[c]) {
      if (succ[v] < 0 || std::find(result.trace.fixed_arcs.begin(), result.trace.fixed_arcs.end(),
                                   Arc{v, succ[v]}) == result.trace.fixed_arcs.end()) {
        lr.first.push_back(v);
      }
    }
    for (Vertex v : b.clusters[fi.succ[c]]) {
      if (pred[v] < 0 || std::find(result.trace.fixed_arcs.begin(), result.trace.fixed_arcs.end(),
                                   Arc{pred[v], v}) == result.trace.fixed_arcs.end()) {
        lr.second.push_back(v);
      }
    }
    return lr;
  };
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> sides(k);
  for (Vertex c = 0; c < k; ++c) sides[c] = classes(c);
  for (Vertex c = 0; c < k; ++c) {
    const auto& [left, right] = sides[c];
    const auto partner = PerfectMatching(g, left, right);
    if (!partner) {
      throw MatchingFailure("G_A for cluster pair (" + std::to_string(c) + ", " +
                            std::to_string(fi.succ[c]) + ") has no perfect matching");
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      succ[left[i]] = (*partner)[i];
      pred[(*partner)[i]] = left[i];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (succ[v] < 0 || pred[v] < 0) {
      throw MergeFailure("vertex " + std::to_string(v) + " is not covered by the 1-factor");
    }
  }
  result.trace.initial_factor = FactorOf(succ);
  for (Vertex c = 0; c < k; ++c) {
    const auto& [left, right] = sides[c];
    const int size = static_cast<int>(right.size());
    MergeStep step;
    step.cluster = c;
    step.j_vertices = size;
    step.cycles_before = CountCycles(succ);
    if (size >= 2) {
      const VertexSet left_set = FromVector(left);
      std::vector<Vertex> f_of(size);
      for (int i = 0; i < size; ++i) {
        Vertex v = right[i];
        while (!Contains(left_set, v)) v = succ[v];
        f_of[i] = v;
      }
      Digraph j(size);
      for (int i = 0; i < size; ++i) {
        for (int t = 0; t < size; ++t) {
          if (i != t && g.HasArc(f_of[i], right[t])) j.AddArc(i, t);
        }
      }
      std::optional<HamiltonCycle> hc = RotationExtension(j);
      if (!hc) {
        step.exact_fallback = true;
        hc = FindHamiltonCycle(j);
      }
      if (!hc) {
        throw MergeFailure("auxiliary digraph J of cluster " + std::to_string(c) +
                           " has no Hamilton cycle");
      }
      for (int i = 0; i < size; ++i) {
        const Vertex from = f_of[hc->order[i]];
        const Vertex to = right[hc->order[(i + 1) % size]];
        succ[from] = to;
        pred[to] = from;
      }
    }
    step.cycles_after = CountCycles(succ);
    result.trace.merges.push_back(step);
  }
  const int cycles = CountCycles(succ);
  if (cycles != 1) {
    throw MergeFailure("after merging, the 1-factor still has " + std::to_string(cycles) +
                       " cycles");
  }
  Vertex v = 0;
  do {
    result.cycle.order.push_back(v);
    v = succ[v];
  } while (v != 0);
  return result;
}

PipelineResult RunBlowupPipeline(const Digraph& r, const CycleFactor& f, const BlowupSpec& spec,
                                 const ClosedWalkOptions& walk_opts,
                                 const ExpanderParams& params) {
  const FactorIndex fi(r, f);
  PipelineResult p;
  p.blowup = MakeClusterBlowup(r, spec);
  CheckOptions check;
  if (spec.cluster_size > kExactPairMaxSide) check.mode = CheckMode::kSampled;
  check.seed = spec.seed;
  for (Vertex c = 0; c < r.num_vertices(); ++c) {
    const BipartitePair pair = BipartitePair::FromDigraph(
        p.blowup.graph, p.blowup.clusters[c], p.blowup.clusters[fi.succ[c]]);
    p.pair_reports.push_back(SuperRegularPair(pair, params.eps, params.d, check));
  }
  p.demands = ChooseDemands(p.blowup, r, f);
  p.walk = BuildClosedWalk(r, f, p.demands, walk_opts);
  p.assembly = AssembleHamilton(p.blowup, r, f, p.walk);
  if (!IsHamiltonCycle(p.blowup.graph, p.assembly.cycle)) {
    throw MergeFailure("assembled sequence is not a Hamilton cycle of the blow-up");
  }
  return p;
}

}  // namespace hamdg
