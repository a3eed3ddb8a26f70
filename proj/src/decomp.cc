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


#include "hamdg/decomp.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hamdg/rng.h"

namespace hamdg {
namespace {

constexpr std::uint64_t kRestartKey = 0x9e57;

Arc Normalize(Arc a, EdgeSemantics sem) {
  if (sem == EdgeSemantics::kEdges && a.from > a.to) std::swap(a.from, a.to);
  return a;
}

void RemoveItems(Digraph& h, const std::vector<Vertex>& order, EdgeSemantics sem) {
  for (const Arc& a : CycleArcs(order)) {
    if (sem == EdgeSemantics::kEdges) {
      h.RemoveEdge(a.from, a.to);
    } else {
      h.RemoveArc(a.from, a.to);
    }
  }
}

// Common degree r of a regular graph, or -1. For edge semantics the graph
// must be symmetric and r counts neighbours.
int RegularDegree(const Digraph& g, EdgeSemantics sem) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  if (sem == EdgeSemantics::kEdges && !g.IsSymmetric()) return -1;
  const int r = g.OutDegree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.OutDegree(v) != r || g.InDegree(v) != r) return -1;
  }
  return r;
}

std::string ArcText(const Arc& a) {
  return std::to_string(a.from) + "->" + std::to_string(a.to);
}

std::string MatchingText(const Matching& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.arcs.size(); ++i) {
    if (i) s += ", ";
    s += ArcText(m.arcs[i]);
  }
  return s + "}";
}

Witness ArcWitness(const Arc& a, std::string detail) {
  Witness w;
  w.kind = WitnessKind::kArc;
  w.vertices = {a.from, a.to};
  w.detail = std::move(detail);
  return w;
}

Witness IndexWitness(int i, std::string detail) {
  Witness w;
  w.kind = WitnessKind::kIndex;
  w.index = i;
  w.detail = std::move(detail);
  return w;
}

bool IsHamiltonFor(const Digraph& g, const HamiltonCycle& c, EdgeSemantics sem) {
  if (sem == EdgeSemantics::kEdges && g.num_vertices() < 3) return false;
  return IsHamiltonCycle(g, c);
}

class ExactDecomposer {
 public:
  ExactDecomposer(EdgeSemantics sem, const SearchOptions& opts) : sem_(sem), opts_(opts) {}

  bool Run(Digraph h) {
    if (h.num_arcs() == 0) return true;
    const VertexSet out0 = h.Out(0);
    if (out0 == 0) return false;
    const Vertex first = Lowest(out0);
    Digraph forced = h;
    ForEach(out0 & ~Bit(first), [&](Vertex w) { forced.RemoveArc(0, w); });
    bool done = false;
    ForEachHamiltonCycle(
        forced,
        [&](const std::vector<Vertex>& order) {
          if (++visited_ > opts_.node_budget) {
            throw BudgetExceeded("exact decomposition exceeded its budget");
          }
          Digraph rest = h;
          RemoveItems(rest, order, sem_);
          cycles_.push_back({order});
          if (Run(std::move(rest))) {
            done = true;
            return false;
          }
          cycles_.pop_back();
          return true;
        },
        opts_);
    return done;
  }

  std::vector<HamiltonCycle>& cycles() { return cycles_; }

 private:
  EdgeSemantics sem_;
  SearchOptions opts_;
  std::uint64_t visited_ = 0;
  std::vector<HamiltonCycle> cycles_;
};

// Misra-Gries fan rotation with colour lookup tables.
class MisraGries {
 public:
  MisraGries(int n, int colors)
      : n_(n), colors_(colors), color_(n * n, -1), at_(n * colors, -1) {}

  void ColorEdge(const Digraph& f, Vertex u, Vertex v) {
    std::vector<Vertex> fan = {v};
    VertexSet in_fan = Bit(v);
    for (;;) {
      const Vertex last = fan.back();
      Vertex next = -1;
      ForEach(f.Out(u) & ~in_fan, [&](Vertex w) {
        if (next >= 0) return;
        const int cw = Color(u, w);
        if (cw >= 0 && IsFree(last, cw)) next = w;
      });
      if (next < 0) break;
      fan.push_back(next);
      in_fan |= Bit(next);
    }
    const int c = FreeColor(u);
    const int d = FreeColor(fan.back());
    InvertPath(u, c, d);
    int w = -1;
    for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
      if (i > 0) {
        const int ci = Color(u, fan[i]);
        if (ci < 0 || !IsFree(fan[i - 1], ci)) break;
      }
      if (IsFree(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w < 0) throw std::logic_error("edge colouring lost its fan invariant");
    for (int j = 0; j < w; ++j) {
      const int cj = Color(u, fan[j + 1]);
      Unset(u, fan[j + 1]);
      Set(u, fan[j], cj);
    }
    Set(u, fan[w], d);
  }

  int Color(Vertex u, Vertex v) const { return color_[u * n_ + v]; }

 private:
  bool IsFree(Vertex v, int c) const { return at_[v * colors_ + c] < 0; }

  int FreeColor(Vertex v) const {
    for (int c = 0; c < colors_; ++c) {
      if (IsFree(v, c)) return c;
    }
    throw std::logic_error("no free colour");
  }

  void Set(Vertex u, Vertex v, int c) {
    color_[u * n_ + v] = color_[v * n_ + u] = c;
    at_[u * colors_ + c] = v;
    at_[v * colors_ + c] = u;
  }

  void Unset(Vertex u, Vertex v) {
    const int c = Color(u, v);
    color_[u * n_ + v] = color_[v * n_ + u] = -1;
    at_[u * colors_ + c] = -1;
    at_[v * colors_ + c] = -1;
  }

  // Swaps c and d along the path from u that starts with colour d.
  void InvertPath(Vertex u, int c, int d) {
    if (c == d) return;
    std::vector<std::pair<Arc, int>> path;
    Vertex x = u;
    int cur = d;
    while (at_[x * colors_ + cur] >= 0) {
      const Vertex y = at_[x * colors_ + cur];
      path.push_back({{x, y}, cur});
      x = y;
      cur = cur == d ? c : d;
    }
    for (const auto& [e, col] : path) Unset(e.from, e.to);
    for (const auto& [e, col] : path) Set(e.from, e.to, col == d ? c : d);
  }

  int n_;
  int colors_;
  std::vector<int> color_;
  std::vector<int> at_;
};

int DefaultCap(int n, const CoverOptions& opts) {
  if (opts.matching_cap > 0) return opts.matching_cap;
  int cap = 1;
  while (cap * cap < n) ++cap;
  return cap;
}

// Decomposition stage shared by both pipelines.
Extraction ExtractStage(const Digraph& g, EdgeSemantics sem, const CoverOptions& opts,
                        CoverStats& stats) {
  if (g.num_vertices() <= opts.exact_max_vertices) {
    try {
      if (auto d = DecomposeExact(g, sem, opts.search)) {
        stats.exact = true;
        return {std::move(d->cycles), Digraph(g.num_vertices())};
      }
    } catch (const BudgetExceeded&) {
      // Fall through to greedy extraction.
    }
  }
  return GreedyExtractWithRestarts(g, sem, opts.greedy_restarts, opts.seed, opts.search);
}

}  // namespace

std::vector<Arc> CoveredItems(const std::vector<Vertex>& order, EdgeSemantics sem) {
  std::vector<Arc> items = CycleArcs(order);
  for (Arc& a : items) a = Normalize(a, sem);
  return items;
}

std::vector<Arc> HostItems(const Digraph& g, EdgeSemantics sem) {
  std::vector<Arc> items;
  for (const Arc& a : g.Arcs()) {
    if (sem == EdgeSemantics::kEdges && a.from > a.to) continue;
    items.push_back(a);
  }
  return items;
}

void RecountMultiplicity(Cover& cover) {
  cover.multiplicity.clear();
  for (const HamiltonCycle& c : cover.cycles) {
    for (const Arc& a : CoveredItems(c.order, cover.semantics)) ++cover.multiplicity[a];
  }
}

Decomposition Walecki(int n) {
  if (n < 3 || n % 2 == 0) throw BadParams("walecki needs odd n >= 3");
  const int k = (n - 1) / 2;
  const int ring = 2 * k;
  const Vertex infinity = n - 1;
  // Zigzag 0, 1, -1, 2, -2, ..., k on the ring of 2k points.
  std::vector<int> zigzag = {0};
  for (int j = 1; j < k; ++j) {
    zigzag.push_back(j);
    zigzag.push_back(ring - j);
  }
  zigzag.push_back(k);
  Decomposition d;
  d.semantics = EdgeSemantics::kEdges;
  for (int i = 0; i < k; ++i) {
    HamiltonCycle c;
    c.order.push_back(infinity);
    for (int z : zigzag) c.order.push_back((z + i) % ring);
    d.cycles.push_back(std::move(c));
  }
  return d;
}

std::optional<Decomposition> DecomposeExact(const Digraph& g, EdgeSemantics sem,
                                            const SearchOptions& opts) {
  const int n = g.num_vertices();
  const int r = RegularDegree(g, sem);
  if (r < 0) return std::nullopt;
  if (sem == EdgeSemantics::kEdges && (r % 2 != 0 || (r > 0 && n < 3))) return std::nullopt;
  ExactDecomposer search(sem, opts);
  if (!search.Run(g)) return std::nullopt;
  return Decomposition{std::move(search.cycles()), sem};
}

Extraction GreedyExtract(const Digraph& g, EdgeSemantics sem, const SearchOptions& opts) {
  Extraction ex{{}, g};
  if (sem == EdgeSemantics::kEdges && g.num_vertices() < 3) return ex;
  while (auto c = FindHamiltonCycle(ex.leftover, opts)) {
    RemoveItems(ex.leftover, c->order, sem);
    ex.cycles.push_back(std::move(*c));
  }
  return ex;
}

Extraction GreedyExtractWithRestarts(const Digraph& g, EdgeSemantics sem, int restarts,
                                     std::uint64_t seed, const SearchOptions& opts) {
  Extraction best = GreedyExtract(g, sem, opts);
  Rng rng(seed, kRestartKey);
  const int n = g.num_vertices();
  for (int attempt = 0; attempt < restarts && best.leftover.num_arcs() > 0; ++attempt) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.Shuffle(perm);
    std::vector<Vertex> inverse(n);
    for (Vertex v = 0; v < n; ++v) inverse[perm[v]] = v;
    Extraction trial = GreedyExtract(g.Relabel(perm), sem, opts);
    if (trial.leftover.num_arcs() >= best.leftover.num_arcs()) continue;
    for (HamiltonCycle& c : trial.cycles) {
      for (Vertex& v : c.order) v = inverse[v];
    }
    trial.leftover = trial.leftover.Relabel(inverse);
    best = std::move(trial);
  }
  return best;
}

EdgeColoring VizingColor(const Digraph& f) {
  if (!f.IsSymmetric()) throw ClassMismatch("edge colouring needs an undirected graph");
  const int n = f.num_vertices();
  int max_degree = 0;
  for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, f.OutDegree(v));
  EdgeColoring result;
  if (max_degree == 0) return result;
  const int colors = max_degree + 1;
  MisraGries mg(n, colors);
  for (const Arc& e : HostItems(f, EdgeSemantics::kEdges)) mg.ColorEdge(f, e.from, e.to);
  result.classes.resize(colors);
  for (const Arc& e : HostItems(f, EdgeSemantics::kEdges)) {
    result.classes[mg.Color(e.from, e.to)].arcs.push_back(e);
  }
  std::erase_if(result.classes, [](const Matching& m) { return m.arcs.empty(); });
  return result;
}

std::vector<Matching> SplitMatching(const Matching& m, int cap) {
  if (cap < 1) throw BadParams("matching cap must be positive");
  std::vector<Matching> pieces;
  for (std::size_t i = 0; i < m.arcs.size(); i += cap) {
    const std::size_t end = std::min(m.arcs.size(), i + static_cast<std::size_t>(cap));
    pieces.push_back({{m.arcs.begin() + i, m.arcs.begin() + end}});
  }
  return pieces;
}

CoverResult CoverTournament(const Digraph& g, const CoverOptions& opts) {
  const int n = g.num_vertices();
  if (n < 3 || !IsInClass(g, GraphClass::kTournament) ||
      RegularDegree(g, EdgeSemantics::kArcs) != (n - 1) / 2) {
    throw ClassMismatch("cover_tournament needs a regular tournament on n >= 3 vertices");
  }
  CoverResult result;
  CoverStats& stats = result.stats;
  Extraction ex = ExtractStage(g, EdgeSemantics::kArcs, opts, stats);
  stats.extracted = static_cast<int>(ex.cycles.size());
  stats.leftover = ex.leftover.num_arcs();
  result.cover.cycles = std::move(ex.cycles);
  const EdgeColoring coloring = VizingColor(ex.leftover.Underlying());
  stats.colors = static_cast<int>(coloring.classes.size());
  const int cap = DefaultCap(n, opts);
  for (const Matching& cls : coloring.classes) {
    Matching arcs;
    for (const Arc& e : cls.arcs) {
      arcs.arcs.push_back(ex.leftover.HasArc(e.from, e.to) ? e : Arc{e.to, e.from});
    }
    for (const Matching& piece : SplitMatching(arcs, cap)) {
      ++stats.matchings;
      auto c = HamiltonCycleThrough(g, piece, opts.search);
      if (!c) throw CoverFailure("no Hamilton cycle through " + MatchingText(piece), piece);
      result.cover.cycles.push_back(std::move(*c));
    }
  }
  RecountMultiplicity(result.cover);
  return result;
}

CoverResult CoverRegularGraph(const Digraph& g, const CoverOptions& opts) {
  const int n = g.num_vertices();
  if (n < 3 || RegularDegree(g, EdgeSemantics::kEdges) < 2) {
    throw ClassMismatch("cover_regular_graph needs a symmetric regular graph of degree >= 2");
  }
  CoverResult result;
  result.cover.semantics = EdgeSemantics::kEdges;
  CoverStats& stats = result.stats;
  Extraction ex = ExtractStage(g, EdgeSemantics::kEdges, opts, stats);
  stats.extracted = static_cast<int>(ex.cycles.size());
  stats.leftover = ex.leftover.num_arcs() / 2;
  result.cover.cycles = std::move(ex.cycles);
  const EdgeColoring coloring = VizingColor(ex.leftover);
  stats.colors = static_cast<int>(coloring.classes.size());
  const int cap = DefaultCap(n, opts);
  for (const Matching& cls : coloring.classes) {
    for (const Matching& piece : SplitMatching(cls, cap)) {
      ++stats.matchings;
      Digraph oriented = g;
      for (const Arc& e : piece.arcs) oriented.RemoveArc(e.to, e.from);
      auto c = HamiltonCycleThrough(oriented, piece, opts.search);
      if (!c) throw CoverFailure("no Hamilton cycle through " + MatchingText(piece), piece);
      result.cover.cycles.push_back(std::move(*c));
    }
  }
  RecountMultiplicity(result.cover);
  return result;
}

int CoverBenchmark(int n, const Fraction& xi) {
  const Fraction v = (Fraction(1, 2) + xi) * n;
  const std::int64_t q = v.numerator() / v.denominator();
  return static_cast<int>(q * v.denominator() == v.numerator() || v < 0 ? q : q + 1);
}

Verdict Validate(const Decomposition& d, const Digraph& g) {
  const std::string rule = "decomposition";
  std::set<Arc> used;
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    if (!IsHamiltonFor(g, d.cycles[i], d.semantics)) {
      return Verdict::Fails(rule, IndexWitness(static_cast<int>(i), "not a Hamilton cycle"));
    }
    for (const Arc& a : CoveredItems(d.cycles[i].order, d.semantics)) {
      if (!used.insert(a).second) return Verdict::Fails(rule, ArcWitness(a, "reused"));
    }
  }
  const std::vector<Arc> host = HostItems(g, d.semantics);
  for (const Arc& a : host) {
    if (!used.count(a)) return Verdict::Fails(rule, ArcWitness(a, "uncovered"));
  }
  const int n = g.num_vertices();
  if (n == 0 || static_cast<std::size_t>(n) * d.cycles.size() != host.size()) {
    Witness w;
    w.kind = WitnessKind::kSlack;
    w.lhs = static_cast<std::int64_t>(d.cycles.size());
    w.rhs = n == 0 ? Fraction(0) : Fraction(static_cast<std::int64_t>(host.size()), n);
    if (w.lhs > w.rhs) std::swap(w.lhs, w.rhs);
    w.detail = "cycle count differs from |items| / n";
    return Verdict::Fails(rule, std::move(w));
  }
  return Verdict::Holds(rule);
}

Verdict Validate(const Cover& c, const Digraph& g) {
  const std::string rule = "cover";
  std::map<Arc, int> counts;
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    if (!IsHamiltonFor(g, c.cycles[i], c.semantics)) {
      return Verdict::Fails(rule, IndexWitness(static_cast<int>(i), "not a Hamilton cycle"));
    }
    for (const Arc& a : CoveredItems(c.cycles[i].order, c.semantics)) ++counts[a];
  }
  for (const Arc& a : HostItems(g, c.semantics)) {
    if (!counts.count(a)) return Verdict::Fails(rule, ArcWitness(a, "uncovered"));
  }
  if (counts != c.multiplicity) {
    for (const auto& [a, k] : counts) {
      auto it = c.multiplicity.find(a);
      if (it == c.multiplicity.end() || it->second != k) {
        return Verdict::Fails(rule, ArcWitness(a, "multiplicity"));
      }
    }
    for (const auto& [a, k] : c.multiplicity) {
      if (!counts.count(a)) return Verdict::Fails(rule, ArcWitness(a, "multiplicity"));
    }
  }
  return Verdict::Holds(rule);
}

Verdict Validate(const EdgeColoring& c, const Digraph& f) {
  const std::string rule = "edge_coloring";
  std::set<Arc> used;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    VertexSet ends = 0;
    for (Arc a : c.classes[i].arcs) {
      a = Normalize(a, EdgeSemantics::kEdges);
      if (a.from < 0 || a.to >= f.num_vertices() || a.from == a.to ||
          !f.HasArc(a.from, a.to) || !f.HasArc(a.to, a.from)) {
        return Verdict::Fails(rule, ArcWitness(a, "not an edge"));
      }
      if ((ends & (Bit(a.from) | Bit(a.to))) != 0) {
        return Verdict::Fails(rule, ArcWitness(a, "class " + std::to_string(i) + " is not a matching"));
      }
      ends |= Bit(a.from) | Bit(a.to);
      if (!used.insert(a).second) return Verdict::Fails(rule, ArcWitness(a, "coloured twice"));
    }
  }
  for (const Arc& a : HostItems(f, EdgeSemantics::kEdges)) {
    if (!used.count(a)) return Verdict::Fails(rule, ArcWitness(a, "uncoloured"));
  }
  int max_degree = 0;
  for (Vertex v = 0; v < f.num_vertices(); ++v) max_degree = std::max(max_degree, f.OutDegree(v));
  if (static_cast<int>(c.classes.size()) > max_degree + 1) {
    Witness w;
    w.kind = WitnessKind::kSlack;
    w.lhs = max_degree + 1;
    w.rhs = static_cast<std::int64_t>(c.classes.size());
    w.detail = "more than Delta+1 classes";
    return Verdict::Fails(rule, std::move(w));
  }
  return Verdict::Holds(rule);
}

}  // namespace hamdg
