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

// Bit-row digraph used as the carrier for every graph class in the library:
// tournaments, oriented graphs, and undirected graphs (stored as symmetric
// digraphs).

#ifndef HAMDG_DIGRAPH_H_
#define HAMDG_DIGRAPH_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hamdg {

using Vertex = int;

// One bit per vertex. Vertex v is bit v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet Bit(Vertex v) { return VertexSet{1} << v; }

constexpr VertexSet FullSet(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int Count(VertexSet s) { return std::popcount(s); }

constexpr bool Contains(VertexSet s, Vertex v) { return (s >> v) & 1; }

constexpr Vertex Lowest(VertexSet s) { return std::countr_zero(s); }

// Calls f(v) for every v in s, ascending.
template <typename F>
void ForEach(VertexSet s, F&& f) {
  while (s != 0) {
    f(static_cast<Vertex>(std::countr_zero(s)));
    s &= s - 1;
  }
}

std::vector<Vertex> ToVector(VertexSet s);
VertexSet FromVector(std::span<const Vertex> vs);

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Arc&) const = default;
};

class Digraph {
 public:
  Digraph() = default;
  // Throws CapacityExceeded if n > kMaxVertices.
  explicit Digraph(int n);

  // Duplicate arcs are merged; self-loops and out-of-range ends throw
  // BadParams.
  static Digraph FromArcs(int n, std::span<const Arc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const;

  bool HasArc(Vertex u, Vertex v) const { return Contains(out_[u], v); }
  bool Adjacent(Vertex u, Vertex v) const {
    return HasArc(u, v) || HasArc(v, u);
  }

  void AddArc(Vertex u, Vertex v);
  void RemoveArc(Vertex u, Vertex v);
  // Both directions.
  void AddEdge(Vertex u, Vertex v);
  void RemoveEdge(Vertex u, Vertex v);

  VertexSet Out(Vertex v) const { return out_[v]; }
  VertexSet In(Vertex v) const { return in_[v]; }
  int OutDegree(Vertex v) const { return Count(out_[v]); }
  int InDegree(Vertex v) const { return Count(in_[v]); }
  VertexSet Vertices() const { return FullSet(n_); }

  // Arcs in ascending lexicographic order.
  std::vector<Arc> Arcs() const;

  Digraph Reverse() const;
  // Symmetric closure: u~v whenever u->v or v->u.
  Digraph Underlying() const;
  // Graph on the vertices of `keep` (ascending), relabelled 0..|keep|-1.
  Digraph Induced(VertexSet keep) const;
  // Vertex v of this graph becomes perm[v].
  Digraph Relabel(std::span<const Vertex> perm) const;
  // Disjoint union; vertices of `other` are shifted by num_vertices().
  Digraph DisjointUnion(const Digraph& other) const;

  bool IsSymmetric() const;

  bool operator==(const Digraph&) const = default;

 private:
  void CheckVertex(Vertex v) const;

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

enum class GraphClass { kDigraph, kOriented, kTournament, kUndirected };

std::string_view ToString(GraphClass c);

// Membership test. Every digraph is in kDigraph.
bool IsInClass(const Digraph& g, GraphClass c);

// The most specific class: tournament, then oriented, then undirected,
// then digraph.
GraphClass Classify(const Digraph& g);

// Throws ClassMismatch when g is not in class c.
void RequireClass(const Digraph& g, GraphClass c);

}  // namespace hamdg

#endif  // HAMDG_DIGRAPH_H_
