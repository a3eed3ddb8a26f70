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

#include "hamdg/digraph.h"

#include <string>

#include "hamdg/errors.h"

namespace hamdg {

std::vector<Vertex> ToVector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(Count(s));
  ForEach(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet FromVector(std::span<const Vertex> vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= Bit(v);
  return s;
}

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityExceeded("digraph with " + std::to_string(n) +
                           " vertices exceeds the " +
                           std::to_string(kMaxVertices) + "-vertex limit");
  }
  out_.assign(n, 0);
  in_.assign(n, 0);
}

Digraph Digraph::FromArcs(int n, std::span<const Arc> arcs) {
  Digraph g(n);
  for (const Arc& a : arcs) g.AddArc(a.from, a.to);
  return g;
}

int Digraph::num_arcs() const {
  int m = 0;
  for (VertexSet row : out_) m += Count(row);
  return m;
}

void Digraph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw BadParams("vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(n_) + ")");
  }
}

void Digraph::AddArc(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw BadParams("self-loop at vertex " + std::to_string(u));
  out_[u] |= Bit(v);
  in_[v] |= Bit(u);
}

void Digraph::RemoveArc(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  out_[u] &= ~Bit(v);
  in_[v] &= ~Bit(u);
}

void Digraph::AddEdge(Vertex u, Vertex v) {
  AddArc(u, v);
  AddArc(v, u);
}

void Digraph::RemoveEdge(Vertex u, Vertex v) {
  RemoveArc(u, v);
  RemoveArc(v, u);
}

std::vector<Arc> Digraph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(num_arcs());
  for (Vertex u = 0; u < n_; ++u) {
    ForEach(out_[u], [&](Vertex v) { arcs.push_back({u, v}); });
  }
  return arcs;
}

Digraph Digraph::Reverse() const {
  Digraph r = *this;
  std::swap(r.out_, r.in_);
  return r;
}

Digraph Digraph::Underlying() const {
  Digraph u = *this;
  for (Vertex v = 0; v < n_; ++v) {
    u.out_[v] |= in_[v];
    u.in_[v] = u.out_[v];
  }
  return u;
}

Digraph Digraph::Induced(VertexSet keep) const {
  std::vector<Vertex> old_ids = ToVector(keep & Vertices());
  std::vector<Vertex> new_id(n_, -1);
  for (int i = 0; i < static_cast<int>(old_ids.size()); ++i) {
    new_id[old_ids[i]] = i;
  }
  Digraph h(static_cast<int>(old_ids.size()));
  for (int i = 0; i < h.n_; ++i) {
    ForEach(out_[old_ids[i]] & keep,
            [&](Vertex w) { h.AddArc(i, new_id[w]); });
  }
  return h;
}

Digraph Digraph::Relabel(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw BadParams("relabelling has wrong length");
  }
  Digraph h(n_);
  for (Vertex u = 0; u < n_; ++u) {
    ForEach(out_[u], [&](Vertex v) { h.AddArc(perm[u], perm[v]); });
  }
  return h;
}

Digraph Digraph::DisjointUnion(const Digraph& other) const {
  Digraph h(n_ + other.n_);
  for (const Arc& a : Arcs()) h.AddArc(a.from, a.to);
  for (const Arc& a : other.Arcs()) h.AddArc(a.from + n_, a.to + n_);
  return h;
}

bool Digraph::IsSymmetric() const { return out_ == in_; }

std::string_view ToString(GraphClass c) {
  switch (c) {
    case GraphClass::kDigraph:
      return "digraph";
    case GraphClass::kOriented:
      return "oriented";
    case GraphClass::kTournament:
      return "tournament";
    case GraphClass::kUndirected:
      return "undirected";
  }
  return "digraph";
}

namespace {

bool HasTwoCycle(const Digraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if ((g.Out(v) & g.In(v)) != 0) return true;
  }
  return false;
}

}  // namespace

bool IsInClass(const Digraph& g, GraphClass c) {
  switch (c) {
    case GraphClass::kDigraph:
      return true;
    case GraphClass::kOriented:
      return !HasTwoCycle(g);
    case GraphClass::kTournament: {
      const VertexSet all = g.Vertices();
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if ((g.Out(v) & g.In(v)) != 0) return false;
        if ((g.Out(v) | g.In(v) | Bit(v)) != all) return false;
      }
      return true;
    }
    case GraphClass::kUndirected:
      return g.IsSymmetric();
  }
  return false;
}

GraphClass Classify(const Digraph& g) {
  if (IsInClass(g, GraphClass::kTournament)) return GraphClass::kTournament;
  if (IsInClass(g, GraphClass::kOriented)) return GraphClass::kOriented;
  if (IsInClass(g, GraphClass::kUndirected)) return GraphClass::kUndirected;
  return GraphClass::kDigraph;
}

void RequireClass(const Digraph& g, GraphClass c) {
  if (!IsInClass(g, c)) {
    throw ClassMismatch("expected a graph of class " + std::string(ToString(c)) +
                        ", got " + std::string(ToString(Classify(g))));
  }
}

}  // namespace hamdg
