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

#include "hamdg/certificates.h"

#include <algorithm>

namespace hamdg {

std::vector<Arc> CycleArcs(const std::vector<Vertex>& order) {
  std::vector<Arc> arcs;
  const int len = static_cast<int>(order.size());
  arcs.reserve(len);
  for (int i = 0; i < len; ++i) {
    arcs.push_back({order[i], order[(i + 1) % len]});
  }
  return arcs;
}

bool IsCycle(const Digraph& g, const std::vector<Vertex>& cycle) {
  const int n = g.num_vertices();
  if (cycle.size() < 2) return false;
  VertexSet seen = 0;
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || Contains(seen, v)) return false;
    seen |= Bit(v);
  }
  for (const Arc& a : CycleArcs(cycle)) {
    if (!g.HasArc(a.from, a.to)) return false;
  }
  return true;
}

bool IsHamiltonCycle(const Digraph& g, const HamiltonCycle& c) {
  return static_cast<int>(c.order.size()) == g.num_vertices() &&
         IsCycle(g, c.order);
}

bool IsCycleFactor(const Digraph& g, const CycleFactor& f, int min_length) {
  VertexSet covered = 0;
  for (const auto& cycle : f.cycles) {
    if (static_cast<int>(cycle.size()) < min_length) return false;
    if (!IsCycle(g, cycle)) return false;
    for (Vertex v : cycle) {
      if (Contains(covered, v)) return false;
      covered |= Bit(v);
    }
  }
  return covered == g.Vertices();
}

bool IsMatching(const Matching& m) {
  std::vector<Vertex> ends;
  for (const Arc& a : m.arcs) {
    if (a.from == a.to) return false;
    ends.push_back(a.from);
    ends.push_back(a.to);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool IsMatchingIn(const Digraph& g, const Matching& m) {
  if (!IsMatching(m)) return false;
  for (const Arc& a : m.arcs) {
    if (a.from < 0 || a.to < 0 || a.from >= g.num_vertices() ||
        a.to >= g.num_vertices() || !g.HasArc(a.from, a.to)) {
      return false;
    }
  }
  return true;
}

std::vector<Vertex> CanonicalCycle(std::vector<Vertex> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

HamiltonCycle Canonical(HamiltonCycle c) {
  c.order = CanonicalCycle(std::move(c.order));
  return c;
}

CycleFactor Canonical(CycleFactor f) {
  for (auto& cycle : f.cycles) cycle = CanonicalCycle(std::move(cycle));
  std::sort(f.cycles.begin(), f.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return f;
}

}  // namespace hamdg
