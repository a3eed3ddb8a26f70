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


// Line-oriented exchange formats for graphs, part maps, and certificates.
//
//   DIGRAPH 1 <n> <m>      followed by m lines "u v", ascending
//   GRAPH 1 <n> <m>        m undirected edges "u v" with u < v
//   PARTS 1 <count>        lines "<name> v1 v2 ..."
//   CYCLE 1 <n> v0 ... v_{n-1}
//   FACTOR 1 <n> <t>       t lines "<len> v1 ... v_len"
//   EMBED 1 <k> f(0) ... f(k-1)
//   CYCLES 1 <n> <t>       t lines each holding one cyclic order
//
// Blank lines and lines starting with '#' are ignored by every parser.

#ifndef HAMDG_IO_H_
#define HAMDG_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "hamdg/certificates.h"
#include "hamdg/digraph.h"
#include "hamdg/parts.h"

namespace hamdg {

std::string WriteDigraph(const Digraph& g);
// Throws ClassMismatch unless g is symmetric.
std::string WriteGraph(const Digraph& g);
// GRAPH format for symmetric inputs when `prefer_graph`, else DIGRAPH.
std::string WriteAuto(const Digraph& g, bool prefer_graph);

struct ParsedGraph {
  Digraph graph;
  bool undirected = false;  // read from a GRAPH header
};

// Accepts either header. Rejects duplicate arcs or edges, self-loops,
// out-of-range ids, and arc counts that disagree with the header.
ParsedGraph ParseGraph(std::string_view text);

std::string WriteParts(const PartMap& parts);
PartMap ParseParts(std::string_view text);

std::string WriteCycle(const HamiltonCycle& c);
HamiltonCycle ParseCycle(std::string_view text);
std::string WriteFactor(int n, const CycleFactor& f);
CycleFactor ParseFactor(std::string_view text);
std::string WriteEmbedding(const std::vector<Vertex>& image);
std::string WriteCycles(int n, const std::vector<HamiltonCycle>& cycles);
std::vector<HamiltonCycle> ParseCycles(std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace hamdg

#endif  // HAMDG_IO_H_
