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


#include "hamdg/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hamdg/errors.h"

namespace hamdg {
namespace {

using Line = std::vector<std::string_view>;

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    Line line;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.empty() && line[0][0] != '#') lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

int ToInt(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

void ExpectHeader(const std::vector<Line>& lines, std::string_view tag,
                  std::size_t fields) {
  if (lines.empty()) throw ParseError("empty input, expected " + std::string(tag));
  const Line& h = lines[0];
  if (h[0] != tag) {
    throw ParseError("expected header " + std::string(tag) + ", got '" +
                     std::string(h[0]) + "'");
  }
  if (h.size() < 2 || h[1] != "1") {
    throw ParseError("unsupported " + std::string(tag) + " format version");
  }
  if (h.size() != fields) {
    throw ParseError("malformed " + std::string(tag) + " header");
  }
}

int CheckedVertex(std::string_view s, int n) {
  const int v = ToInt(s);
  if (v < 0 || v >= n) {
    throw ParseError("vertex id " + std::to_string(v) + " out of range [0," +
                     std::to_string(n) + ")");
  }
  return v;
}

std::vector<Vertex> VertexList(const Line& line, std::size_t from, int n) {
  std::vector<Vertex> vs;
  for (std::size_t i = from; i < line.size(); ++i) {
    vs.push_back(CheckedVertex(line[i], n));
  }
  return vs;
}

void AppendList(std::ostringstream& out, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) out << ' ' << v;
}

}  // namespace

std::string WriteDigraph(const Digraph& g) {
  std::ostringstream out;
  const auto arcs = g.Arcs();
  out << "DIGRAPH 1 " << g.num_vertices() << ' ' << arcs.size() << '\n';
  for (const Arc& a : arcs) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

std::string WriteGraph(const Digraph& g) {
  if (!g.IsSymmetric()) {
    throw ClassMismatch("GRAPH format needs a symmetric digraph");
  }
  std::vector<Arc> edges;
  for (const Arc& a : g.Arcs()) {
    if (a.from < a.to) edges.push_back(a);
  }
  std::ostringstream out;
  out << "GRAPH 1 " << g.num_vertices() << ' ' << edges.size() << '\n';
  for (const Arc& a : edges) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

std::string WriteAuto(const Digraph& g, bool prefer_graph) {
  return prefer_graph && g.IsSymmetric() ? WriteGraph(g) : WriteDigraph(g);
}

ParsedGraph ParseGraph(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw ParseError("empty graph input");
  const bool undirected = lines[0][0] == "GRAPH";
  ExpectHeader(lines, undirected ? "GRAPH" : "DIGRAPH", 4);
  const int n = ToInt(lines[0][2]);
  const int m = ToInt(lines[0][3]);
  if (n < 0) throw ParseError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityExceeded("graph has " + std::to_string(n) +
                           " vertices; at most " +
                           std::to_string(kMaxVertices) + " are supported");
  }
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " lines, found " +
                     std::to_string(lines.size() - 1));
  }
  ParsedGraph p{Digraph(n), undirected};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.size() != 2) throw ParseError("line " + std::to_string(i) + ": expected 'u v'");
    const int u = CheckedVertex(l[0], n);
    const int v = CheckedVertex(l[1], n);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    if (undirected) {
      if (p.graph.HasArc(u, v)) {
        throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      p.graph.AddEdge(u, v);
    } else {
      if (p.graph.HasArc(u, v)) {
        throw ParseError("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
      }
      p.graph.AddArc(u, v);
    }
  }
  return p;
}

std::string WriteParts(const PartMap& parts) {
  std::ostringstream out;
  out << "PARTS 1 " << parts.size() << '\n';
  for (const Part& p : parts) {
    out << p.name;
    AppendList(out, p.vertices);
    out << '\n';
  }
  return out.str();
}

PartMap ParseParts(std::string_view text) {
  const auto lines = Tokenize(text);
  ExpectHeader(lines, "PARTS", 3);
  const int count = ToInt(lines[0][2]);
  if (static_cast<int>(lines.size()) - 1 != count) {
    throw ParseError("PARTS header count does not match body");
  }
  PartMap parts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    parts.push_back({std::string(lines[i][0]), VertexList(lines[i], 1, kMaxVertices)});
  }
  return parts;
}

std::string WriteCycle(const HamiltonCycle& c) {
  std::ostringstream out;
  out << "CYCLE 1 " << c.order.size();
  AppendList(out, c.order);
  out << '\n';
  return out.str();
}

HamiltonCycle ParseCycle(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty() || lines[0].size() < 3) throw ParseError("malformed CYCLE record");
  ExpectHeader(lines, "CYCLE", lines[0].size());
  const int n = ToInt(lines[0][2]);
  HamiltonCycle c{VertexList(lines[0], 3, std::max(n, 1))};
  if (static_cast<int>(c.order.size()) != n) {
    throw ParseError("CYCLE record length does not match n");
  }
  return c;
}

std::string WriteFactor(int n, const CycleFactor& f) {
  std::ostringstream out;
  out << "FACTOR 1 " << n << ' ' << f.cycles.size() << '\n';
  for (const auto& cycle : f.cycles) {
    out << cycle.size();
    AppendList(out, cycle);
    out << '\n';
  }
  return out.str();
}

CycleFactor ParseFactor(std::string_view text) {
  const auto lines = Tokenize(text);
  ExpectHeader(lines, "FACTOR", 4);
  const int n = ToInt(lines[0][2]);
  const int t = ToInt(lines[0][3]);
  if (static_cast<int>(lines.size()) - 1 != t) {
    throw ParseError("FACTOR header count does not match body");
  }
  CycleFactor f;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int len = ToInt(lines[i][0]);
    auto cycle = VertexList(lines[i], 1, n);
    if (static_cast<int>(cycle.size()) != len) {
      throw ParseError("FACTOR cycle length mismatch");
    }
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

std::string WriteEmbedding(const std::vector<Vertex>& image) {
  std::ostringstream out;
  out << "EMBED 1 " << image.size();
  AppendList(out, image);
  out << '\n';
  return out.str();
}

std::string WriteCycles(int n, const std::vector<HamiltonCycle>& cycles) {
  std::ostringstream out;
  out << "CYCLES 1 " << n << ' ' << cycles.size() << '\n';
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.order.size(); ++i) {
      out << (i ? " " : "") << c.order[i];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<HamiltonCycle> ParseCycles(std::string_view text) {
  const auto lines = Tokenize(text);
  ExpectHeader(lines, "CYCLES", 4);
  const int n = ToInt(lines[0][2]);
  const int t = ToInt(lines[0][3]);
  if (static_cast<int>(lines.size()) - 1 != t) {
    throw ParseError("CYCLES header count does not match body");
  }
  std::vector<HamiltonCycle> cycles;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    cycles.push_back({VertexList(lines[i], 0, n)});
  }
  return cycles;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParams("cannot write '" + path + "'");
  out << contents;
}

}  // namespace hamdg
