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

#include <gtest/gtest.h>

#include "hamdg/constructions.h"
#include "hamdg/errors.h"

namespace hamdg {
namespace {

TEST(Io, DigraphRoundTripIsByteIdentical) {
  const Digraph g = RandomDigraph(9, 0.4, 17);
  const std::string text = WriteDigraph(g);
  const ParsedGraph p = ParseGraph(text);
  EXPECT_FALSE(p.undirected);
  EXPECT_EQ(p.graph, g);
  EXPECT_EQ(WriteDigraph(p.graph), text);
}

TEST(Io, GraphFormatStoresEachEdgeOnce) {
  const Digraph g = Fig1(2).graph;
  const std::string text = WriteGraph(g);
  EXPECT_EQ(text.substr(0, text.find('\n')), "GRAPH 1 20 50");
  const ParsedGraph p = ParseGraph(text);
  EXPECT_TRUE(p.undirected);
  EXPECT_EQ(p.graph, g);
  EXPECT_EQ(WriteGraph(p.graph), text);
  EXPECT_THROW(WriteGraph(DirectedCycle(3)), ClassMismatch);
}

TEST(Io, ExactTextOfSmallDigraph) {
  EXPECT_EQ(WriteDigraph(DirectedCycle(3)), "DIGRAPH 1 3 3\n0 1\n1 2\n2 0\n");
}

TEST(Io, CommentsAndBlankLinesAreIgnored) {
  const auto p = ParseGraph("# a comment\nDIGRAPH 1 2 2\n\n0 1\n# x\n1 0\n");
  EXPECT_EQ(p.graph.num_arcs(), 2);
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_THROW(ParseGraph(""), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 2 2 1\n0 1\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 2 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 2 1\n1 1\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 2 1\n0 2\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 2 1\n0 -1\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 3 2\n0 1\n"), ParseError);
  EXPECT_THROW(ParseGraph("GRAPH 1 3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 2 1\n0 x\n"), ParseError);
  EXPECT_THROW(ParseGraph("TREE 1 2 1\n0 1\n"), ParseError);
  EXPECT_THROW(ParseGraph("DIGRAPH 1 65 0\n"), CapacityExceeded);
}

TEST(Io, PartsRoundTrip) {
  const Instance inst = Fig3Haggkvist(1);
  const std::string text = WriteParts(inst.parts);
  EXPECT_EQ(text, "PARTS 1 4\nA 0\nB 1 2\nC 3\nD 4 5 6\n");
  EXPECT_EQ(ParseParts(text), inst.parts);
}

TEST(Io, CertificateRoundTrips) {
  const HamiltonCycle c{{0, 2, 1, 3}};
  EXPECT_EQ(WriteCycle(c), "CYCLE 1 4 0 2 1 3\n");
  EXPECT_EQ(ParseCycle(WriteCycle(c)), c);
  const CycleFactor f{{{0, 1}, {2, 3, 4}}};
  EXPECT_EQ(WriteFactor(5, f), "FACTOR 1 5 2\n2 0 1\n3 2 3 4\n");
  EXPECT_EQ(ParseFactor(WriteFactor(5, f)), f);
  const std::vector<HamiltonCycle> cs{{{0, 1, 2}}, {{0, 2, 1}}};
  EXPECT_EQ(ParseCycles(WriteCycles(3, cs)), cs);
  EXPECT_EQ(WriteEmbedding({3, 1}), "EMBED 1 2 3 1\n");
  EXPECT_THROW(ParseCycle("CYCLE 1 3 0 1\n"), ParseError);
}

}  // namespace
}  // namespace hamdg
