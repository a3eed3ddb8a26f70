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


// Named vertex groups attached to generated instances (A/B/C/..., I/K/X).

#ifndef HAMDG_PARTS_H_
#define HAMDG_PARTS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamdg/digraph.h"

namespace hamdg {

struct Part {
  std::string name;
  std::vector<Vertex> vertices;
  bool operator==(const Part&) const = default;
};

// Parts in the order the generator declares them.
using PartMap = std::vector<Part>;

// Vertices of the named part; empty if absent.
inline const std::vector<Vertex>& PartVertices(const PartMap& parts,
                                               std::string_view name) {
  static const std::vector<Vertex> kEmpty;
  for (const Part& p : parts) {
    if (p.name == name) return p.vertices;
  }
  return kEmpty;
}

}  // namespace hamdg

#endif  // HAMDG_PARTS_H_
