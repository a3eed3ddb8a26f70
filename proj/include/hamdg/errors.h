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

#ifndef HAMDG_ERRORS_H_
#define HAMDG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hamdg {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// More vertices than the bit-row representation supports.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

// A search hit its node, memory, or size cap. Never means "no solution".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

// The input graph is not of the class the operation requires.
class ClassMismatch : public Error {
 public:
  using Error::Error;
};

class NotAMatching : public Error {
 public:
  using Error::Error;
};

class ArcMissing : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Closed-walk construction: a cluster is used too often as entry/exit.
class DemandOverload : public Error {
 public:
  using Error::Error;
};

// No shifted walk exists between two clusters.
class Disconnected : public Error {
 public:
  using Error::Error;
};

// A per-cluster bipartite graph (or connecting-arc wiring) has no
// perfect matching.
class MatchingFailure : public Error {
 public:
  using Error::Error;
};

// The auxiliary merge digraph of some cluster has no Hamilton cycle.
class MergeFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hamdg

#endif  // HAMDG_ERRORS_H_
