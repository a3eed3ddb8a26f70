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


#include "hamdg/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hamdg/conditions.h"
#include "hamdg/constructions.h"
#include "hamdg/decomp.h"
#include "hamdg/errors.h"
#include "hamdg/expander.h"
#include "hamdg/graphcore.h"
#include "hamdg/io.h"
#include "hamdg/rng.h"
#include "hamdg/solvers.h"

namespace hamdg {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kExperimentKey = 0xe8e7;

std::string Padded(int v, int width = 2) {
  std::string s = std::to_string(v);
  return std::string(std::max(0, width - static_cast<int>(s.size())), '0') + s;
}

std::string Str(const Fraction& f) { return ToString(f); }

std::string Str(const BigRational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::vector<int> SizesOr(const ExperimentConfig& c, std::vector<int> fallback) {
  return c.sizes.empty() ? fallback : c.sizes;
}

SearchOptions Search(const ExperimentConfig& c) {
  return {c.budget ? c.budget : DefaultBudget()};
}

// Times `body` when requested and stores the result on every record it adds.
void Timed(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows,
           const std::function<void()>& body) {
  const std::size_t first = rows.size();
  const auto start = std::chrono::steady_clock::now();
  body();
  if (!c.timing) return;
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  for (std::size_t i = first; i < rows.size(); ++i) rows[i].wall_ms = ms;
}

ExperimentRecord Record(std::string id, std::string family, Json params, std::uint64_t seed,
                        std::string operation) {
  ExperimentRecord r;
  r.id = std::move(id);
  r.family = std::move(family);
  r.params = std::move(params);
  r.seed = seed;
  r.operation = std::move(operation);
  return r;
}

void Kelly(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {3, 5, 7})) {
    Timed(c, rows, [&] {
      ExperimentRecord r = Record("kelly_n" + Padded(n), "regular_tournaments_all",
                                  {{"n", n}}, c.seed, "decompose_exact");
      int total = 0, decomposed = 0, validated = 0;
      std::set<std::size_t> sizes;
      ForEachRegularTournament(n, [&](const Digraph& g) {
        ++total;
        const auto d = DecomposeExact(g, EdgeSemantics::kArcs, Search(c));
        if (!d) return;
        ++decomposed;
        validated += Validate(*d, g).holds;
        sizes.insert(d->cycles.size());
      });
      r.metrics["tournaments"] = total;
      r.metrics["decomposed"] = decomposed;
      r.metrics["validated"] = validated;
      r.metrics["cycles"] = sizes.size() == 1 ? Json(*sizes.begin()) : Json("mixed");
      r.metrics["expected_cycles"] = (n - 1) / 2;
      rows.push_back(std::move(r));
    });
  }
}

void Tillson(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {3, 4, 5, 6})) {
    Timed(c, rows, [&] {
      const SearchOptions search = Search(c);
      ExperimentRecord r = Record("tillson_n" + Padded(n), "complete_digraph", {{"n", n}},
                                  c.seed, "decompose_exact");
      r.metrics["budget"] = search.node_budget;
      const Digraph g = CompleteDigraph(n);
      try {
        const auto d = DecomposeExact(g, EdgeSemantics::kArcs, search);
        r.metrics["outcome"] = d ? "decomposed" : "none";
        r.metrics["cycles"] = d ? static_cast<int>(d->cycles.size()) : 0;
        r.metrics["valid"] = d ? Validate(*d, g).holds : false;
      } catch (const BudgetExceeded&) {
        r.metrics["outcome"] = "budget";
      }
      rows.push_back(std::move(r));
    });
  }
}

void WaleckiRows(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25})) {
    Timed(c, rows, [&] {
      ExperimentRecord r =
          Record("walecki_n" + Padded(n), "complete_graph", {{"n", n}}, c.seed, "walecki");
      const Decomposition d = Walecki(n);
      r.metrics["cycles"] = d.cycles.size();
      r.metrics["expected_cycles"] = (n - 1) / 2;
      r.metrics["valid"] = Validate(d, CompleteGraph(n)).holds;
      rows.push_back(std::move(r));
    });
  }
}

void CoverMetrics(ExperimentRecord& r, const Digraph& g, const ExperimentConfig& c, bool tournament) {
  CoverOptions opts;
  opts.matching_cap = c.matching_cap;
  opts.seed = c.seed;
  opts.search = Search(c);
  try {
    const CoverResult res = tournament ? CoverTournament(g, opts) : CoverRegularGraph(g, opts);
    r.metrics["outcome"] = "covered";
    r.metrics["size"] = res.cover.cycles.size();
    r.metrics["benchmark"] = CoverBenchmark(g.num_vertices(), c.xi);
    r.metrics["xi"] = Str(c.xi);
    r.metrics["extracted"] = res.stats.extracted;
    r.metrics["leftover"] = res.stats.leftover;
    r.metrics["colors"] = res.stats.colors;
    r.metrics["matchings"] = res.stats.matchings;
    r.metrics["exact"] = res.stats.exact;
    r.metrics["valid"] = Validate(res.cover, g).holds;
  } catch (const CoverFailure&) {
    r.metrics["outcome"] = "cover_failure";
  }
}

void CoverTournamentRows(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {5, 7, 9, 11, 13, 15})) {
    Timed(c, rows, [&] {
      ExperimentRecord r = Record("cover_tournament_n" + Padded(n), "circulant", {{"n", n}},
                                  c.seed, "cover_tournament");
      CoverMetrics(r, CirculantTournament(n), c, true);
      rows.push_back(std::move(r));
    });
  }
}

void CoverRegularRows(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {3, 5, 7, 9, 11, 13, 15})) {
    Timed(c, rows, [&] {
      ExperimentRecord r = Record("cover_regular_complete_n" + Padded(n), "complete_graph",
                                  {{"n", n}}, c.seed, "cover_regular_graph");
      CoverMetrics(r, CompleteGraph(n), c, false);
      rows.push_back(std::move(r));
    });
  }
  const int samples = c.samples ? c.samples : 5;
  for (int d : {7, 8}) {
    for (int s = 0; s < samples; ++s) {
      Timed(c, rows, [&] {
        const std::uint64_t seed = c.seed + s;
        ExperimentRecord r =
            Record("cover_regular_random_n12_d" + std::to_string(d) + "_s" + Padded(s, 3),
                   "random_regular", {{"n", 12}, {"d", d}}, seed, "cover_regular_graph");
        CoverMetrics(r, RandomRegularGraph(12, d, seed), c, false);
        rows.push_back(std::move(r));
      });
    }
  }
}

void Camion(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {3, 4, 5, 6})) {
    Timed(c, rows, [&] {
      ExperimentRecord r = Record("camion_n" + Padded(n), "tournaments_all", {{"n", n}}, c.seed,
                                  "strong_vs_hamilton");
      int total = 0, strong = 0, hamiltonian = 0, pancyclic = 0, exceptions = 0;
      ForEachTournament(n, [&](const Digraph& g) {
        ++total;
        const bool s = IsStronglyConnected(g);
        const bool h = FindHamiltonCycle(g, Search(c)).has_value();
        const bool p = s && IsPancyclic(g, Search(c)).verdict.holds;
        strong += s;
        hamiltonian += h;
        pancyclic += p;
        exceptions += (s != h) || (s && !p);
      });
      r.metrics["tournaments"] = total;
      r.metrics["strong"] = strong;
      r.metrics["hamiltonian"] = hamiltonian;
      r.metrics["pancyclic"] = pancyclic;
      r.metrics["exceptions"] = exceptions;
      rows.push_back(std::move(r));
    });
  }
}

void Counting(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {3, 4, 5, 6})) {
    Timed(c, rows, [&] {
      ExperimentRecord r = Record("counting_n" + Padded(n), "tournaments_all", {{"n", n}},
                                  c.seed, "count_hamilton");
      std::uint64_t total = 0, max_paths = 0, max_cycles = 0, sum_paths = 0, below = 0;
      ForEachTournament(n, [&](const Digraph& g) {
        const CountReport rep = CountHamilton(g);
        ++total;
        sum_paths += rep.hamilton_paths;
        max_paths = std::max(max_paths, rep.hamilton_paths);
        max_cycles = std::max(max_cycles, rep.hamilton_cycles);
        below += rep.hamilton_paths < n * rep.hamilton_cycles;
      });
      r.metrics["tournaments"] = total;
      r.metrics["max_paths"] = max_paths;
      r.metrics["max_cycles"] = max_cycles;
      r.metrics["mean_paths"] = Str(Fraction(sum_paths, total));
      r.metrics["path_reference"] = Str(PathReference(n));
      r.metrics["paths_below_n_cycles"] = below;
      rows.push_back(std::move(r));
    });
  }
}

void HavetThomasse(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  const int samples = c.samples ? c.samples : 100;
  for (int n : SizesOr(c, {8})) {
    for (int s = 0; s < samples; ++s) {
      Timed(c, rows, [&] {
        const std::uint64_t seed = Rng(c.seed, kExperimentKey).Split(s).Next();
        ExperimentRecord r =
            Record("havet_thomasse_n" + Padded(n) + "_s" + Padded(s, 3), "random_tournament",
                   {{"n", n}}, seed, "oriented_hamilton_paths");
        const Digraph g = RandomTournament(n, seed);
        const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
        std::uint64_t realized = 0;
        for (std::uint64_t mask = 0; mask < patterns; ++mask) {
          const OrientationPattern p = OrientationPattern::FromMask(n - 1, mask);
          const auto order = OrientedHamiltonPath(g, p, Search(c));
          realized += order && RealizesPattern(g, *order, p, false);
        }
        r.metrics["patterns"] = patterns;
        r.metrics["realized"] = realized;
        rows.push_back(std::move(r));
      });
    }
  }
}

// Oriented trees on k vertices, one per isomorphism class.
std::vector<Digraph> OrientedTrees(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.push_back({i, j});
  }
  std::vector<int> perm(k);
  std::set<std::vector<Arc>> seen;
  std::vector<Digraph> trees;
  std::uint64_t codes = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) codes *= 3;
  for (std::uint64_t code = 0; code < codes; ++code) {
    Digraph t(k);
    std::uint64_t x = code;
    for (const auto& [i, j] : pairs) {
      if (x % 3 == 1) t.AddArc(i, j);
      if (x % 3 == 2) t.AddArc(j, i);
      x /= 3;
    }
    if (!IsOrientedTree(t)) continue;
    std::vector<Arc> best;
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
      std::vector<Arc> arcs = t.Relabel(perm).Arcs();
      std::sort(arcs.begin(), arcs.end());
      if (best.empty() || arcs < best) best = arcs;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) trees.push_back(t);
  }
  return trees;
}

void Sumner(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int k : SizesOr(c, {3, 4})) {
    Timed(c, rows, [&] {
      const int n = 2 * k - 2;
      ExperimentRecord r = Record("sumner_k" + Padded(k), "tournaments_all",
                                  {{"k", k}, {"n", n}}, c.seed, "embed_trees");
      const std::vector<Digraph> trees = OrientedTrees(k);
      std::uint64_t total = 0, embedded = 0, pairs = 0;
      ForEachTournament(n, [&](const Digraph& g) {
        ++total;
        for (const Digraph& t : trees) {
          ++pairs;
          const auto image = EmbedTree(g, t, Search(c));
          embedded += image && IsEmbedding(g, t, *image);
        }
      });
      r.metrics["tournaments"] = total;
      r.metrics["trees"] = trees.size();
      r.metrics["pairs"] = pairs;
      r.metrics["embedded"] = embedded;
      rows.push_back(std::move(r));
    });
  }
}

void ExpanderRows(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  for (int n : SizesOr(c, {11, 12, 13, 14, 15, 16})) {
    Timed(c, rows, [&] {
      const bool odd = n % 2 == 1;
      ExperimentRecord r = Record("expander_n" + Padded(n), odd ? "circulant" : "near_regular",
                                  {{"n", n}, {"nu", Str(c.nu)}, {"tau", Str(c.tau)}}, c.seed,
                                  "robust_outexpander_exact");
      const Digraph g = odd ? CirculantTournament(n) : NearRegularTournament(n);
      const Verdict v = IsRobustOutexpander(g, c.nu, c.tau);
      r.metrics["holds"] = v.holds;
      if (!v.holds) r.metrics["witness"] = ToText(v);
      rows.push_back(std::move(r));
    });
  }
}

struct Base {
  std::string name;
  Digraph r;
  CycleFactor f;
};

std::vector<Base> BlowupBases() {
  return {{"triangle", DirectedCycle(3), {{{0, 1, 2}}}},
          {"complete3", CompleteDigraph(3), {{{0, 1, 2}}}},
          {"pentagon", DirectedCycle(5), {{{0, 1, 2, 3, 4}}}},
          {"circulant5", CirculantTournament(5), {{{0, 1, 2, 3, 4}}}}};
}

void BlowupRows(const ExperimentConfig& c, std::vector<ExperimentRecord>& rows) {
  const int samples = c.samples ? c.samples : 20;
  const std::vector<Base> bases = BlowupBases();
  for (int s = 0; s < samples; ++s) {
    Timed(c, rows, [&] {
      const Base& base = bases[s % bases.size()];
      const int m = s % 2 ? 7 : 5;
      const std::uint64_t seed = c.seed + s;
      const BlowupSpec spec{m, s % 3 == 2 ? 0.9 : 1.0, s % 4, 3, seed};
      ExperimentRecord r = Record(
          "blowup_s" + Padded(s, 3), base.name,
          {{"m", m}, {"density", spec.pair_density}, {"exceptional", spec.exceptional}}, seed,
          "assemble_hamilton");
      try {
        const PipelineResult p =
            RunBlowupPipeline(base.r, base.f, spec, {m, Fraction(2 * spec.exceptional)});
        int fallbacks = 0;
        for (const MergeStep& step : p.assembly.trace.merges) fallbacks += step.exact_fallback;
        r.metrics["outcome"] = "hamiltonian";
        r.metrics["n"] = p.blowup.graph.num_vertices();
        r.metrics["walk_segments"] = p.walk.entries.size();
        r.metrics["fixed_arcs"] = p.assembly.trace.fixed_arcs.size();
        r.metrics["initial_cycles"] = p.assembly.trace.initial_factor.cycles.size();
        r.metrics["exact_fallbacks"] = fallbacks;
        r.metrics["valid"] = IsHamiltonCycle(p.blowup.graph, p.assembly.cycle);
      } catch (const MatchingFailure& e) {
        r.metrics["outcome"] = "matching_failure";
      } catch (const MergeFailure& e) {
        r.metrics["outcome"] = "merge_failure";
      }
      rows.push_back(std::move(r));
    });
  }
}

using ExperimentFn = void (*)(const ExperimentConfig&, std::vector<ExperimentRecord>&);

const std::map<std::string, ExperimentFn>& Experiments() {
  static const std::map<std::string, ExperimentFn> kAll = {
      {"blowup", BlowupRows},
      {"camion", Camion},
      {"counting", Counting},
      {"cover_regular", CoverRegularRows},
      {"cover_tournament", CoverTournamentRows},
      {"expander", ExpanderRows},
      {"havet_thomasse", HavetThomasse},
      {"kelly", Kelly},
      {"sumner", Sumner},
      {"tillson", Tillson},
      {"walecki", WaleckiRows},
  };
  return kAll;
}

std::string KeyValues(const Json& obj) {
  std::string s;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!s.empty()) s += ';';
    s += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return s;
}

}  // namespace

std::uint64_t DefaultBudget() {
  const char* env = std::getenv("HAMDG_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  std::uint64_t v = 0;
  const std::string_view text(env);
  for (char ch : text) {
    if (ch < '0' || ch > '9' || v > (~std::uint64_t{0} - 9) / 10) {
      throw BadParams("HAMDG_BUDGET must be a positive integer");
    }
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  if (v == 0) throw BadParams("HAMDG_BUDGET must be a positive integer");
  return v;
}

std::vector<std::string> ExperimentNames() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : Experiments()) names.push_back(name);
  return names;
}

std::vector<ExperimentRecord> RunExperiment(const std::string& name,
                                            const ExperimentConfig& config) {
  const auto it = Experiments().find(name);
  if (it == Experiments().end()) throw BadParams("unknown experiment '" + name + "'");
  std::vector<ExperimentRecord> rows;
  it->second(config, rows);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.id < b.id; });
  return rows;
}

std::string ToCsv(const std::vector<ExperimentRecord>& records) {
  const bool timed = std::any_of(records.begin(), records.end(),
                                 [](const auto& r) { return r.wall_ms.has_value(); });
  std::ostringstream out;
  out << "# schema=1\n";
  out << "id,family,params,seed,operation,metrics" << (timed ? ",wall_ms" : "") << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.id << ',' << r.family << ',' << KeyValues(r.params) << ',' << r.seed << ','
        << r.operation << ',' << KeyValues(r.metrics);
    if (timed) out << ',' << (r.wall_ms ? std::to_string(*r.wall_ms) : "");
    out << '\n';
  }
  return out.str();
}

std::string ToJsonLines(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  for (const ExperimentRecord& r : records) {
    Json j;
    j["schema"] = 1;
    j["id"] = r.id;
    j["family"] = r.family;
    j["params"] = r.params;
    j["seed"] = r.seed;
    j["operation"] = r.operation;
    j["metrics"] = r.metrics;
    if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
    out << j.dump() << '\n';
  }
  return out.str();
}

namespace {

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return ReadFile(path);
}

std::vector<Vertex> ParseList(const std::string& text) {
  std::vector<Vertex> vs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      vs.push_back(std::stoi(item, &used));
      if (used != item.size()) throw BadParams("");
    } catch (const std::exception&) {
      throw BadParams("malformed list entry '" + item + "'");
    }
  }
  return vs;
}

// "u:v,u:v" pairs.
Matching ParseArcs(const std::string& text) {
  Matching m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw BadParams("arcs are written u:v");
    const auto u = ParseList(item.substr(0, colon)), v = ParseList(item.substr(colon + 1));
    if (u.size() != 1 || v.size() != 1) throw BadParams("arcs are written u:v");
    m.arcs.push_back({u[0], v[0]});
  }
  return m;
}

Instance Generate(const std::string& family, int n, int k, int d, int m, int s, double p,
                  std::uint64_t seed) {
  const auto plain = [](Digraph g, GraphClass c) { return Instance{std::move(g), {}, c}; };
  if (family == "circulant") return plain(CirculantTournament(n), GraphClass::kTournament);
  if (family == "random_tournament") {
    return plain(RandomTournament(n, seed), GraphClass::kTournament);
  }
  if (family == "regular_tournament") {
    return plain(RandomRegularTournament(n, seed), GraphClass::kTournament);
  }
  if (family == "transitive") return plain(TransitiveTournament(n), GraphClass::kTournament);
  if (family == "near_regular") return plain(NearRegularTournament(n), GraphClass::kTournament);
  if (family == "complete") return plain(CompleteDigraph(n), GraphClass::kDigraph);
  if (family == "complete_graph") return plain(CompleteGraph(n), GraphClass::kUndirected);
  if (family == "cycle") return plain(DirectedCycle(n), GraphClass::kOriented);
  if (family == "undirected_cycle") return plain(UndirectedCycle(n), GraphClass::kUndirected);
  if (family == "random") return plain(RandomDigraph(n, p, seed), GraphClass::kDigraph);
  if (family == "random_regular") {
    return plain(RandomRegularGraph(n, d, seed), GraphClass::kUndirected);
  }
  if (family == "fig1") return Fig1(s);
  if (family == "fig2") return Fig2(n);
  if (family == "fig3") return Fig3Haggkvist(m);
  if (family == "fig4") return Fig4Square(m);
  if (family == "nw_extremal") return NwExtremal(n, k);
  if (family == "pancyclic_bipartite") return PancyclicBipartite(n);
  if (family == "two_regular") return TwoRegularTournaments(d);
  throw BadParams("unknown family '" + family + "'");
}

// Maps library exceptions to exit codes; anything unexpected is a usage
// error as well since it stems from the input.
int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CoverFailure& e) {
    err << "cover failure: " << e.what() << '\n';
    return kExitNegative;
  } catch (const MatchingFailure& e) {
    err << "matching failure: " << e.what() << '\n';
    return kExitNegative;
  } catch (const MergeFailure& e) {
    err << "merge failure: " << e.what() << '\n';
    return kExitNegative;
  } catch (const DemandOverload& e) {
    err << "demand overload: " << e.what() << '\n';
    return kExitNegative;
  } catch (const Disconnected& e) {
    err << "disconnected: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int EmitVerdict(const Verdict& v, bool json, std::ostream& out) {
  out << (json ? ToJson(v).dump() : ToText(v)) << '\n';
  return v.holds ? kExitOk : kExitNegative;
}

Fraction FractionFlag(const std::string& text) { return ParseFraction(text); }

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton cycles in digraphs: generators, checkers, solvers, covers"};
  app.require_subcommand(1);
  std::uint64_t budget = 0;
  std::string input = "-";
  bool json = false;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance in the exchange format");
  std::string family;
  int n = 0, k = 1, d = 1, m = 1, s = 2;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string parts_path;
  gen->add_option("--family", family, "generator family")->required();
  gen->add_option("--n", n, "number of vertices");
  gen->add_option("--k", k, "nw_extremal independent set size");
  gen->add_option("--d", d, "degree (random_regular) or half order (two_regular)");
  gen->add_option("--m", m, "fig3/fig4 parameter");
  gen->add_option("--s", s, "fig1 parameter");
  gen->add_option("--p", p, "arc probability (random)");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--parts", parts_path, "write the part map to this file");

  // check
  auto* check = app.add_subcommand("check", "evaluate a sufficient condition");
  std::string rule;
  check->add_option("--rule", rule, "rule name, e.g. meyniel or ckko(1/4)")->required();
  check->add_option("--input", input, "graph file or - for stdin");
  check->add_flag("--json", json, "JSON verdict");

  // solve
  auto* solve = app.add_subcommand("solve", "find a certificate");
  std::string task = "hamilton", arcs, seq, pattern, lengths, tree_path;
  int power = 2;
  solve->add_option("--task", task,
                    "hamilton|through|one_factor|pancyclic|power|kordered|oriented_cycle|"
                    "oriented_path|cycle_factor|embed|rotation");
  solve->add_option("--input", input, "graph file or - for stdin");
  solve->add_option("--arcs", arcs, "matching for 'through', as u:v,u:v");
  solve->add_option("--sequence", seq, "vertex list for 'kordered'");
  solve->add_option("--pattern", pattern, "F/B string for oriented tasks");
  solve->add_option("--lengths", lengths, "cycle lengths for 'cycle_factor'");
  solve->add_option("--tree", tree_path, "oriented tree file for 'embed'");
  solve->add_option("--k", power, "power for 'power'");
  solve->add_option("--budget", budget, "search node budget");

  // count
  auto* count = app.add_subcommand("count", "count Hamilton paths and cycles");
  count->add_option("--input", input, "graph file or - for stdin");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Hamilton decomposition");
  std::string method = "exact";
  int restarts = 3;
  decompose->add_option("--method", method, "exact|greedy|walecki");
  decompose->add_option("--input", input, "graph file or - for stdin");
  decompose->add_option("--n", n, "order for walecki");
  decompose->add_option("--restarts", restarts, "greedy relabelling restarts");
  decompose->add_option("--seed", seed, "greedy seed");
  decompose->add_option("--budget", budget, "search node budget");

  // cover
  auto* cover = app.add_subcommand("cover", "Hamilton cover of a regular tournament or graph");
  std::string xi_text = "1/4";
  int matching_cap = 0;
  cover->add_option("--input", input, "graph file or - for stdin");
  cover->add_option("--xi", xi_text, "benchmark slack xi in ceil((1/2 + xi) n)");
  cover->add_option("--matching-cap", matching_cap, "matching piece size (0: ceil(sqrt n))");
  cover->add_option("--seed", seed, "seed for restarts");
  cover->add_option("--budget", budget, "search node budget");

  // expander
  auto* expander = app.add_subcommand("expander", "robust expansion and blow-up pipeline");
  expander->require_subcommand(1);
  std::string nu_text = "1/20", tau_text = "1/5", eps_text = "1/5", dens_text = "1/2";
  std::string mode = "exact";
  int trials = 10'000;
  auto* ex_check = expander->add_subcommand("check", "robust (nu, tau)-outexpander test");
  ex_check->add_option("--input", input, "graph file or - for stdin");
  ex_check->add_option("--nu", nu_text, "nu");
  ex_check->add_option("--tau", tau_text, "tau");
  ex_check->add_option("--mode", mode, "exact|sampled");
  ex_check->add_option("--trials", trials, "sampled trials");
  ex_check->add_option("--seed", seed, "sampling seed");
  ex_check->add_flag("--json", json, "JSON verdict");
  auto* ex_pair = expander->add_subcommand("pair", "epsilon-regularity of the pair A -> B");
  std::string side_a, side_b;
  bool super = false;
  ex_pair->add_option("--input", input, "graph file or - for stdin");
  ex_pair->add_option("--a", side_a, "class A as a vertex list")->required();
  ex_pair->add_option("--b", side_b, "class B as a vertex list")->required();
  ex_pair->add_option("--eps", eps_text, "epsilon");
  ex_pair->add_option("--d", dens_text, "minimum degree fraction (with --super)");
  ex_pair->add_flag("--super", super, "also require super-regularity");
  ex_pair->add_option("--mode", mode, "exact|sampled");
  ex_pair->add_option("--trials", trials, "sampled trials");
  ex_pair->add_option("--seed", seed, "sampling seed");
  ex_pair->add_flag("--json", json, "JSON verdict");
  auto* ex_pipe = expander->add_subcommand("pipeline", "blow-up, closed walk, assembly");
  std::string base = "triangle", reduced_path, factor_path, cap_text;
  int exceptional = 0, degree = 3;
  double density = 1.0;
  m = 5;
  ex_pipe->add_option("--base", base, "triangle|complete3|pentagon|circulant5");
  ex_pipe->add_option("--reduced", reduced_path, "reduced digraph file (with --factor)");
  ex_pipe->add_option("--factor", factor_path, "1-factor file of the reduced digraph");
  ex_pipe->add_option("--m", m, "cluster size");
  ex_pipe->add_option("--exceptional", exceptional, "number of exceptional vertices");
  ex_pipe->add_option("--degree", degree, "exceptional in/out-neighbours per cluster");
  ex_pipe->add_option("--density", density, "arc probability inside each pair");
  ex_pipe->add_option("--cap", cap_text, "entry/exit cap per cluster (default m/10)");
  ex_pipe->add_option("--seed", seed, "seed");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "reproducible experiment tables");
  std::string name;
  std::vector<int> sizes;
  int samples = 0;
  bool jsonl = false, timing = false;
  experiment->add_option("name", name, "experiment name")->required();
  experiment->add_option("--n", sizes, "comma-separated sizes")->delimiter(',');
  experiment->add_option("--seed", seed, "seed");
  experiment->add_option("--samples", samples, "instances per size, where applicable");
  experiment->add_option("--budget", budget, "search node budget");
  experiment->add_option("--xi", xi_text, "benchmark slack for cover experiments");
  experiment->add_option("--matching-cap", matching_cap, "matching piece size");
  experiment->add_flag("--jsonl", jsonl, "JSON lines instead of CSV");
  experiment->add_flag("--timing", timing, "add wall time (not reproducible)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  return Guarded(err, [&]() -> int {
    const SearchOptions search{budget ? budget : DefaultBudget()};
    const auto load = [&] { return ParseGraph(ReadInput(input)); };
    if (gen->parsed()) {
      const Instance inst = Generate(family, n, k, d, m, s, p, seed);
      out << WriteAuto(inst.graph, inst.declared == GraphClass::kUndirected);
      if (!parts_path.empty()) WriteFile(parts_path, WriteParts(inst.parts));
      return kExitOk;
    }
    if (check->parsed()) return EmitVerdict(CheckRuleByName(load().graph, rule), json, out);
    if (solve->parsed()) {
      const Digraph g = load().graph;
      const auto cycle = [&](const std::optional<HamiltonCycle>& c) {
        if (!c) {
          out << "# none\n";
          return static_cast<int>(kExitNegative);
        }
        out << WriteCycle(*c);
        return static_cast<int>(kExitOk);
      };
      if (task == "hamilton") return cycle(FindHamiltonCycle(g, search));
      if (task == "through") return cycle(HamiltonCycleThrough(g, ParseArcs(arcs), search));
      if (task == "power") return cycle(KthPowerHamilton(g, power, search));
      if (task == "kordered") {
        const auto vs = ParseList(seq);
        return cycle(KOrderedHamilton(g, vs, search));
      }
      if (task == "rotation") return cycle(RotationExtension(g));
      if (task == "oriented_cycle" || task == "oriented_path") {
        const OrientationPattern pat = OrientationPattern::Parse(pattern);
        const auto order = task == "oriented_cycle" ? OrientedHamiltonCycle(g, pat, search)
                                                    : OrientedHamiltonPath(g, pat, search);
        if (!order) {
          out << "# none\n";
          return kExitNegative;
        }
        out << "ORDER 1 " << order->size();
        for (Vertex v : *order) out << ' ' << v;
        out << '\n';
        return kExitOk;
      }
      if (task == "one_factor" || task == "cycle_factor") {
        std::optional<CycleFactor> f;
        if (task == "one_factor") {
          f = OneFactor(g);
        } else {
          std::vector<int> ls;
          for (Vertex v : ParseList(lengths)) ls.push_back(v);
          f = DisjointCycleFactor(g, ls, search);
        }
        if (!f) {
          out << "# none\n";
          return kExitNegative;
        }
        out << WriteFactor(g.num_vertices(), Canonical(*f));
        return kExitOk;
      }
      if (task == "pancyclic") {
        const PancyclicityReport rep = IsPancyclic(g, search);
        for (const auto& c : rep.cycles) {
          out << "CYCLE 1 " << c.size();
          for (Vertex v : c) out << ' ' << v;
          out << '\n';
        }
        return EmitVerdict(rep.verdict, false, out);
      }
      if (task == "embed") {
        const Digraph tree = ParseGraph(ReadFile(tree_path)).graph;
        const auto image = EmbedTree(g, tree, search);
        if (!image) {
          out << "# none\n";
          return kExitNegative;
        }
        out << WriteEmbedding(*image);
        return kExitOk;
      }
      throw BadParams("unknown task '" + task + "'");
    }
    if (count->parsed()) {
      const Digraph g = load().graph;
      const CountReport rep = CountHamilton(g);
      out << "# schema=1\n";
      out << "n,hamilton_paths,hamilton_cycles,path_reference,cycle_reference\n";
      out << g.num_vertices() << ',' << rep.hamilton_paths << ',' << rep.hamilton_cycles << ','
          << Str(rep.f_reference) << ',' << Str(rep.g_reference) << '\n';
      return kExitOk;
    }
    if (decompose->parsed()) {
      if (method == "walecki") {
        const Decomposition dec = Walecki(n);
        out << WriteCycles(n, dec.cycles);
        return kExitOk;
      }
      const ParsedGraph pg = load();
      const EdgeSemantics sem = pg.undirected ? EdgeSemantics::kEdges : EdgeSemantics::kArcs;
      const int order = pg.graph.num_vertices();
      if (method == "exact") {
        const auto dec = DecomposeExact(pg.graph, sem, search);
        if (!dec) {
          out << "# none\n";
          return kExitNegative;
        }
        out << WriteCycles(order, dec->cycles);
        out << "# summary cycles=" << dec->cycles.size()
            << " valid=" << Validate(*dec, pg.graph).holds << '\n';
        return kExitOk;
      }
      if (method == "greedy") {
        const Extraction ex = GreedyExtractWithRestarts(pg.graph, sem, restarts, seed, search);
        out << WriteCycles(order, ex.cycles);
        const int left = static_cast<int>(HostItems(ex.leftover, sem).size());
        out << "# summary cycles=" << ex.cycles.size() << " leftover=" << left << '\n';
        return left == 0 ? kExitOk : kExitNegative;
      }
      throw BadParams("unknown method '" + method + "'");
    }
    if (cover->parsed()) {
      const ParsedGraph pg = load();
      CoverOptions opts;
      opts.matching_cap = matching_cap;
      opts.seed = seed;
      opts.search = search;
      const CoverResult res =
          pg.undirected ? CoverRegularGraph(pg.graph, opts) : CoverTournament(pg.graph, opts);
      const int order = pg.graph.num_vertices();
      out << WriteCycles(order, res.cover.cycles);
      out << "# summary size=" << res.cover.cycles.size()
          << " benchmark=" << CoverBenchmark(order, FractionFlag(xi_text))
          << " extracted=" << res.stats.extracted << " leftover=" << res.stats.leftover
          << " colors=" << res.stats.colors << " matchings=" << res.stats.matchings
          << " exact=" << res.stats.exact << " valid=" << Validate(res.cover, pg.graph).holds
          << '\n';
      return kExitOk;
    }
    if (expander->parsed()) {
      CheckOptions copts;
      if (mode == "sampled") {
        copts.mode = CheckMode::kSampled;
      } else if (mode != "exact") {
        throw BadParams("mode must be exact or sampled");
      }
      copts.trials = trials;
      copts.seed = seed;
      if (ex_check->parsed()) {
        return EmitVerdict(IsRobustOutexpander(load().graph, FractionFlag(nu_text),
                                               FractionFlag(tau_text), copts),
                           json, out);
      }
      if (ex_pair->parsed()) {
        const BipartitePair pair =
            BipartitePair::FromDigraph(load().graph, ParseList(side_a), ParseList(side_b));
        const RegularityReport rep =
            super ? SuperRegularPair(pair, FractionFlag(eps_text), FractionFlag(dens_text), copts)
                  : EpsilonRegularPair(pair, FractionFlag(eps_text), copts);
        out << "# density=" << Str(rep.density) << " exact=" << rep.exact << '\n';
        return EmitVerdict(rep.verdict, json, out);
      }
      Digraph r;
      CycleFactor f;
      if (!reduced_path.empty()) {
        r = ParseGraph(ReadFile(reduced_path)).graph;
        f = ParseFactor(ReadFile(factor_path));
      } else {
        bool found = false;
        for (const Base& b : BlowupBases()) {
          if (b.name == base) {
            r = b.r;
            f = b.f;
            found = true;
          }
        }
        if (!found) throw BadParams("unknown base '" + base + "'");
      }
      ClosedWalkOptions wopts;
      wopts.cluster_size = m;
      if (!cap_text.empty()) wopts.demand_cap = FractionFlag(cap_text);
      const PipelineResult res =
          RunBlowupPipeline(r, f, {m, density, exceptional, degree, seed}, wopts);
      const FactorIndex fi(r, f);
      for (std::size_t c = 0; c < res.pair_reports.size(); ++c) {
        out << "# pair " << c << "->" << fi.succ[c] << ' ' << ToText(res.pair_reports[c].verdict)
            << '\n';
      }
      for (std::size_t i = 0; i < res.demands.size(); ++i) {
        out << "# demand " << i << " vertex=" << res.blowup.exceptional[i]
            << " entry=" << res.demands[i].entry << " exit=" << res.demands[i].exit << '\n';
      }
      out << "# walk";
      for (std::size_t j = 0; j < res.walk.entries.size(); ++j) {
        out << ' ' << res.walk.entries[j];
        if (res.walk.via[j] >= 0) out << "/a" << res.walk.via[j];
      }
      out << '\n';
      out << "# fixed";
      for (const Arc& a : res.assembly.trace.fixed_arcs) out << ' ' << a.from << ':' << a.to;
      out << '\n';
      out << "# initial_cycles " << res.assembly.trace.initial_factor.cycles.size() << '\n';
      for (const MergeStep& st : res.assembly.trace.merges) {
        out << "# merge cluster=" << st.cluster << " j=" << st.j_vertices
            << " before=" << st.cycles_before << " after=" << st.cycles_after
            << " fallback=" << st.exact_fallback << '\n';
      }
      out << WriteCycle(res.assembly.cycle);
      return kExitOk;
    }
    ExperimentConfig cfg;
    cfg.sizes = sizes;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.samples = samples;
    cfg.xi = FractionFlag(xi_text);
    cfg.matching_cap = matching_cap;
    cfg.timing = timing;
    const auto rows = RunExperiment(name, cfg);
    out << (jsonl ? ToJsonLines(rows) : ToCsv(rows));
    return kExitOk;
  });
}

}  // namespace hamdg
