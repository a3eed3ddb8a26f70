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


#include "hamdg/verdict.h"

#include <charconv>
#include <sstream>

#include "hamdg/errors.h"

namespace hamdg {

std::string ToString(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

namespace {

std::int64_t ParseInt64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw BadParams("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Fraction ParseFraction(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    throw BadParams("not a number: '" + std::string(whole) + "'");
  }
  Fraction r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseInt64(text.substr(0, slash), whole);
    const std::int64_t den = ParseInt64(text.substr(slash + 1), whole);
    if (den == 0) throw BadParams("zero denominator: '" + std::string(whole) + "'");
    r = Fraction(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15 || (int_part.empty() && frac_part.empty())) {
      throw BadParams("not a number: '" + std::string(whole) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const std::int64_t ip = int_part.empty() ? 0 : ParseInt64(int_part, whole);
    const std::int64_t fp = frac_part.empty() ? 0 : ParseInt64(frac_part, whole);
    if (ip < 0 || fp < 0) throw BadParams("not a number: '" + std::string(whole) + "'");
    r = Fraction(ip * den + fp, den);
  } else {
    r = Fraction(ParseInt64(text, whole));
  }
  return negative ? -r : r;
}

std::string_view ToString(WitnessKind k) {
  switch (k) {
    case WitnessKind::kVertex: return "vertex";
    case WitnessKind::kPair: return "pair";
    case WitnessKind::kIndex: return "index";
    case WitnessKind::kSet: return "set";
    case WitnessKind::kArc: return "arc";
    case WitnessKind::kSlack: return "slack";
    case WitnessKind::kReason: return "reason";
  }
  return "unknown";
}

nlohmann::json ToJson(const Verdict& v) {
  nlohmann::json j;
  j["rule"] = v.rule;
  j["holds"] = v.holds;
  if (v.witness) {
    const Witness& w = *v.witness;
    nlohmann::json wj;
    wj["kind"] = std::string(ToString(w.kind));
    wj["vertices"] = w.vertices;
    if (w.index >= 0) wj["index"] = w.index;
    wj["lhs"] = ToString(w.lhs);
    wj["rhs"] = ToString(w.rhs);
    if (!w.values.empty()) {
      std::vector<std::string> vals;
      for (const Fraction& f : w.values) vals.push_back(ToString(f));
      wj["values"] = vals;
    }
    if (!w.detail.empty()) wj["detail"] = w.detail;
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string ToText(const Verdict& v) {
  std::ostringstream out;
  out << v.rule << (v.holds ? " holds" : " fails");
  if (v.witness) {
    const Witness& w = *v.witness;
    out << " " << ToString(w.kind);
    if (!w.vertices.empty()) {
      out << " {";
      for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        out << (i ? "," : "") << w.vertices[i];
      }
      out << "}";
    }
    if (w.index >= 0) out << " i=" << w.index;
    out << " " << ToString(w.lhs) << " < " << ToString(w.rhs);
    if (!w.detail.empty()) out << " (" << w.detail << ")";
  }
  return out.str();
}

}  // namespace hamdg
