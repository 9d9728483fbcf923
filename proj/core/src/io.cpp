// Copyright 2026 The Authors.
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

#include "bcd/io.hpp"

#include <charconv>
#include <cmath>
#include <string_view>
#include <system_error>

#include "bcd/errors.hpp"

namespace bcd {
namespace {

using nlohmann::json;

double RealFromJson(const json& j, std::string_view what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return ParseReal(j.get<std::string>());
  throw InputError(std::string(what) + " must be a number");
}

std::vector<double> RealsFromJson(const json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(RealFromJson(x, what));
  return out;
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

double ParseReal(const std::string& text) {
  const std::string_view s = Trim(text);
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(x)) {
    throw InputError("not a finite real: \"" + text + "\"");
  }
  return x;
}

std::string FormatReal(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

json SubsetToJson(Subset s) {
  json out = json::array();
  for (int i : ToIndices(s)) out.push_back(i);
  return out;
}

Subset SubsetFromJson(const json& j, int n) {
  if (!j.is_array()) throw InputError("subset must be an index array");
  Subset s = kEmptySet;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw InputError("subset entries must be integers");
    const int i = x.get<int>();
    if (i < 0 || i >= n) {
      throw InputError("agent " + std::to_string(i) + " out of range");
    }
    s = With(s, i);
  }
  return s;
}

json ExtendedRealToJson(ExtendedReal x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

json SetFunctionToJson(const SetFunction& f) {
  json out;
  if (const auto* a = f.additive()) {
    out = {{"type", "additive"}, {"values", a->values}};
  } else if (const auto* x = f.xos()) {
    out = {{"type", "xos"}, {"clauses", x->clauses}};
  } else {
    out = {{"type", "table"}, {"values", f.table()->values}};
  }
  return out;
}

SetFunction SetFunctionFromJson(const json& j, int n) {
  const json& type = Field(j, "type");
  if (!type.is_string()) throw InputError("reward type must be a string");
  const std::string t = type.get<std::string>();
  SetFunction f = [&] {
    if (t == "additive") {
      return SetFunction::FromAdditive(RealsFromJson(Field(j, "values"), "values"));
    }
    if (t == "xos") {
      const json& cl = Field(j, "clauses");
      if (!cl.is_array()) throw InputError("clauses must be an array");
      std::vector<std::vector<double>> clauses;
      for (const json& c : cl) clauses.push_back(RealsFromJson(c, "clause"));
      return SetFunction::FromXos(std::move(clauses), n);
    }
    if (t == "table") {
      return SetFunction::FromTable(RealsFromJson(Field(j, "values"), "values"));
    }
    throw InputError("unknown reward type \"" + t + "\"");
  }();
  if (f.num_agents() != n) {
    throw InputError("reward covers " + std::to_string(f.num_agents()) +
                     " agents, instance has " + std::to_string(n));
  }
  return f;
}

json InstanceToJson(const Instance& inst) {
  return {{"n", inst.num_agents()},
          {"costs", inst.costs()},
          {"reward", SetFunctionToJson(inst.reward())}};
}

Instance InstanceFromJson(const json& j) {
  try {
    std::vector<double> costs = RealsFromJson(Field(j, "costs"), "costs");
    const int n = static_cast<int>(costs.size());
    if (j.contains("n")) {
      const json& jn = j.at("n");
      if (!jn.is_number_integer() || jn.get<int>() != n) {
        throw InputError("\"n\" disagrees with the cost vector");
      }
    }
    return Instance(std::move(costs), SetFunctionFromJson(Field(j, "reward"), n));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

json ObjectiveToJson(const Objective& obj) {
  switch (obj.kind()) {
    case Objective::Kind::kReward: return {{"type", "reward"}};
    case Objective::Kind::kProfit: return {{"type", "profit"}};
    case Objective::Kind::kWelfare: return {{"type", "welfare"}};
    case Objective::Kind::kConvex: break;
  }
  json weights = json::array();
  json parts = json::array();
  for (const auto& [w, o] : obj.components()) {
    weights.push_back(w);
    parts.push_back(ObjectiveToJson(o));
  }
  return {{"type", "convex"}, {"weights", weights}, {"components", parts}};
}

Objective ObjectiveFromJson(const json& j) {
  if (j.is_string()) return ParseObjective(j.get<std::string>());
  const json& type = Field(j, "type");
  if (!type.is_string()) throw InputError("objective type must be a string");
  const std::string t = type.get<std::string>();
  if (t != "convex") return ParseObjective(t);
  const std::vector<double> weights = RealsFromJson(Field(j, "weights"), "weights");
  const json& parts = Field(j, "components");
  if (!parts.is_array() || parts.size() != weights.size()) {
    throw InputError("convex objective needs one component per weight");
  }
  std::vector<std::pair<double, Objective>> terms;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    terms.emplace_back(weights[k], ObjectiveFromJson(parts[k]));
  }
  return Objective::Convex(std::move(terms));
}

Objective ParseObjective(const std::string& text) {
  const std::string_view s = Trim(text);
  if (s == "reward") return Objective::Reward();
  if (s == "profit") return Objective::Profit();
  if (s == "welfare") return Objective::Welfare();
  if (!s.empty() && s.front() == '{') {
    try {
      return ObjectiveFromJson(json::parse(s));
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed objective: ") + e.what());
    }
  }
  // convex(w*name,w*name,...), the format produced by Objective::name().
  constexpr std::string_view kPrefix = "convex(";
  if (s.starts_with(kPrefix) && s.ends_with(")")) {
    std::string_view body = s.substr(kPrefix.size(),
                                     s.size() - kPrefix.size() - 1);
    std::vector<std::pair<double, Objective>> terms;
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      const std::string_view term = body.substr(0, comma);
      const std::size_t star = term.find('*');
      if (star == std::string_view::npos) break;
      terms.emplace_back(ParseReal(std::string(term.substr(0, star))),
                         ParseObjective(std::string(term.substr(star + 1))));
      body = comma == std::string_view::npos ? std::string_view()
                                             : body.substr(comma + 1);
    }
    if (!terms.empty()) return Objective::Convex(std::move(terms));
  }
  throw InputError("unknown objective \"" + text + "\"");
}

json ToJson(const SolveResult& r) {
  return {{"optimum", SubsetToJson(r.optimum)},
          {"value", r.value},
          {"payment", ExtendedRealToJson(r.payment)},
          {"enumerated", r.enumerated}};
}

json ToJson(const DownsizeResult& r) {
  return {{"subset", SubsetToJson(r.subset)},
          {"payment_before", ExtendedRealToJson(r.payment_before)},
          {"payment_after", ExtendedRealToJson(r.payment_after)},
          {"objective_before", r.objective_before},
          {"objective_after", r.objective_after},
          {"singleton_exit", r.singleton_exit}};
}

json ToJson(const ReductionOutcome& r) {
  return {{"candidate", SubsetToJson(r.candidate)},
          {"candidate_value", r.candidate_value},
          {"guarantee_factor", r.guarantee_factor},
          {"budget_used", ExtendedRealToJson(r.budget_used)},
          {"path", PathName(r.path)}};
}

json ToJson(const PofReport& r) {
  json out = {{"max_at_B", r.max_at_big_b},
              {"max_at_b", r.max_at_b},
              {"bound_kind", BoundKindName(r.bound_kind)}};
  out["ratio"] = r.ratio ? json(*r.ratio) : json("undefined");
  out["theoretical_bound"] = std::isfinite(r.theoretical_bound)
                                 ? json(r.theoretical_bound)
                                 : json("inf");
  return out;
}

json ToJson(const FunctionClasses& c) {
  return {{"monotone", c.is_monotone},
          {"submodular", c.is_submodular},
          {"subadditive", c.is_subadditive}};
}

}  // namespace bcd
