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

#ifndef BCD_IO_HPP_
#define BCD_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "bcd/downsizing.hpp"
#include "bcd/frugality.hpp"
#include "bcd/model.hpp"
#include "bcd/objective.hpp"
#include "bcd/reductions.hpp"
#include "bcd/solvers.hpp"

namespace bcd {

// JSON encodings. Reals are written as JSON numbers with round-trip precision;
// on input both numbers and decimal strings ("0.25") are accepted. Subsets
// are sorted index arrays.
//
//   Instance:  {"n": 3, "costs": [...],
//               "reward": {"type": "additive"|"xos"|"table",
//                          "values": [...] | "clauses": [[...], ...]}}
//   Objective: {"type": "reward"|"profit"|"welfare"|"convex",
//               "weights": [...], "components": [...]}

nlohmann::json SubsetToJson(Subset s);
Subset SubsetFromJson(const nlohmann::json& j, int n);

nlohmann::json ExtendedRealToJson(ExtendedReal x);  // "inf" when infinite

nlohmann::json SetFunctionToJson(const SetFunction& f);
SetFunction SetFunctionFromJson(const nlohmann::json& j, int n);

nlohmann::json InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const nlohmann::json& j);

nlohmann::json ObjectiveToJson(const Objective& obj);
Objective ObjectiveFromJson(const nlohmann::json& j);
// "reward" | "profit" | "welfare" or an inline JSON object.
Objective ParseObjective(const std::string& text);

nlohmann::json ToJson(const SolveResult& r);
nlohmann::json ToJson(const DownsizeResult& r);
nlohmann::json ToJson(const ReductionOutcome& r);
nlohmann::json ToJson(const PofReport& r);
nlohmann::json ToJson(const FunctionClasses& c);

// Strict decimal parse of a real; throws InputError.
double ParseReal(const std::string& text);

// Shortest text that reads back to the same double.
std::string FormatReal(double x);

}  // namespace bcd

#endif  // BCD_IO_HPP_
