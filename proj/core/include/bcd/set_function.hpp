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

#ifndef BCD_SET_FUNCTION_HPP_
#define BCD_SET_FUNCTION_HPP_

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "bcd/subset.hpp"

namespace bcd {

// A set function over agents {0..n-1}, stored in one of three encodings.
//
//   Additive    f(S) = sum_{i in S} v_i
//   XosClauses  f(S) = max_j sum_{i in S} a_j[i]   (k clauses, each length n)
//   Table       f(S) = values[S]                   (2^n entries, bitmask index)
//
// Instances are immutable after construction and safe to share across
// threads.
class SetFunction {
 public:
  enum class Kind { kAdditive, kXos, kTable };

  struct Additive {
    std::vector<double> values;
  };
  struct XosClauses {
    std::vector<std::vector<double>> clauses;
  };
  struct Table {
    std::vector<double> values;
  };

  static SetFunction FromAdditive(std::vector<double> values);
  // `n` is needed when there are no clauses.
  static SetFunction FromXos(std::vector<std::vector<double>> clauses, int n);
  // values.size() must be a power of two no larger than 2^kEnumerationCap.
  static SetFunction FromTable(std::vector<double> values);

  int num_agents() const { return n_; }
  Kind kind() const;
  std::string_view kind_name() const;

  const Additive* additive() const { return std::get_if<Additive>(&rep_); }
  const XosClauses* xos() const { return std::get_if<XosClauses>(&rep_); }
  const Table* table() const { return std::get_if<Table>(&rep_); }

  // Value oracle. Throws InputError when S names an agent >= n.
  double Value(Subset s) const;

  // Demand oracle: a maximizer of f(S) - sum_{i in S} q_i. Among maximizers
  // (within 1e-12) the numerically smallest bitmask wins. XOS and additive
  // encodings are answered clause-wise; tables are scanned exhaustively.
  Subset Demand(std::span<const double> prices) const;

  // Exhaustive-scan demand on any encoding (n <= kEnumerationCap).
  Subset DemandByScan(std::span<const double> prices) const;

  // f(S) for every S, indexed by bitmask. n <= kEnumerationCap.
  std::vector<double> Materialize() const;

  // f restricted to `agents`, re-indexed so that the k-th smallest member of
  // `agents` becomes agent k.
  SetFunction Restrict(Subset agents) const;

  // Same function scaled by a non-negative factor.
  SetFunction Scaled(double factor) const;

  // Upper bound on max_S f(S) read off the encoding.
  double MaxValue() const;

 private:
  SetFunction(std::variant<Additive, XosClauses, Table> rep, int n)
      : rep_(std::move(rep)), n_(n) {}

  std::variant<Additive, XosClauses, Table> rep_;
  int n_ = 0;
};

// f(S) - f(S \ {i}). Throws InputError when i is not in S.
double Marginal(const SetFunction& f, Subset s, int i);

struct FunctionClasses {
  bool is_monotone = false;
  bool is_submodular = false;
  bool is_subadditive = false;
};

// Exhaustive check of the defining inequalities with tolerance kTolerance.
// Additive encodings short-circuit to all-true (when values are non-negative);
// every other encoding requires n <= cap.
FunctionClasses Classify(const SetFunction& f, int cap = kClassifyCap);

}  // namespace bcd

#endif  // BCD_SET_FUNCTION_HPP_
