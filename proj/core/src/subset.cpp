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

#include "bcd/subset.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "bcd/errors.hpp"

namespace bcd {

std::vector<int> ToIndices(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(Cardinality(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset FromIndices(std::span<const int> indices, int n) {
  Subset s = kEmptySet;
  for (int i : indices) {
    if (i < 0 || i >= n) {
      throw InputError("agent index " + std::to_string(i) +
                       " out of range for n=" + std::to_string(n));
    }
    if (Contains(s, i)) {
      throw InputError("duplicate agent index " + std::to_string(i));
    }
    s = With(s, i);
  }
  return s;
}

std::string FormatSubset(Subset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : ToIndices(s)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

Subset ParseSubset(const std::string& text, int n) {
  std::vector<int> indices;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = token.find_last_not_of(" \t");
    const std::string trimmed = token.substr(begin, end - begin + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(
        trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (ec != std::errc() || ptr != trimmed.data() + trimmed.size()) {
      throw InputError("bad agent index '" + trimmed + "'");
    }
    indices.push_back(value);
  }
  return FromIndices(indices, n);
}

}  // namespace bcd
