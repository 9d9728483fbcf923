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

#ifndef BCD_TOOLS_MANIFEST_HPP_
#define BCD_TOOLS_MANIFEST_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace bcd::cli {

// 64-bit FNV-1a.
std::uint64_t Fnv1a(std::string_view bytes);
std::string HashTag(std::string_view bytes);  // "fnv1a64:<16 hex digits>"

// Sidecar written next to every output file as <out>.manifest.json. The data
// file itself never carries timestamps; they live here.
struct RunManifest {
  std::vector<std::string> command_line;
  std::map<std::string, std::string> instance_hashes;  // path -> hash tag
  std::optional<std::uint64_t> seed;
  std::string output_path;
  std::string output_hash;
  double wall_time_seconds = 0.0;

  nlohmann::json ToJson() const;
};

std::string ManifestPath(const std::string& output_path);

}  // namespace bcd::cli

#endif  // BCD_TOOLS_MANIFEST_HPP_
