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

#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "bcd/corpus.hpp"
#include "bcd/version.hpp"

namespace bcd::cli {

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string HashTag(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(Fnv1a(bytes)));
  return buf;
}

std::string ManifestPath(const std::string& output_path) {
  return output_path + ".manifest.json";
}

nlohmann::json RunManifest::ToJson() const {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));

  nlohmann::json j;
  j["tool"] = "bcd";
  j["tool_version"] = std::string(kVersion);
  j["corpus_version"] = kCorpusVersion;
  j["command_line"] = command_line;
  j["instance_hashes"] = instance_hashes;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["output"] = output_path;
  j["output_hash"] = output_hash;
  j["wall_time_seconds"] = wall_time_seconds;
  j["created_utc"] = stamp;
  return j;
}

}  // namespace bcd::cli
