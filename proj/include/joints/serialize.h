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

// JSON and CSV forms of the library's results. Keys keep insertion order so
// output is byte-stable; rationals are "p/q" strings.

#ifndef JOINTS_SERIALIZE_H_
#define JOINTS_SERIALIZE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "joints/affine.h"
#include "joints/analysis.h"
#include "joints/behrend.h"
#include "joints/checks.h"
#include "joints/construction.h"
#include "joints/planar.h"

namespace joints {

using Json = nlohmann::ordered_json;

Json ToJson(const BehrendSet& b);
Json ToJson(const CheckResult& r);
Json ToJson(const AxiomsReport& r);
Json ToJson(const PropertiesReport& r);
Json ToJson(const IncidenceReport& r);
Json ToJson(const AnalysisReport& r);

// {"N", "B", "points", "lines", "pruned_lines", "triple_points"}
Json ConstructionDump(const Construction& c);

struct LoadedDump {
  std::uint64_t N = 0;
  std::vector<std::uint64_t> B;
  Configuration config;
  std::uint64_t pruned_lines = 0;
  std::uint64_t triple_points = 0;
};

// Throws DomainError on a malformed dump.
LoadedDump LoadDump(const Json& j);

// {"k", "points", "lines", "joints"}; `full` adds coordinate and index lists.
Json Grid3dJson(const Grid3d& grid, std::size_t joints, bool full);

inline constexpr const char* kSweepColumns[] = {
    "N",          "B_size",          "E_size",          "L0",
    "L",          "joints",          "joints_over_L2",  "joints_over_L18",
    "planes_pruned", "E1",           "E2",              "triangles",
    "degenerate"};

std::string SweepCsv(std::span<const SweepRow> rows);
Json SweepJson(std::span<const SweepRow> rows, const mpq_class& eps);

}  // namespace joints

#endif  // JOINTS_SERIALIZE_H_
