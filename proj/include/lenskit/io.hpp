// Copyright 2026 The lenskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON persistence of families, censuses and search traces, and SVG output.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lenskit/census.hpp"
#include "lenskit/generators.hpp"
#include "lenskit/geometry.hpp"

namespace lenskit {

using Json = nlohmann::ordered_json;

// {"circles": [{"cx", "cy", "r"}]} with exact rational strings. A circle whose
// radius is irrational carries "r2", its squared radius, instead of "r".
Json family_to_json(const Family& f);
// Throws InvalidInput on malformed documents or families that fail validation.
Family family_from_json(const Json& doc);

Family read_family_file(const std::filesystem::path& path);
void write_family_file(const std::filesystem::path& path, const Family& f);

Json pair_list_json(const std::vector<IndexPair>& pairs);
Json tangent_list_json(const std::vector<TangentPair>& pairs);
Json trace_record_json(const TraceRecord& r);

enum class Highlight { None, Lenses, Lunes, Graph };

// Deterministic SVG 1.1: stroked circles, filled digon faces or the centers
// graph on request. The y-axis points up.
std::string render_svg(const Family& f, const DigonCensus& census, Highlight highlight);

}  // namespace lenskit
