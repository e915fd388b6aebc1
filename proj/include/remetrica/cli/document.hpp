/*
 * Copyright 2026 The Remetrica Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// JSON form of an IFS:
//
//   {
//     "domain": {"dim": 1, "lower": [0], "upper": [1]},
//     "metric": "euclidean" | "normalized-euclidean",
//     "maps": [ <map>, ... ]
//   }
//
// with map nodes
//   {"type": "affine", "A": [[...], ...], "b": [...]}
//   {"type": "power", "p": 0.5}
//   {"type": "clamp"}
//   {"type": "compose", "outer": <map>, "inner": <map>}

#include <string>
#include <vector>

#include <json.hpp>

#include "remetrica/maps.hpp"

namespace remetrica::cli {

using nlohmann::json;

struct IfsDocument {
  MetricSpace space;
  std::vector<MapSpec> maps;
};

// Throws Error(parse) naming the offending field, e.g. "maps[1].A".
MapSpec map_from_json(const json& node, const std::string& where);
json map_to_json(const MapSpec& map);

IfsDocument parse_document(const json& doc);
json document_to_json(const MetricSpace& space, const std::vector<MapSpec>& maps);

// Parses and runs self-map validation; violations surface as Error(self_map).
Ifs load_ifs(const json& doc, std::size_t grid_points_per_axis = Ifs::kDefaultValidationGrid);
Ifs load_ifs_file(const std::string& path, std::size_t grid_points_per_axis = Ifs::kDefaultValidationGrid);
json read_json_file(const std::string& path);

// Sorted keys, two-space indent, shortest round-trip numbers, trailing newline.
std::string canonical_dump(const json& value);

json point_to_json(const Point& p);
Point point_from_json(const json& node, const std::string& where);

}  // namespace remetrica::cli
