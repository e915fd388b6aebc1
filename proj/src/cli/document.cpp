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

#include "remetrica/cli/document.hpp"

#include <fstream>

#include "remetrica/error.hpp"

namespace remetrica::cli {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::parse, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& node, const std::string& where) {
  if (!node.is_number()) fail(where, "expected a number");
  return node.get<double>();
}

std::vector<double> numbers(const json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(number(node[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json point_to_json(const Point& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

Point point_from_json(const json& node, const std::string& where) {
  try {
    return Point(numbers(node, where));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    fail(where, e.what());
  }
}

MapSpec map_from_json(const json& node, const std::string& where) {
  const json& type = field(node, "type", where);
  if (!type.is_string()) fail(where + ".type", "expected a string");
  const std::string kind = type.get<std::string>();
  try {
    if (kind == "affine") {
      const json& rows = field(node, "A", where);
      if (!rows.is_array()) fail(where + ".A", "expected an array of rows");
      std::vector<std::vector<double>> matrix;
      for (std::size_t r = 0; r < rows.size(); ++r)
        matrix.push_back(numbers(rows[r], where + ".A[" + std::to_string(r) + "]"));
      return MapSpec::affine(matrix, numbers(field(node, "b", where), where + ".b"));
    }
    if (kind == "power") return MapSpec::power(number(field(node, "p", where), where + ".p"));
    if (kind == "clamp") return MapSpec::clamp();
    if (kind == "compose")
      return MapSpec::compose(map_from_json(field(node, "outer", where), where + ".outer"),
                              map_from_json(field(node, "inner", where), where + ".inner"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    fail(where, e.what());
  }
  fail(where + ".type", "unknown map type \"" + kind + "\"");
}

json map_to_json(const MapSpec& map) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, MapSpec::Affine>) {
          json rows = json::array();
          for (std::size_t r = 0; r < n.dim; ++r)
            rows.push_back(std::vector<double>(n.matrix.begin() + r * n.dim, n.matrix.begin() + (r + 1) * n.dim));
          return {{"type", "affine"}, {"A", rows}, {"b", n.offset}};
        } else if constexpr (std::is_same_v<T, MapSpec::Power>) {
          return {{"type", "power"}, {"p", n.exponent}};
        } else if constexpr (std::is_same_v<T, MapSpec::Clamp>) {
          return {{"type", "clamp"}};
        } else {
          return {{"type", "compose"}, {"outer", map_to_json(*n.outer)}, {"inner", map_to_json(*n.inner)}};
        }
      },
      map.node());
}

IfsDocument parse_document(const json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  const json& dom = field(doc, "domain", "document");
  const Point lower = point_from_json(field(dom, "lower", "domain"), "domain.lower");
  const Point upper = point_from_json(field(dom, "upper", "domain"), "domain.upper");
  if (auto it = dom.find("dim"); it != dom.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() != lower.dim())
      fail("domain.dim", "does not match the length of domain.lower");
  }
  std::optional<BoxDomain> box;
  try {
    box.emplace(lower, upper);
  } catch (const Error& e) {
    fail("domain", e.what());
  }

  std::string metric = "euclidean";
  if (auto it = doc.find("metric"); it != doc.end()) {
    if (!it->is_string()) fail("metric", "expected a string");
    metric = it->get<std::string>();
  }
  std::optional<MetricSpace> space;
  if (metric == "euclidean") {
    space = MetricSpace::euclidean(*box);
  } else if (metric == "normalized-euclidean") {
    space = MetricSpace::normalized_euclidean(*box);
  } else {
    fail("metric", "unknown metric \"" + metric + "\"");
  }

  const json& maps = field(doc, "maps", "document");
  if (!maps.is_array() || maps.empty()) fail("maps", "expected a nonempty array");
  IfsDocument out{*space, {}};
  for (std::size_t i = 0; i < maps.size(); ++i) out.maps.push_back(map_from_json(maps[i], "maps[" + std::to_string(i) + "]"));
  return out;
}

json document_to_json(const MetricSpace& space, const std::vector<MapSpec>& maps) {
  json out;
  out["domain"] = {{"dim", space.dim()},
                   {"lower", point_to_json(space.domain().lower())},
                   {"upper", point_to_json(space.domain().upper())}};
  out["metric"] = to_string(space.base());
  out["maps"] = json::array();
  for (const MapSpec& m : maps) out["maps"].push_back(map_to_json(m));
  return out;
}

Ifs load_ifs(const json& doc, std::size_t grid_points_per_axis) {
  IfsDocument parsed = parse_document(doc);
  return Ifs(std::move(parsed.space), std::move(parsed.maps), grid_points_per_axis);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

Ifs load_ifs_file(const std::string& path, std::size_t grid_points_per_axis) {
  return load_ifs(read_json_file(path), grid_points_per_axis);
}

std::string canonical_dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace remetrica::cli
