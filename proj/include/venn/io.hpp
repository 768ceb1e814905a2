// Copyright 2026 The vennreduce Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON diagram files.
//
//   venn-map:  {"format","version","curves","curve_of","edge_pairing",
//               "rotation","outer_dart","free_curves":[{"curve","host_dart","parent"}]}
//   venn-grid: {"format","version","dimension","surfaces","shape","rows"}
//
// Grid rows run along the last axis, one per combination of the other
// coordinates in index order, each a list of [sign string, run length].

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "venn/grid.hpp"
#include "venn/map.hpp"

namespace venn {

using Json = nlohmann::ordered_json;

inline constexpr int kFileVersion = 1;

using Diagram = std::variant<CombinatorialMap, GridDiagram>;

inline Json map_to_json(const CombinatorialMap& map) {
  Json j;
  j["format"] = "venn-map";
  j["version"] = kFileVersion;
  j["curves"] = map.curves;
  j["curve_of"] = map.curve_of;
  j["edge_pairing"] = map.pair;
  j["rotation"] = map.rotation;
  j["outer_dart"] = map.outer_dart;
  Json free = Json::array();
  for (const auto& f : map.free_curves) free.push_back({{"curve", f.curve}, {"host_dart", f.host_dart}, {"parent", f.parent}});
  j["free_curves"] = free;
  return j;
}

inline Json grid_to_json(const GridDiagram& g) {
  Json j;
  j["format"] = "venn-grid";
  j["version"] = kFileVersion;
  j["dimension"] = g.dimension();
  j["surfaces"] = g.surfaces();
  j["shape"] = g.shape();
  Json rows = Json::array();
  const std::size_t len = g.shape().back();
  for (std::size_t start = 0; start < g.cell_count(); start += len) {
    Json row = Json::array();
    std::size_t i = 0;
    while (i < len) {
      std::size_t k = i;
      while (k < len && g.label(start + k) == g.label(start + i)) ++k;
      row.push_back(Json::array({SignVector{g.label(start + i), g.surfaces()}.to_string(), k - i}));
      i = k;
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_field(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

inline void check_header(const Json& j, const char* format) {
  const auto tag = get_field<std::string>(j, "format");
  if (tag != format) throw FormatError("expected format " + std::string(format) + ", found " + tag);
  const int version = get_field<int>(j, "version");
  if (version != kFileVersion) throw FormatError("unsupported version " + std::to_string(version));
}

}  // namespace detail

inline CombinatorialMap map_from_json(const Json& j) {
  detail::check_header(j, "venn-map");
  CombinatorialMap map;
  map.curves = detail::get_field<std::vector<int>>(j, "curves");
  map.curve_of = detail::get_field<std::vector<int>>(j, "curve_of");
  map.pair = detail::get_field<std::vector<int>>(j, "edge_pairing");
  map.rotation = detail::get_field<std::vector<int>>(j, "rotation");
  map.outer_dart = detail::get_field<int>(j, "outer_dart");
  const Json& free = detail::field(j, "free_curves");
  if (!free.is_array()) throw FormatError("free_curves must be an array");
  for (const auto& f : free) {
    map.free_curves.push_back({detail::get_field<int>(f, "curve"), detail::get_field<int>(f, "host_dart"),
                               detail::get_field<int>(f, "parent")});
  }
  if (map.pair.size() != map.curve_of.size() || map.rotation.size() != map.curve_of.size()) {
    throw FormatError("curve_of, edge_pairing and rotation lengths differ");
  }
  return map;
}

inline GridDiagram grid_from_json(const Json& j) {
  detail::check_header(j, "venn-grid");
  const int dimension = detail::get_field<int>(j, "dimension");
  const int surfaces = detail::get_field<int>(j, "surfaces");
  const auto shape = detail::get_field<std::vector<std::size_t>>(j, "shape");
  if (dimension < 1 || static_cast<std::size_t>(dimension) != shape.size()) throw FormatError("dimension does not match shape");
  if (surfaces < 0 || surfaces > kMaxSurfaces) throw FormatError("surface count out of range");
  GridDiagram g;
  try {
    g = GridDiagram(surfaces, shape);
  } catch (const BudgetError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  const Json& rows = detail::field(j, "rows");
  const std::size_t len = shape.back();
  if (!rows.is_array() || rows.size() * len != g.cell_count()) throw FormatError("row count does not match shape");
  std::size_t cell = 0;
  for (const auto& row : rows) {
    std::size_t filled = 0;
    if (!row.is_array()) throw FormatError("grid row must be an array");
    for (const auto& run : row) {
      if (!run.is_array() || run.size() != 2 || !run[0].is_string() || !run[1].is_number_unsigned()) {
        throw FormatError("grid run must be [sign string, count]");
      }
      const auto sign = SignVector::parse(run[0].get<std::string>());
      if (sign.size != surfaces) throw FormatError("sign string length differs from surface count");
      const auto count = run[1].get<std::size_t>();
      if (count == 0 || filled + count > len) throw FormatError("grid run overflows its row");
      for (std::size_t k = 0; k < count; ++k) g.set_label(cell + filled + k, sign.bits);
      filled += count;
    }
    if (filled != len) throw FormatError("grid row shorter than the last axis");
    cell += len;
  }
  return g;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline Diagram diagram_from_json(const Json& j) {
  const auto tag = detail::get_field<std::string>(j, "format");
  if (tag == "venn-map") return map_from_json(j);
  if (tag == "venn-grid") return grid_from_json(j);
  throw FormatError("unknown format tag '" + tag + "'");
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline std::string to_text(const Diagram& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CombinatorialMap>) {
          return dump(map_to_json(x));
        } else {
          return dump(grid_to_json(x));
        }
      },
      d);
}

inline Diagram read_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return diagram_from_json(parse_json_text(buffer.str()));
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

inline void write_diagram(const std::string& path, const Diagram& d) { write_text(path, to_text(d)); }

}  // namespace venn
