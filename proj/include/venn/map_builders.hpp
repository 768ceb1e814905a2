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

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "venn/map.hpp"

namespace venn {

// Assembles a map from the cyclic vertex sequence of every crossing curve
// and an explicit counterclockwise rotation at every vertex.
//
// Arc j of a curve runs from seq[j] to seq[j+1]. Its forward dart leaves
// seq[j]; its backward dart leaves seq[j+1]. Darts are numbered per curve in
// ascending id order, two per arc.
class MapBuilder {
 public:
  struct HalfEdge {
    int curve = 0;
    int direction = +1;  // +1 leaves along the orientation, -1 against it
  };

  MapBuilder& curve(int id, std::vector<int> vertices) {
    if (vertices.empty()) throw PreconditionError("MapBuilder: curve " + std::to_string(id) + " has no vertices");
    sequences_[id] = std::move(vertices);
    return *this;
  }

  MapBuilder& rotation(int vertex, std::vector<HalfEdge> ccw) {
    rotations_[vertex] = std::move(ccw);
    return *this;
  }

  MapBuilder& outer(int curve, int arc, bool backward) {
    outer_ = {curve, arc, backward};
    return *this;
  }

  MapBuilder& free_curve(int id, int parent = 0) {
    free_.push_back({id, parent});
    return *this;
  }

  // Host every free curve on the face left of the given dart.
  MapBuilder& free_host(int curve, int arc, bool backward) {
    host_ = {curve, arc, backward};
    return *this;
  }

  int dart(int curve, int arc, bool backward) const {
    int base = 0;
    for (const auto& [id, seq] : sequences_) {
      const int len = static_cast<int>(seq.size());
      if (id == curve) {
        if (arc < 0 || arc >= len) throw PreconditionError("MapBuilder: arc out of range on curve " + std::to_string(curve));
        return base + 2 * arc + (backward ? 1 : 0);
      }
      base += 2 * len;
    }
    throw PreconditionError("MapBuilder: unknown curve " + std::to_string(curve));
  }

  CombinatorialMap build() const {
    CombinatorialMap map;
    std::vector<int> ids;
    for (const auto& [id, seq] : sequences_) ids.push_back(id);
    for (const auto& [id, parent] : free_) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw PreconditionError("MapBuilder: duplicate curve id");
    for (int id : ids) {
      if (id < 1 || id > kMaxSurfaces) throw PreconditionError("MapBuilder: curve id out of range");
    }
    map.curves = ids;
    for (const auto& [id, seq] : sequences_) {
      std::vector<int> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("MapBuilder: curve " + std::to_string(id) + " visits a vertex twice");
      }
      const int base = map.dart_count();
      for (std::size_t j = 0; j < seq.size(); ++j) {
        map.curve_of.push_back(id);
        map.curve_of.push_back(id);
        map.pair.push_back(base + 2 * static_cast<int>(j) + 1);
        map.pair.push_back(base + 2 * static_cast<int>(j));
      }
    }
    map.rotation.assign(map.curve_of.size(), -1);
    for (const auto& [vertex, ring] : rotations_) {
      std::vector<int> darts;
      for (const auto& h : ring) darts.push_back(dart_at(h.curve, vertex, h.direction));
      for (std::size_t i = 0; i < darts.size(); ++i) {
        int& slot = map.rotation[static_cast<std::size_t>(darts[i])];
        if (slot != -1) throw PreconditionError("MapBuilder: dart listed twice around vertex " + std::to_string(vertex));
        slot = darts[(i + 1) % darts.size()];
      }
    }
    for (std::size_t d = 0; d < map.rotation.size(); ++d) {
      if (map.rotation[d] < 0) {
        throw PreconditionError("MapBuilder: dart " + std::to_string(d) + " of curve " + std::to_string(map.curve_of[d]) +
                                " missing from every rotation");
      }
    }
    if (map.dart_count() > 0) {
      if (!outer_) throw PreconditionError("MapBuilder: outer face not set");
      map.outer_dart = dart(outer_->curve, outer_->arc, outer_->backward);
    }
    for (const auto& [id, parent] : free_) {
      FreeCurve f{id, -1, parent};
      if (map.dart_count() > 0) {
        f.host_dart = host_ ? dart(host_->curve, host_->arc, host_->backward) : map.outer_dart;
      }
      map.free_curves.push_back(f);
    }
    std::sort(map.free_curves.begin(), map.free_curves.end());
    return map;
  }

 private:
  struct DartRef {
    int curve;
    int arc;
    bool backward;
  };

  int dart_at(int curve, int vertex, int direction) const {
    const auto it = sequences_.find(curve);
    if (it == sequences_.end()) throw PreconditionError("MapBuilder: rotation names unknown curve " + std::to_string(curve));
    const auto& seq = it->second;
    const auto pos = std::find(seq.begin(), seq.end(), vertex);
    if (pos == seq.end()) {
      throw PreconditionError("MapBuilder: curve " + std::to_string(curve) + " does not pass vertex " + std::to_string(vertex));
    }
    const int j = static_cast<int>(pos - seq.begin());
    const int len = static_cast<int>(seq.size());
    return direction > 0 ? dart(curve, j, false) : dart(curve, (j + len - 1) % len, true);
  }

  std::map<int, std::vector<int>> sequences_;
  std::map<int, std::vector<HalfEdge>> rotations_;
  std::optional<DartRef> outer_;
  std::optional<DartRef> host_;
  std::vector<std::pair<int, int>> free_;
};

struct Circle {
  double cx = 0;
  double cy = 0;
  double r = 1;
};

// Map of counterclockwise circles, curve i+1 for circles[i]. Intersection
// points closer than `eps` are merged, so several circles may share a vertex.
// Every circle must cross at least one other.
inline CombinatorialMap circle_arrangement(const std::vector<Circle>& circles, double eps = 1e-9) {
  struct Point {
    double x, y;
  };
  std::vector<Point> points;
  std::vector<std::vector<int>> on_circle(circles.size());
  auto vertex_for = [&](Point p) {
    for (std::size_t v = 0; v < points.size(); ++v) {
      if (std::hypot(points[v].x - p.x, points[v].y - p.y) < eps) return static_cast<int>(v);
    }
    points.push_back(p);
    return static_cast<int>(points.size() - 1);
  };
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const Circle& a = circles[i];
      const Circle& b = circles[j];
      const double dx = b.cx - a.cx, dy = b.cy - a.cy;
      const double d = std::hypot(dx, dy);
      if (d >= a.r + b.r - eps || d <= std::abs(a.r - b.r) + eps) {
        if (std::abs(d - (a.r + b.r)) < eps || std::abs(d - std::abs(a.r - b.r)) < eps) {
          throw PreconditionError("circle_arrangement: circles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " are tangent");
        }
        continue;
      }
      const double along = (a.r * a.r - b.r * b.r + d * d) / (2 * d);
      const double h = std::sqrt(a.r * a.r - along * along);
      const double mx = a.cx + along * dx / d, my = a.cy + along * dy / d;
      for (double sign : {1.0, -1.0}) {
        const int v = vertex_for({mx - sign * h * dy / d, my + sign * h * dx / d});
        for (std::size_t c : {i, j}) {
          auto& list = on_circle[c];
          if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
        }
      }
    }
  }
  auto angle_on = [&](std::size_t c, int v) {
    return std::atan2(points[static_cast<std::size_t>(v)].y - circles[c].cy, points[static_cast<std::size_t>(v)].x - circles[c].cx);
  };
  auto wrap = [](double a) {
    const double two_pi = 2 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    return a < 0 ? a + two_pi : a;
  };
  MapBuilder builder;
  for (std::size_t c = 0; c < circles.size(); ++c) {
    auto& list = on_circle[c];
    if (list.empty()) throw PreconditionError("circle_arrangement: circle " + std::to_string(c + 1) + " crosses no other circle");
    std::sort(list.begin(), list.end(), [&](int a, int b) { return angle_on(c, a) < angle_on(c, b); });
    builder.curve(static_cast<int>(c) + 1, list);
  }
  for (std::size_t v = 0; v < points.size(); ++v) {
    std::vector<std::pair<double, MapBuilder::HalfEdge>> ring;
    for (std::size_t c = 0; c < circles.size(); ++c) {
      if (std::find(on_circle[c].begin(), on_circle[c].end(), static_cast<int>(v)) == on_circle[c].end()) continue;
      const double theta = angle_on(c, static_cast<int>(v));
      ring.push_back({wrap(theta + std::numbers::pi / 2), {static_cast<int>(c) + 1, +1}});
      ring.push_back({wrap(theta - std::numbers::pi / 2), {static_cast<int>(c) + 1, -1}});
    }
    std::sort(ring.begin(), ring.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MapBuilder::HalfEdge> ccw;
    for (const auto& [angle, h] : ring) ccw.push_back(h);
    builder.rotation(static_cast<int>(v), ccw);
  }
  // The point of largest x on the rightmost circle lies on the outer face.
  std::size_t right = 0;
  for (std::size_t c = 1; c < circles.size(); ++c) {
    if (circles[c].cx + circles[c].r > circles[right].cx + circles[right].r) right = c;
  }
  const auto& seq = on_circle[right];
  int arc = static_cast<int>(seq.size()) - 1;  // wraps through angle pi
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    if (angle_on(right, seq[j]) < 0 && angle_on(right, seq[j + 1]) >= 0) arc = static_cast<int>(j);
  }
  builder.outer(static_cast<int>(right) + 1, arc, true);
  return builder.build();
}

// The classical 1-, 2- and 3-circle diagrams.
inline CombinatorialMap builtin_map(int n) {
  switch (n) {
    case 1:
      return MapBuilder().free_curve(1).build();
    case 2:
      return circle_arrangement({{-0.5, 0, 1}, {0.5, 0, 1}});
    case 3: {
      std::vector<Circle> circles;
      for (double deg : {90.0, 210.0, 330.0}) {
        const double t = deg * std::numbers::pi / 180;
        circles.push_back({0.5 * std::cos(t), 0.5 * std::sin(t), 1.0});
      }
      return circle_arrangement(circles);
    }
    default:
      throw PreconditionError("builtin_map: n must be 1, 2 or 3");
  }
}

}  // namespace venn
