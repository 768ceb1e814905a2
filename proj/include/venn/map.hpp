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

// Combinatorial maps: exact dart-based encodings of arrangements of closed
// curves in the plane.
//
// Every dart is a half-arc leaving a vertex. `pair` sends a dart to the other
// half of the same arc, `rotation` to the next dart counterclockwise around
// the same vertex. Faces are orbits of next_in_face(d) = rotation^-1(pair(d));
// the face of a dart is the one lying to its left. A curve oriented
// counterclockwise therefore has its interior on the left of its forward
// darts.
//
// Curves without crossings are not part of the dart structure. They are kept
// as FreeCurve records pointing at the face of the crossing piece that hosts
// them, and at the innermost crossing-free curve enclosing them.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "venn/common.hpp"
#include "venn/complex.hpp"
#include "venn/disjoint_sets.hpp"

namespace venn {

struct FreeCurve {
  int curve = 0;
  int host_dart = -1;  // dart on the hosting face of the piece; -1 without a piece
  int parent = 0;      // innermost enclosing free curve, 0 if none

  auto operator<=>(const FreeCurve&) const = default;
};

struct CombinatorialMap {
  std::vector<int> curves;    // ids present, ascending
  std::vector<int> curve_of;  // per dart
  std::vector<int> pair;
  std::vector<int> rotation;
  int outer_dart = -1;
  std::vector<FreeCurve> free_curves;

  int dart_count() const { return static_cast<int>(curve_of.size()); }
  int curve_count() const { return static_cast<int>(curves.size()); }

  SurfaceSet curve_set() const {
    Label bits = 0;
    for (int c : curves) bits |= surface_bit(c);
    return SurfaceSet(bits);
  }

  const FreeCurve* find_free(int curve) const {
    for (const auto& f : free_curves) {
      if (f.curve == curve) return &f;
    }
    return nullptr;
  }

  bool operator==(const CombinatorialMap&) const = default;
};

// Orbit structure of a map whose permutations are valid.
struct MapTopology {
  std::vector<int> inverse_rotation;
  std::vector<int> vertex_of;
  std::vector<int> face_of;
  std::vector<int> continuation;  // same-curve dart at the same vertex, -1 if ambiguous
  std::vector<int> degree;        // per vertex
  int vertex_count = 0;
  int face_count = 0;
  int edge_count = 0;

  int next_in_face(const CombinatorialMap& map, int d) const {
    return inverse_rotation[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(d)])];
  }
};

namespace detail {

inline std::vector<int> orbit_ids(std::size_t n, const auto& next) {
  std::vector<int> id(n, -1);
  int count = 0;
  for (std::size_t d = 0; d < n; ++d) {
    if (id[d] >= 0) continue;
    std::size_t e = d;
    do {
      id[e] = count;
      e = static_cast<std::size_t>(next(static_cast<int>(e)));
    } while (e != d);
    ++count;
  }
  return id;
}

inline bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace detail

inline MapTopology map_topology(const CombinatorialMap& map) {
  const std::size_t n = map.curve_of.size();
  MapTopology t;
  t.inverse_rotation.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    t.inverse_rotation[static_cast<std::size_t>(map.rotation[d])] = static_cast<int>(d);
  }
  t.vertex_of = detail::orbit_ids(n, [&](int d) { return map.rotation[static_cast<std::size_t>(d)]; });
  t.face_of = detail::orbit_ids(n, [&](int d) { return t.next_in_face(map, d); });
  t.vertex_count = n ? *std::max_element(t.vertex_of.begin(), t.vertex_of.end()) + 1 : 0;
  t.face_count = n ? *std::max_element(t.face_of.begin(), t.face_of.end()) + 1 : 0;
  t.edge_count = static_cast<int>(n / 2);
  t.degree.assign(static_cast<std::size_t>(t.vertex_count), 0);
  for (std::size_t d = 0; d < n; ++d) ++t.degree[static_cast<std::size_t>(t.vertex_of[d])];
  t.continuation.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    int match = -1;
    int matches = 0;
    for (int e = map.rotation[d]; e != static_cast<int>(d); e = map.rotation[static_cast<std::size_t>(e)]) {
      if (map.curve_of[static_cast<std::size_t>(e)] == map.curve_of[d]) {
        match = e;
        ++matches;
      }
    }
    if (matches == 1) t.continuation[d] = match;
  }
  return t;
}

// Per-face labels (original bit positions, restricted to the map's curves).
// The outer face is all-exterior; crossing an arc of curve i flips bit i.
// Throws Error when some closed walk flips a bit an odd number of times.
inline std::vector<Label> face_labels(const CombinatorialMap& map, const MapTopology& topo) {
  std::vector<Label> label(static_cast<std::size_t>(topo.face_count), 0);
  if (topo.face_count == 0) return label;
  std::vector<char> assigned(label.size(), 0);
  std::vector<std::vector<int>> darts_of_face(label.size());
  for (int d = 0; d < map.dart_count(); ++d) darts_of_face[static_cast<std::size_t>(topo.face_of[static_cast<std::size_t>(d)])].push_back(d);

  const int outer = topo.face_of[static_cast<std::size_t>(map.outer_dart)];
  label[static_cast<std::size_t>(outer)] = map.curve_set().bits();
  assigned[static_cast<std::size_t>(outer)] = 1;
  std::deque<int> queue{outer};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int d : darts_of_face[static_cast<std::size_t>(f)]) {
      const int g = topo.face_of[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(d)])];
      const Label expected = label[static_cast<std::size_t>(f)] ^ surface_bit(map.curve_of[static_cast<std::size_t>(d)]);
      if (!assigned[static_cast<std::size_t>(g)]) {
        label[static_cast<std::size_t>(g)] = expected;
        assigned[static_cast<std::size_t>(g)] = 1;
        queue.push_back(g);
      } else if (label[static_cast<std::size_t>(g)] != expected) {
        throw Error("inconsistent sign assignment across dart " + std::to_string(d) +
                    ": not an arrangement of closed curves");
      }
    }
  }
  for (std::size_t f = 0; f < label.size(); ++f) {
    if (!assigned[f]) throw Error("face " + std::to_string(f) + " unreachable from the outer face");
  }
  return label;
}

inline ValidationReport validate_map(const CombinatorialMap& map) {
  ValidationReport report;
  const std::size_t n = map.curve_of.size();
  if (map.pair.size() != n || map.rotation.size() != n) {
    report.fail("sizes", "curve_of/pair/rotation lengths differ");
    return report;
  }
  if (!std::is_sorted(map.curves.begin(), map.curves.end()) ||
      std::adjacent_find(map.curves.begin(), map.curves.end()) != map.curves.end()) {
    report.fail("curves", "curve list must be strictly ascending");
  }
  for (int c : map.curves) {
    if (c < 1 || c > kMaxSurfaces) report.fail("curves", "curve id out of range: " + std::to_string(c));
  }
  if (!report.ok()) return report;

  const SurfaceSet present = map.curve_set();
  for (std::size_t d = 0; d < n; ++d) {
    const int p = map.pair[d];
    if (p < 0 || static_cast<std::size_t>(p) >= n) {
      report.fail("involution", "dart " + std::to_string(d) + " pairs out of range");
    } else if (static_cast<std::size_t>(p) == d) {
      report.fail("involution", "dart " + std::to_string(d) + " is a fixed point of edge_pairing");
    } else if (static_cast<std::size_t>(map.pair[static_cast<std::size_t>(p)]) != d) {
      report.fail("involution", "edge_pairing(edge_pairing(" + std::to_string(d) + ")) != " + std::to_string(d));
    } else if (map.curve_of[d] != map.curve_of[static_cast<std::size_t>(p)]) {
      report.fail("labels", "arc of dart " + std::to_string(d) + " changes curve");
    }
    if (!present.contains(map.curve_of[d]) || map.curve_of[d] < 1) {
      report.fail("labels", "dart " + std::to_string(d) + " has unknown curve " + std::to_string(map.curve_of[d]));
    }
  }
  if (!detail::is_permutation_of_range(map.rotation)) {
    report.fail("rotation", "rotation is not a permutation of the darts");
  }
  if (!report.ok()) return report;

  // Free-curve records.
  SurfaceSet free_set;
  for (const auto& f : map.free_curves) {
    if (f.curve < 1 || f.curve > kMaxSurfaces || !present.contains(f.curve) || free_set.contains(f.curve)) {
      report.fail("free_curves", "bad or duplicate free curve " + std::to_string(f.curve));
      continue;
    }
    free_set = free_set.with(f.curve);
    if (n == 0 ? f.host_dart != -1 : (f.host_dart < 0 || static_cast<std::size_t>(f.host_dart) >= n)) {
      report.fail("free_curves", "free curve " + std::to_string(f.curve) + " has invalid host dart");
    }
  }
  for (const auto& f : map.free_curves) {
    if (f.parent == 0) continue;
    if (f.parent < 1 || f.parent > kMaxSurfaces || !free_set.contains(f.parent) || f.parent == f.curve) {
      report.fail("free_curves", "free curve " + std::to_string(f.curve) + " has invalid parent");
    }
  }
  if (!report.ok()) return report;
  for (const auto& f : map.free_curves) {
    // Parent chains must terminate.
    int steps = 0;
    for (int p = f.parent; p != 0; p = map.find_free(p)->parent) {
      if (++steps > static_cast<int>(map.free_curves.size())) {
        report.fail("free_curves", "containment cycle through curve " + std::to_string(f.curve));
        break;
      }
    }
  }
  SurfaceSet piece_set;
  for (int c : map.curve_of) piece_set = piece_set.with(c);
  if ((piece_set & free_set).bits() != 0) {
    report.fail("free_curves", "curve " + (piece_set & free_set).to_string() + " is both free and crossing");
  }
  if ((piece_set | free_set) != present) {
    report.fail("curves", "curves " + present.minus(piece_set | free_set).to_string() + " have no darts and no free record");
  }
  if (n == 0) {
    if (map.outer_dart != -1) report.fail("outer", "outer_dart set on a map without darts");
    return report;
  }
  if (map.outer_dart < 0 || static_cast<std::size_t>(map.outer_dart) >= n) {
    report.fail("outer", "outer_dart out of range");
  }
  if (n % 2 != 0) report.fail("involution", "odd number of darts");
  if (!report.ok()) return report;

  const MapTopology topo = map_topology(map);
  for (int v = 0; v < topo.vertex_count; ++v) {
    if (topo.degree[static_cast<std::size_t>(v)] % 2 != 0 || topo.degree[static_cast<std::size_t>(v)] < 4) {
      report.fail("degree", "vertex " + std::to_string(v) + " has degree " + std::to_string(topo.degree[static_cast<std::size_t>(v)]));
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (topo.continuation[d] < 0) {
      report.fail("transversal", "curve " + std::to_string(map.curve_of[d]) + " does not pass exactly once through vertex " +
                                     std::to_string(topo.vertex_of[d]));
      break;
    }
    // The continuation must sit opposite in the cyclic order.
    int steps = 0;
    for (int e = static_cast<int>(d); e != topo.continuation[d]; e = map.rotation[static_cast<std::size_t>(e)]) ++steps;
    if (2 * steps != topo.degree[static_cast<std::size_t>(topo.vertex_of[d])]) {
      report.fail("transversal", "curve " + std::to_string(map.curve_of[d]) + " touches without crossing at vertex " +
                                     std::to_string(topo.vertex_of[d]));
      break;
    }
  }
  if (!report.ok()) return report;

  // Each crossing curve is one closed loop.
  for (int c : piece_set.ids()) {
    int total = 0;
    int start = -1;
    for (std::size_t d = 0; d < n; ++d) {
      if (map.curve_of[d] == c) {
        ++total;
        if (start < 0) start = static_cast<int>(d);
      }
    }
    int visited = 0;
    int d = start;
    do {
      visited += 2;
      d = topo.continuation[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(d)])];
    } while (d != start && visited <= total);
    if (visited != total) {
      report.fail("closed_curve", "curve " + std::to_string(c) + " is not a single closed loop");
    }
  }

  // Connectivity of the piece.
  DisjointSets sets(n);
  for (std::size_t d = 0; d < n; ++d) {
    sets.unite(static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(map.pair[d]));
    sets.unite(static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(map.rotation[d]));
  }
  std::size_t pieces = 0;
  for (std::size_t d = 0; d < n; ++d) pieces += sets.is_root(static_cast<std::uint32_t>(d)) ? 1 : 0;
  if (pieces != 1) {
    report.fail("connected", std::to_string(pieces) + " crossing pieces; only one is supported");
    return report;
  }
  const int euler = topo.vertex_count - topo.edge_count + topo.face_count;
  if (euler != 2) {
    report.fail("euler", "V - E + F = " + std::to_string(euler) + " (V=" + std::to_string(topo.vertex_count) +
                             ", E=" + std::to_string(topo.edge_count) + ", F=" + std::to_string(topo.face_count) + ")");
    return report;
  }
  try {
    face_labels(map, topo);
    for (const auto& f : map.free_curves) {
      if (f.parent == 0) continue;
      const FreeCurve* parent = map.find_free(f.parent);
      if (topo.face_of[static_cast<std::size_t>(parent->host_dart)] != topo.face_of[static_cast<std::size_t>(f.host_dart)]) {
        report.fail("free_curves", "free curve " + std::to_string(f.curve) + " and its parent live in different faces");
      }
    }
  } catch (const Error& e) {
    report.fail("signs", e.what());
  }
  return report;
}

// Counts reported alongside a successful validation.
struct MapCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

inline MapCounts map_counts(const CombinatorialMap& map) {
  if (map.dart_count() == 0) return {};
  const MapTopology t = map_topology(map);
  return {t.vertex_count, t.edge_count, t.face_count};
}

struct MapRegion {
  int face = -1;       // face of the crossing piece, -1 for free-curve interiors / pieceless outside
  int free_curve = 0;  // free curve whose interior this is, 0 otherwise
  Label label = 0;     // original bit positions
  SignVector sign;     // compacted over map.curves
};

namespace detail {

inline Label ancestor_bits(const CombinatorialMap& map, const FreeCurve& f) {
  Label bits = surface_bit(f.curve);
  for (int p = f.parent; p != 0; p = map.find_free(p)->parent) bits |= surface_bit(p);
  return bits;
}

}  // namespace detail

// Regions of the arrangement with their sign vectors. Piece faces come first
// in face order, then one region per free curve in record order.
inline std::vector<MapRegion> faces_with_signs(const CombinatorialMap& map) {
  const SurfaceSet scope = map.curve_set();
  std::vector<MapRegion> regions;
  std::vector<Label> host_label;
  std::vector<int> face_of;
  if (map.dart_count() > 0) {
    const MapTopology topo = map_topology(map);
    const auto labels = face_labels(map, topo);
    for (int f = 0; f < topo.face_count; ++f) {
      regions.push_back({f, 0, labels[static_cast<std::size_t>(f)], {}});
    }
    host_label = labels;
    face_of = topo.face_of;
  } else {
    regions.push_back({-1, 0, scope.bits(), {}});
  }
  for (const auto& f : map.free_curves) {
    const Label host = map.dart_count() > 0
                           ? host_label[static_cast<std::size_t>(face_of[static_cast<std::size_t>(f.host_dart)])]
                           : scope.bits();
    regions.push_back({-1, f.curve, host & ~detail::ancestor_bits(map, f), {}});
  }
  for (auto& r : regions) r.sign = SignVector{compact_bits(r.label, scope.bits()), scope.size()};
  return regions;
}

// Census over the map's regions, restricted to `scope`: regions of the map
// are the connected pieces, so equal labels on distinct regions count as
// distinct components.
inline Census map_census(const CombinatorialMap& map) {
  Census census;
  census.scope = map.curve_set();
  for (const auto& r : faces_with_signs(map)) ++census.components[r.label];
  return census;
}

struct EdgeCounts {
  std::map<int, std::size_t> per_curve;  // e_V(S_i)
  std::size_t total = 0;                 // e(V)
  std::size_t regions = 0;               // r(V)
};

inline EdgeCounts edge_counts(const CombinatorialMap& map) {
  EdgeCounts out;
  for (int c : map.curves) out.per_curve[c] = 0;
  for (int c : map.curve_of) ++out.per_curve[c];
  for (auto& [c, count] : out.per_curve) count /= 2;
  for (const auto& f : map.free_curves) out.per_curve[f.curve] = 1;
  for (const auto& [c, count] : out.per_curve) out.total += count;
  out.regions = faces_with_signs(map).size();
  return out;
}

struct Lemma3Witness {
  int face = -1;
  int curve = 0;
  std::vector<int> darts;  // boundary darts of the face carrying `curve`
};

// Every face's boundary arcs must carry pairwise distinct curves.
inline std::optional<Lemma3Witness> check_lemma3(const CombinatorialMap& map) {
  if (map.dart_count() == 0) return std::nullopt;
  const MapTopology topo = map_topology(map);
  std::vector<std::vector<int>> darts_of_face(static_cast<std::size_t>(topo.face_count));
  for (int d = 0; d < map.dart_count(); ++d) darts_of_face[static_cast<std::size_t>(topo.face_of[static_cast<std::size_t>(d)])].push_back(d);
  for (int f = 0; f < topo.face_count; ++f) {
    std::map<int, std::vector<int>> by_curve;
    for (int d : darts_of_face[static_cast<std::size_t>(f)]) by_curve[map.curve_of[static_cast<std::size_t>(d)]].push_back(d);
    for (const auto& [curve, darts] : by_curve) {
      if (darts.size() > 1) return Lemma3Witness{f, curve, darts};
    }
  }
  return std::nullopt;
}

// Removes the curves in `subset`. Vertices left with a single surviving
// curve are dissolved and their arcs merged; surviving curves left without
// crossings become free curves whose host face and enclosing free curve are
// read off the face structure before deletion.
inline CombinatorialMap delete_curves(const CombinatorialMap& map, SurfaceSet subset) {
  if (!subset.subset_of(map.curve_set())) {
    throw PreconditionError("delete_curves: " + subset.minus(map.curve_set()).to_string() + " not in the map");
  }
  const SurfaceSet survivors = map.curve_set().minus(subset);
  const std::size_t n = map.curve_of.size();

  CombinatorialMap out;
  out.curves = survivors.ids();

  MapTopology topo;
  std::vector<Label> old_labels;
  if (n > 0) {
    topo = map_topology(map);
    old_labels = face_labels(map, topo);
  }

  // Vertices that keep at least two surviving curves.
  std::vector<char> vertex_kept(static_cast<std::size_t>(topo.vertex_count), 0);
  {
    std::vector<SurfaceSet> at_vertex(static_cast<std::size_t>(topo.vertex_count));
    for (std::size_t d = 0; d < n; ++d) {
      if (survivors.contains(map.curve_of[d])) {
        auto& s = at_vertex[static_cast<std::size_t>(topo.vertex_of[d])];
        s = s.with(map.curve_of[d]);
      }
    }
    for (std::size_t v = 0; v < at_vertex.size(); ++v) vertex_kept[v] = at_vertex[v].size() >= 2;
  }
  std::vector<int> new_id(n, -1);
  int kept = 0;
  SurfaceSet piece;
  for (std::size_t d = 0; d < n; ++d) {
    if (survivors.contains(map.curve_of[d]) && vertex_kept[static_cast<std::size_t>(topo.vertex_of[d])]) {
      new_id[d] = kept++;
      piece = piece.with(map.curve_of[d]);
    }
  }
  const SurfaceSet new_free = survivors.minus(piece);

  out.curve_of.resize(static_cast<std::size_t>(kept));
  out.pair.resize(static_cast<std::size_t>(kept));
  out.rotation.resize(static_cast<std::size_t>(kept));
  for (std::size_t d = 0; d < n; ++d) {
    if (new_id[d] < 0) continue;
    const auto nd = static_cast<std::size_t>(new_id[d]);
    out.curve_of[nd] = map.curve_of[d];
    int e = map.pair[d];
    for (std::size_t guard = 0; new_id[static_cast<std::size_t>(e)] < 0; ++guard) {
      if (guard > n) throw Error("delete_curves: curve " + std::to_string(map.curve_of[d]) + " does not close");
      e = map.pair[static_cast<std::size_t>(topo.continuation[static_cast<std::size_t>(e)])];
    }
    out.pair[nd] = new_id[static_cast<std::size_t>(e)];
    int r = map.rotation[d];
    while (new_id[static_cast<std::size_t>(r)] < 0) r = map.rotation[static_cast<std::size_t>(r)];
    out.rotation[nd] = new_id[static_cast<std::size_t>(r)];
  }

  // Old faces merge across every removed arc.
  DisjointSets faces(static_cast<std::size_t>(topo.face_count));
  for (std::size_t d = 0; d < n; ++d) {
    if (!piece.contains(map.curve_of[d])) {
      faces.unite(static_cast<std::uint32_t>(topo.face_of[d]),
                  static_cast<std::uint32_t>(topo.face_of[static_cast<std::size_t>(map.pair[d])]));
    }
  }
  std::map<std::uint32_t, int> class_dart;
  for (std::size_t d = 0; d < n; ++d) {
    if (new_id[d] < 0) continue;
    class_dart.emplace(faces.find(static_cast<std::uint32_t>(topo.face_of[d])), new_id[d]);
    // A piece lying inside a crossing-free survivor cannot be hosted.
    const Label outside = old_labels[static_cast<std::size_t>(topo.face_of[d])];
    if ((~outside & new_free.bits()) != 0) {
      throw Error("delete_curves: remaining arrangement would lie inside crossing-free curve " +
                  SurfaceSet(~outside & new_free.bits()).to_string());
    }
  }
  if (kept > 0) {
    DisjointSets sets(static_cast<std::size_t>(kept));
    for (int d = 0; d < kept; ++d) {
      sets.unite(static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(out.pair[static_cast<std::size_t>(d)]));
      sets.unite(static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(out.rotation[static_cast<std::size_t>(d)]));
    }
    int pieces = 0;
    for (int d = 0; d < kept; ++d) pieces += sets.is_root(static_cast<std::uint32_t>(d)) ? 1 : 0;
    if (pieces > 1) throw Error("delete_curves: result splits into several crossing pieces (unsupported)");
    out.outer_dart = class_dart.at(faces.find(static_cast<std::uint32_t>(topo.face_of[static_cast<std::size_t>(map.outer_dart)])));
  }

  // Location of each surviving free curve: the old face class hosting it and
  // the label of the region immediately outside it.
  struct Location {
    int curve;
    int host_class;  // -1 when the old map had no piece
    Label outside;
  };
  std::vector<Location> locations;
  for (const auto& f : map.free_curves) {
    if (!survivors.contains(f.curve)) continue;
    if (n > 0) {
      const int face = topo.face_of[static_cast<std::size_t>(f.host_dart)];
      const Label outside = (old_labels[static_cast<std::size_t>(face)] & ~detail::ancestor_bits(map, f)) | surface_bit(f.curve);
      locations.push_back({f.curve, static_cast<int>(faces.find(static_cast<std::uint32_t>(face))), outside});
    } else {
      const Label outside = (map.curve_set().bits() & ~detail::ancestor_bits(map, f)) | surface_bit(f.curve);
      locations.push_back({f.curve, -1, outside});
    }
  }
  for (int c : new_free.ids()) {
    if (map.find_free(c) != nullptr) continue;
    std::size_t d = 0;
    while (map.curve_of[d] != c) ++d;
    const int face = topo.face_of[d];
    locations.push_back({c, static_cast<int>(faces.find(static_cast<std::uint32_t>(face))),
                         old_labels[static_cast<std::size_t>(face)] | surface_bit(c)});
  }
  std::sort(locations.begin(), locations.end(), [](const auto& a, const auto& b) { return a.curve < b.curve; });
  for (const auto& loc : locations) {
    FreeCurve f;
    f.curve = loc.curve;
    f.host_dart = kept > 0 ? class_dart.at(static_cast<std::uint32_t>(loc.host_class)) : -1;
    int best_depth = -1;
    for (const auto& other : locations) {
      if (other.curve == loc.curve || (loc.outside & surface_bit(other.curve)) != 0) continue;
      // `other` encloses this curve; the deepest encloser is the parent.
      const int depth = std::popcount(~other.outside & new_free.bits());
      if (depth > best_depth) {
        best_depth = depth;
        f.parent = other.curve;
      }
    }
    out.free_curves.push_back(f);
  }
  return out;
}

// Isomorphism-invariant encoding: breadth-first relabeling of darts from
// every start dart of the smallest curve, keeping the lexicographically
// smallest result. Curve ids are preserved.
inline std::vector<int> canonical_form(const CombinatorialMap& map) {
  std::vector<int> best;
  const int n = map.dart_count();
  std::vector<int> outer_face_mark(static_cast<std::size_t>(n), 0);
  MapTopology topo;
  if (n > 0) {
    topo = map_topology(map);
    const int outer = topo.face_of[static_cast<std::size_t>(map.outer_dart)];
    for (int d = 0; d < n; ++d) outer_face_mark[static_cast<std::size_t>(d)] = topo.face_of[static_cast<std::size_t>(d)] == outer;
  }
  auto encode_free = [&](const std::vector<int>& order_of) {
    std::vector<int> code;
    for (const auto& f : map.free_curves) {
      int host = -1;
      if (f.host_dart >= 0) {
        host = n;
        for (int d = 0; d < n; ++d) {
          if (topo.face_of[static_cast<std::size_t>(d)] == topo.face_of[static_cast<std::size_t>(f.host_dart)]) {
            host = std::min(host, order_of[static_cast<std::size_t>(d)]);
          }
        }
      }
      code.insert(code.end(), {f.curve, host, f.parent});
    }
    return code;
  };
  std::vector<int> header(map.curves);
  header.push_back(-1);
  if (n == 0) {
    auto code = header;
    auto tail = encode_free({});
    code.insert(code.end(), tail.begin(), tail.end());
    return code;
  }
  const int first_curve = *std::min_element(map.curve_of.begin(), map.curve_of.end());
  for (int start = 0; start < n; ++start) {
    if (map.curve_of[static_cast<std::size_t>(start)] != first_curve) continue;
    std::vector<int> order_of(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order_of[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int d = order[i];
      for (int next : {map.pair[static_cast<std::size_t>(d)], map.rotation[static_cast<std::size_t>(d)]}) {
        if (order_of[static_cast<std::size_t>(next)] < 0) {
          order_of[static_cast<std::size_t>(next)] = static_cast<int>(order.size());
          order.push_back(next);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) continue;
    std::vector<int> code = header;
    for (int d : order) {
      code.push_back(map.curve_of[static_cast<std::size_t>(d)]);
      code.push_back(order_of[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(d)])]);
      code.push_back(order_of[static_cast<std::size_t>(map.rotation[static_cast<std::size_t>(d)])]);
      code.push_back(outer_face_mark[static_cast<std::size_t>(d)]);
    }
    auto tail = encode_free(order_of);
    code.insert(code.end(), tail.begin(), tail.end());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  return a.dart_count() == b.dart_count() && canonical_form(a) == canonical_form(b);
}

// Every vertex is a transversal crossing of exactly two distinct curves.
inline bool is_simple_map(const CombinatorialMap& map) {
  if (map.dart_count() == 0) return true;
  const MapTopology topo = map_topology(map);
  for (int v = 0; v < topo.vertex_count; ++v) {
    if (topo.degree[static_cast<std::size_t>(v)] != 4) return false;
  }
  for (int d = 0; d < map.dart_count(); ++d) {
    const auto ud = static_cast<std::size_t>(d);
    const int next = map.rotation[ud];
    const int opposite = map.rotation[static_cast<std::size_t>(next)];
    if (map.curve_of[static_cast<std::size_t>(next)] == map.curve_of[ud]) return false;
    if (map.curve_of[static_cast<std::size_t>(opposite)] != map.curve_of[ud]) return false;
  }
  return true;
}

// Curve `id` as a cyclic complex of its arcs, each labeled by the sign over
// the other curves (the two faces along an arc agree there).
inline LabeledComplex project_onto_curve(const CombinatorialMap& map, int id) {
  const SurfaceSet scope = map.curve_set();
  if (!scope.contains(id)) throw PreconditionError("project_onto_curve: curve not in map");
  const Label others = scope.without(id).bits();
  const int bits = scope.size() - 1;
  if (const FreeCurve* f = map.find_free(id)) {
    const auto regions = faces_with_signs(map);
    for (const auto& r : regions) {
      if (r.free_curve == f->curve) return LabeledComplex(bits, {compact_bits(r.label, others)}, {});
    }
  }
  const MapTopology topo = map_topology(map);
  const auto labels = face_labels(map, topo);
  std::vector<int> arcs;  // forward darts along the curve in order
  int start = -1;
  for (int d = 0; d < map.dart_count() && start < 0; ++d) {
    if (map.curve_of[static_cast<std::size_t>(d)] == id) start = d;
  }
  int d = start;
  do {
    arcs.push_back(d);
    d = topo.continuation[static_cast<std::size_t>(map.pair[static_cast<std::size_t>(d)])];
  } while (d != start);
  std::vector<Label> cell_labels;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Label face = labels[static_cast<std::size_t>(topo.face_of[static_cast<std::size_t>(arcs[i])])];
    cell_labels.push_back(compact_bits(face, others));
    if (arcs.size() > 1) {
      edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % arcs.size()));
    }
  }
  return LabeledComplex(bits, std::move(cell_labels), std::move(edges));
}

}  // namespace venn
