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
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "venn/common.hpp"
#include "venn/disjoint_sets.hpp"

namespace venn {

// Abstract cell set with a symmetric adjacency relation and a label per
// cell. Grids, surface projections and intersection loci all reduce to one.
class LabeledComplex {
 public:
  LabeledComplex() = default;

  LabeledComplex(int label_bits, std::vector<Label> labels,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
      : label_bits_(label_bits), labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    for (auto& [a, b] : edges) {
      if (a >= n || b >= n) throw PreconditionError("complex edge references a missing cell");
      if (a == b) throw PreconditionError("complex adjacency must be irreflexive");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::uint32_t> degree(n, 0);
    for (const auto& [a, b] : edges) {
      ++degree[a];
      ++degree[b];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    neighbors_.resize(offsets_[n]);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [a, b] : edges) {
      neighbors_[fill[a]++] = b;
      neighbors_[fill[b]++] = a;
    }
  }

  int label_bits() const { return label_bits_; }
  std::size_t cell_count() const { return labels_.size(); }
  Label label(std::size_t cell) const { return labels_[cell]; }
  const std::vector<Label>& labels() const { return labels_; }

  std::span<const std::uint32_t> neighbors(std::size_t cell) const {
    return {neighbors_.data() + offsets_[cell], neighbors_.data() + offsets_[cell + 1]};
  }

  template <class F>
  void for_each_adjacency(F&& f) const {
    for (std::uint32_t c = 0; c < labels_.size(); ++c) {
      for (std::uint32_t nb : neighbors(c)) {
        if (c < nb) f(c, nb);
      }
    }
  }

  // Connected components ignoring labels.
  std::size_t component_count() const {
    DisjointSets sets(labels_.size());
    for_each_adjacency([&](std::uint32_t a, std::uint32_t b) { sets.unite(a, b); });
    std::size_t count = 0;
    for (std::uint32_t c = 0; c < labels_.size(); ++c) count += sets.is_root(c) ? 1 : 0;
    return count;
  }

 private:
  int label_bits_ = 0;
  std::vector<Label> labels_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> neighbors_;
};

// Region census of a complex restricted to `scope`: for every label present
// (bits outside scope cleared), the number of connected components of the
// cells carrying it.
struct Census {
  SurfaceSet scope;
  std::map<Label, std::size_t> components;

  std::size_t label_count() const { return components.size(); }

  std::size_t region_count() const {
    std::size_t total = 0;
    for (const auto& [label, count] : components) total += count;
    return total;
  }

  bool has_all_labels() const {
    return label_count() == (std::size_t{1} << scope.size());
  }

  // Exactly 2^|scope| labels, each on a single connected component.
  bool is_venn() const {
    if (!has_all_labels()) return false;
    return std::all_of(components.begin(), components.end(),
                       [](const auto& kv) { return kv.second == 1; });
  }

  // First label (in increasing order) with more than one component.
  std::optional<Label> disconnected_label() const {
    for (const auto& [label, count] : components) {
      if (count > 1) return label;
    }
    return std::nullopt;
  }

  SignVector sign_of(Label label) const {
    return SignVector{compact_bits(label, scope.bits()), scope.size()};
  }
};

template <class C>
concept CellComplex = requires(const C& c, std::size_t i) {
  { c.cell_count() } -> std::convertible_to<std::size_t>;
  { c.label(i) } -> std::convertible_to<Label>;
  c.for_each_adjacency([](std::uint32_t, std::uint32_t) {});
};

template <CellComplex C>
Census region_census(const C& complex, SurfaceSet scope) {
  const Label mask = scope.bits();
  const std::size_t n = complex.cell_count();
  DisjointSets sets(n);
  complex.for_each_adjacency([&](std::uint32_t a, std::uint32_t b) {
    if (((complex.label(a) ^ complex.label(b)) & mask) == 0) sets.unite(a, b);
  });
  Census census;
  census.scope = scope;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (sets.is_root(c)) ++census.components[complex.label(c) & mask];
  }
  return census;
}

inline Census region_census(const LabeledComplex& complex) {
  return region_census(complex, SurfaceSet::all(complex.label_bits()));
}

}  // namespace venn
