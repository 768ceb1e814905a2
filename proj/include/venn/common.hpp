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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace venn {

// Surface i (1-based) is stored in bit i-1 of a Label. A set bit means the
// exterior of the surface, a clear bit its interior.
using Label = std::uint32_t;

inline constexpr int kMaxSurfaces = 32;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on an input outside its domain (e.g. a theorem
// checker on a non-simple diagram).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed file or unparsable text.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A memory or enumeration budget would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

constexpr Label low_bits(int n) {
  return n >= 32 ? ~Label{0} : (Label{1} << n) - 1;
}

constexpr Label surface_bit(int id) { return Label{1} << (id - 1); }

// Packs the bits of `label` selected by `mask` into the low bits, keeping
// their relative order.
constexpr Label compact_bits(Label label, Label mask) {
  Label out = 0;
  int pos = 0;
  for (Label m = mask; m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m);
    out |= ((label >> bit) & 1u) << pos;
    ++pos;
  }
  return out;
}

// Inverse of compact_bits: spreads the low bits of `packed` onto `mask`.
constexpr Label expand_bits(Label packed, Label mask) {
  Label out = 0;
  int pos = 0;
  for (Label m = mask; m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m);
    out |= ((packed >> pos) & 1u) << bit;
    ++pos;
  }
  return out;
}

// A set of surface ids (1-based).
class SurfaceSet {
 public:
  constexpr SurfaceSet() = default;
  constexpr explicit SurfaceSet(Label bits) : bits_(bits) {}

  static constexpr SurfaceSet all(int n) { return SurfaceSet(low_bits(n)); }

  static SurfaceSet of(std::initializer_list<int> ids) {
    return of(std::vector<int>(ids));
  }

  static SurfaceSet of(const std::vector<int>& ids) {
    Label bits = 0;
    for (int id : ids) {
      if (id < 1 || id > kMaxSurfaces) {
        throw PreconditionError("surface id out of range: " + std::to_string(id));
      }
      bits |= surface_bit(id);
    }
    return SurfaceSet(bits);
  }

  constexpr Label bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int id) const { return (bits_ & surface_bit(id)) != 0; }
  constexpr bool subset_of(SurfaceSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr SurfaceSet with(int id) const { return SurfaceSet(bits_ | surface_bit(id)); }
  constexpr SurfaceSet without(int id) const { return SurfaceSet(bits_ & ~surface_bit(id)); }
  constexpr SurfaceSet operator|(SurfaceSet o) const { return SurfaceSet(bits_ | o.bits_); }
  constexpr SurfaceSet operator&(SurfaceSet o) const { return SurfaceSet(bits_ & o.bits_); }
  constexpr SurfaceSet minus(SurfaceSet o) const { return SurfaceSet(bits_ & ~o.bits_); }

  std::vector<int> ids() const {
    std::vector<int> out;
    for (Label m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int id : ids()) {
      if (!first) s += ",";
      s += std::to_string(id);
      first = false;
    }
    return s + "}";
  }

  constexpr auto operator<=>(const SurfaceSet&) const = default;

 private:
  Label bits_ = 0;
};

// Region label over an ordered list of surfaces; position j of the string
// form is epsilon_{j+1}.
struct SignVector {
  Label bits = 0;
  int size = 0;

  constexpr bool interior(int position) const { return ((bits >> (position - 1)) & 1u) == 0; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(size), '1');
    for (int j = 0; j < size; ++j) s[static_cast<std::size_t>(j)] = ((bits >> j) & 1u) ? '1' : '0';
    return s;
  }

  static SignVector parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxSurfaces)) {
      throw FormatError("sign vector longer than 32 bits");
    }
    SignVector v;
    v.size = static_cast<int>(text.size());
    for (std::size_t j = 0; j < text.size(); ++j) {
      if (text[j] == '1') {
        v.bits |= Label{1} << j;
      } else if (text[j] != '0') {
        throw FormatError("sign vector must be a 0/1 string: '" + std::string(text) + "'");
      }
    }
    return v;
  }

  constexpr auto operator<=>(const SignVector&) const = default;
};

// Outcome of a structural validation: one entry per failed invariant.
struct ValidationIssue {
  std::string check;   // short invariant name, e.g. "involution", "border"
  std::string detail;  // offending dart / vertex / cell
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool failed(std::string_view check) const {
    for (const auto& i : issues) {
      if (i.check == check) return true;
    }
    return false;
  }
  void fail(std::string check, std::string detail) {
    issues.push_back({std::move(check), std::move(detail)});
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& i : issues) {
      if (!s.empty()) s += "; ";
      s += i.check + ": " + i.detail;
    }
    return s;
  }
};

// Iterates all subsets of {1..n} with exactly r elements in colexicographic
// order (increasing bitmask), calling f(SurfaceSet) until it returns false.
template <class F>
void for_each_subset_of_size(int n, int r, F&& f) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    f(SurfaceSet{});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << r) - 1;
  while (v < limit) {
    if (!f(SurfaceSet(static_cast<Label>(v)))) return;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t rr = v + c;
    v = (((rr ^ v) >> 2) / c) | rr;
  }
}

}  // namespace venn
