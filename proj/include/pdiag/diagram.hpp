// Copyright 2026 The pdiag Authors
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pdiag/error.hpp"

namespace pdiag {

/// Upper bound on the sum of multiplicities of a diagram. Matching works on
/// expanded copies, so this bounds every matching problem.
inline constexpr std::uint64_t kMaxExpandedPoints = 1'000'000;

/// A birth/death pair in the closed upper half-plane.
struct Point {
  double birth = 0.0;
  double death = 0.0;

  bool is_diagonal() const noexcept { return birth == death; }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

/// One input row: a point and how many times it occurs.
struct PointRecord {
  double birth = 0.0;
  double death = 0.0;
  std::int64_t multiplicity = 1;
};

struct DiagramOptions {
  /// Accept negative coordinates. Off by default: diagrams live in the
  /// non-negative quadrant.
  bool allow_negative = false;
};

/// A finite multiset of off-diagonal points, stored canonically: support
/// sorted by (birth, death), every multiplicity >= 1. Two diagrams are equal
/// exactly when their canonical entries are equal.
class PersistenceDiagram {
 public:
  struct Entry {
    Point point;
    std::uint64_t multiplicity = 0;

    friend auto operator<=>(const Entry&, const Entry&) = default;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  PersistenceDiagram() = default;

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Multiplicity at `p`; zero off the support (and on the diagonal).
  std::uint64_t multiplicity(const Point& p) const noexcept;

  /// Support points repeated by multiplicity, in canonical order.
  std::vector<Point> expanded() const;

  friend auto operator<=>(const PersistenceDiagram&,
                          const PersistenceDiagram&) = default;
  friend bool operator==(const PersistenceDiagram&,
                         const PersistenceDiagram&) = default;

 private:
  friend PersistenceDiagram diagram_from_points(std::span<const PointRecord>,
                                                const DiagramOptions&,
                                                std::size_t*);
  std::vector<Entry> entries_;
};

/// Validates a point against the half-plane constraints. Throws
/// Error{invalid_point}.
void validate_point(const Point& p, const DiagramOptions& options = {});

/// Builds the canonical diagram. Diagonal records are dropped and counted in
/// `dropped_diagonal` when non-null; duplicates are merged.
PersistenceDiagram diagram_from_points(std::span<const PointRecord> records,
                                       const DiagramOptions& options = {},
                                       std::size_t* dropped_diagonal = nullptr);

/// Convenience overload: every point with multiplicity one.
PersistenceDiagram diagram_from_points(std::span<const Point> points,
                                       const DiagramOptions& options = {});

/// Sum of multiplicities, which is also the length of the shortest
/// sequential representation.
std::uint64_t total_multiplicity(const PersistenceDiagram& d) noexcept;

/// Smallest n such that the diagram has at most n support points and every
/// death is at most n. Empty diagrams sit in stratum 1. Returns nullopt
/// ("unbounded") only when ceil(max death) does not fit in 64 bits.
std::optional<std::uint64_t> stratum_index(const PersistenceDiagram& d);

/// Membership test for the stratum of index n.
bool in_stratum(const PersistenceDiagram& d, std::uint64_t n);

/// Nearest diagonal point under the l-infinity metric.
Point diagonal_projection(const Point& p) noexcept;

/// Length-k sequence listing every support point by multiplicity in
/// canonical order, then k - total_multiplicity(d) diagonal points. Padding
/// cycles through the diagonal projections of the diagram's own expanded
/// points, or is (0,0) for the empty diagram.
std::vector<Point> sequential_representation(const PersistenceDiagram& d,
                                             std::uint64_t k);

/// As above, but padding cycles through the projections of `partner`'s
/// expanded points first, so the padded sequence is ready for matching.
std::vector<Point> sequential_representation(const PersistenceDiagram& d,
                                             std::uint64_t k,
                                             const PersistenceDiagram& partner);

/// Direct check of the two defining conditions: every support point occurs
/// exactly multiplicity times, and every other element is diagonal.
bool is_sequential_representation(std::span<const Point> sequence,
                                  const PersistenceDiagram& d);

}  // namespace pdiag
