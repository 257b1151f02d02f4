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

#include "pdiag/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace pdiag {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_point: return "invalid point";
    case Errc::invalid_multiplicity: return "invalid multiplicity";
    case Errc::too_many_points: return "too many points";
    case Errc::representation_too_short: return "representation too short";
    case Errc::size_guard: return "size guard exceeded";
    case Errc::domain: return "domain error";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::parse: return "parse error";
    case Errc::oracle_mismatch: return "oracle mismatch";
  }
  return "unknown error";
}

namespace {

std::string describe(const Point& p) {
  return "(" + std::to_string(p.birth) + ", " + std::to_string(p.death) + ")";
}

// -0.0 and 0.0 compare equal but would otherwise order inconsistently in
// maps keyed by operator<=>; fold them together.
double normalize_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

void validate_point(const Point& p, const DiagramOptions& options) {
  if (!std::isfinite(p.birth) || !std::isfinite(p.death)) {
    throw Error(Errc::invalid_point,
                "coordinates must be finite (essential classes are not "
                "supported): " + describe(p));
  }
  if (!options.allow_negative && (p.birth < 0.0 || p.death < 0.0)) {
    throw Error(Errc::invalid_point,
                "coordinates must be non-negative: " + describe(p));
  }
  if (p.birth > p.death) {
    throw Error(Errc::invalid_point, "birth exceeds death: " + describe(p));
  }
}

std::uint64_t PersistenceDiagram::multiplicity(const Point& p) const noexcept {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), p,
      [](const Entry& e, const Point& q) { return e.point < q; });
  if (it != entries_.end() && it->point == p) return it->multiplicity;
  return 0;
}

std::vector<Point> PersistenceDiagram::expanded() const {
  std::vector<Point> out;
  out.reserve(total_multiplicity(*this));
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.point);
  return out;
}

PersistenceDiagram diagram_from_points(std::span<const PointRecord> records,
                                       const DiagramOptions& options,
                                       std::size_t* dropped_diagonal) {
  std::map<Point, std::uint64_t> counts;
  std::size_t dropped = 0;
  std::uint64_t total = 0;
  for (const auto& r : records) {
    const Point p{normalize_zero(r.birth), normalize_zero(r.death)};
    validate_point(p, options);
    if (r.multiplicity <= 0) {
      throw Error(Errc::invalid_multiplicity,
                  "multiplicity must be positive, got " +
                      std::to_string(r.multiplicity));
    }
    if (p.is_diagonal()) {
      ++dropped;
      continue;
    }
    const auto m = static_cast<std::uint64_t>(r.multiplicity);
    if (m > kMaxExpandedPoints || total + m > kMaxExpandedPoints) {
      throw Error(Errc::too_many_points,
                  "total multiplicity exceeds " +
                      std::to_string(kMaxExpandedPoints));
    }
    total += m;
    counts[p] += m;
  }
  PersistenceDiagram d;
  d.entries_.reserve(counts.size());
  for (const auto& [p, m] : counts) d.entries_.push_back({p, m});
  if (dropped_diagonal != nullptr) *dropped_diagonal = dropped;
  return d;
}

PersistenceDiagram diagram_from_points(std::span<const Point> points,
                                       const DiagramOptions& options) {
  std::vector<PointRecord> records;
  records.reserve(points.size());
  for (const auto& p : points) records.push_back({p.birth, p.death, 1});
  return diagram_from_points(records, options);
}

std::uint64_t total_multiplicity(const PersistenceDiagram& d) noexcept {
  std::uint64_t total = 0;
  for (const auto& e : d.entries()) total += e.multiplicity;
  return total;
}

std::optional<std::uint64_t> stratum_index(const PersistenceDiagram& d) {
  std::uint64_t n = std::max<std::uint64_t>(1, d.support_size());
  for (const auto& e : d.entries()) {
    const double c = std::ceil(e.point.death);
    if (c >= 18446744073709551616.0) return std::nullopt;
    if (c > 0.0) n = std::max(n, static_cast<std::uint64_t>(c));
  }
  return n;
}

bool in_stratum(const PersistenceDiagram& d, std::uint64_t n) {
  if (n == 0 || d.support_size() > n) return false;
  return std::all_of(d.entries().begin(), d.entries().end(),
                     [n](const auto& e) {
                       return e.point.death <= static_cast<double>(n);
                     });
}

Point diagonal_projection(const Point& p) noexcept {
  const double mid = p.birth + (p.death - p.birth) / 2.0;
  return {mid, mid};
}

namespace {

std::vector<Point> pad_sequence(const PersistenceDiagram& d, std::uint64_t k,
                                const std::vector<Point>& padding_sources) {
  const std::uint64_t total = total_multiplicity(d);
  if (k < total) {
    throw Error(Errc::representation_too_short,
                "representation too short: length " + std::to_string(k) +
                    " < total multiplicity " + std::to_string(total));
  }
  std::vector<Point> seq = d.expanded();
  seq.reserve(k);
  for (std::uint64_t i = 0; seq.size() < k; ++i) {
    seq.push_back(padding_sources.empty()
                      ? Point{0.0, 0.0}
                      : padding_sources[i % padding_sources.size()]);
  }
  return seq;
}

std::vector<Point> projections(const PersistenceDiagram& d) {
  std::vector<Point> out = d.expanded();
  for (auto& p : out) p = diagonal_projection(p);
  return out;
}

}  // namespace

std::vector<Point> sequential_representation(const PersistenceDiagram& d,
                                             std::uint64_t k) {
  return pad_sequence(d, k, projections(d));
}

std::vector<Point> sequential_representation(
    const PersistenceDiagram& d, std::uint64_t k,
    const PersistenceDiagram& partner) {
  std::vector<Point> sources = projections(partner);
  std::vector<Point> own = projections(d);
  sources.insert(sources.end(), own.begin(), own.end());
  return pad_sequence(d, k, sources);
}

bool is_sequential_representation(std::span<const Point> sequence,
                                  const PersistenceDiagram& d) {
  std::map<Point, std::uint64_t> seen;
  for (const auto& p : sequence) {
    if (d.multiplicity(p) > 0) {
      ++seen[p];
    } else if (!p.is_diagonal()) {
      return false;
    }
  }
  for (const auto& e : d.entries()) {
    auto it = seen.find(e.point);
    if (it == seen.end() || it->second != e.multiplicity) return false;
  }
  return true;
}

}  // namespace pdiag
