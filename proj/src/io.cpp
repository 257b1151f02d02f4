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

#include "pdiag/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <system_error>
#include <vector>

namespace pdiag {

namespace {

constexpr std::string_view kBlank = " \t\r\v\f";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(kBlank, pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = line.find_first_of(kBlank, pos);
    fields.push_back(line.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return fields;
}

double parse_coordinate(std::string_view field, std::size_t line,
                        const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, std::string(what) + " out of range: '" +
                               std::string(field) + "'");
  }
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("malformed ") + what + ": '" +
                               std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, std::string(what) +
                               " must be finite (essential classes with "
                               "infinite death are not supported)");
  }
  return value;
}

std::int64_t parse_multiplicity(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "malformed multiplicity: '" + std::string(field) + "'");
  }
  if (value <= 0) {
    throw ParseError(line, "multiplicity must be positive, got " + std::to_string(value));
  }
  return value;
}

}  // namespace

ParsedDiagram parse_diagram(std::string_view text, const DiagramOptions& options) {
  std::vector<PointRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected 'birth death [multiplicity]', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    PointRecord r;
    r.birth = parse_coordinate(fields[0], line_no, "birth");
    r.death = parse_coordinate(fields[1], line_no, "death");
    if (fields.size() == 3) r.multiplicity = parse_multiplicity(fields[2], line_no);
    try {
      validate_point({r.birth, r.death}, options);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    records.push_back(r);
  }
  ParsedDiagram out;
  out.diagram = diagram_from_points(records, options, &out.dropped_diagonal);
  return out;
}

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

std::string serialize_diagram(const PersistenceDiagram& d) {
  std::string out;
  for (const auto& e : d.entries()) {
    out += format_number(e.point.birth);
    out += ' ';
    out += format_number(e.point.death);
    out += ' ';
    out += std::to_string(e.multiplicity);
    out += '\n';
  }
  return out;
}

}  // namespace pdiag
