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

#include <cstddef>
#include <string>
#include <string_view>

#include "pdiag/diagram.hpp"

namespace pdiag {

struct ParsedDiagram {
  PersistenceDiagram diagram;
  std::size_t dropped_diagonal = 0;
};

/// Parses the line format `birth death [multiplicity]`. Blank lines and lines
/// whose first non-blank character is '#' are skipped; LF and CRLF endings
/// are accepted. Throws ParseError carrying the offending line number.
ParsedDiagram parse_diagram(std::string_view text,
                            const DiagramOptions& options = {});

/// Canonical text form: one `birth death multiplicity` line per support
/// point in canonical order, LF terminated, shortest round-trip decimals.
std::string serialize_diagram(const PersistenceDiagram& d);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace pdiag
