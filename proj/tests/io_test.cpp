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

#include <cstdlib>
#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "pdiag/sampling.hpp"

namespace pdiag {
namespace {

using Records = std::vector<PointRecord>;

std::size_t error_line(std::string_view text) {
  try {
    parse_diagram(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseDiagram, Examples) {
  EXPECT_TRUE(parse_diagram("").diagram.empty());

  const auto merged = parse_diagram("# header\n1 3\n1 3\n");
  EXPECT_EQ(merged.diagram, diagram_from_points(Records{{1, 3, 2}}));
  EXPECT_EQ(merged.dropped_diagonal, 0u);

  const auto dropped = parse_diagram("0 2 1\n5 5 9\n");
  EXPECT_EQ(dropped.diagram, diagram_from_points(Records{{0, 2, 1}}));
  EXPECT_EQ(dropped.dropped_diagonal, 1u);
}

TEST(ParseDiagram, AcceptsCrlfBlankLinesAndIndentedComments) {
  const auto d = parse_diagram("\r\n  # note\r\n0.5\t2.25 3\r\n\n1e-1 4E0\r\n");
  EXPECT_EQ(d.diagram, diagram_from_points(Records{{0.5, 2.25, 3}, {0.1, 4, 1}}));
}

TEST(ParseDiagram, NoTrailingNewline) {
  EXPECT_EQ(parse_diagram("1 2").diagram, diagram_from_points(Records{{1, 2, 1}}));
}

TEST(ParseDiagram, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("1 2\nx 3\n"), 2u);            // malformed number
  EXPECT_EQ(error_line("1 2\n\n3 1\n"), 3u);          // birth > death
  EXPECT_EQ(error_line("0 inf\n"), 1u);               // essential class
  EXPECT_EQ(error_line("0 nan\n"), 1u);
  EXPECT_EQ(error_line("0 1 0\n"), 1u);               // non-positive multiplicity
  EXPECT_EQ(error_line("0 1 -3\n"), 1u);
  EXPECT_EQ(error_line("0 1 1.5\n"), 1u);             // fractional multiplicity
  EXPECT_EQ(error_line("# c\n0 1 1 7\n"), 2u);        // too many fields
  EXPECT_EQ(error_line("0\n"), 1u);                   // too few fields
  EXPECT_EQ(error_line("-1 2\n"), 1u);                // negative coordinate
  EXPECT_EQ(error_line("1 2x\n"), 1u);                // trailing garbage
}

TEST(ParseDiagram, RelaxedModeAcceptsNegatives) {
  const auto d = parse_diagram("-1 2\n", DiagramOptions{true});
  EXPECT_EQ(d.diagram.multiplicity({-1, 2}), 1u);
}

TEST(Serialize, CanonicalText) {
  const auto d = diagram_from_points(Records{{5, 8, 1}, {2, 5, 1}, {0.1, 0.30000000000000004, 2}});
  EXPECT_EQ(serialize_diagram(d), "0.1 0.30000000000000004 2\n2 5 1\n5 8 1\n");
  EXPECT_EQ(serialize_diagram(PersistenceDiagram{}), "");
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1e21), "1e+21");
  for (double x : {0.1, 1.0 / 3.0, 123456.789, 5e-324, 1.7976931348623157e308}) {
    EXPECT_EQ(std::strtod(format_number(x).c_str(), nullptr), x);
  }
}

TEST(RoundTrip, SerializeThenParseIsIdentity) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = random_diagram(rng, 10, 1000.0);
    const auto back = parse_diagram(serialize_diagram(d));
    EXPECT_EQ(back.diagram, d);
    EXPECT_EQ(back.dropped_diagonal, 0u);
  }
}

}  // namespace
}  // namespace pdiag
