// Copyright 2026 The asc-lab Authors
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

#include "asc/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "asc/codes.hpp"
#include "gtest/gtest.h"

namespace asc {
namespace {

const std::vector<int> kFirstTwo = {0, 1};

TEST(RenderTable, AlignsColumnsAndTrimsLines) {
  const std::string out = render_table({{"a", "bb", "c"}, {"ddd", "", ""}});
  EXPECT_EQ(out, "a    bb  c\nddd\n");
}

TEST(QuotientTable, ThreeQubitCodeLayout) {
  const std::string expected =
      "++    +-    -+    --    Normalizer\n"
      "I     X1    Y1    Z1    I_L\n"
      "Y2    X1Y2  Y1Y2  Z1Y2  Y_L\n"
      "X1X2  X2    Z1X2  Y1X2  Z_L\n"
      "X1Z2  Z2    Z1Z2  Y1Z2  -X_L\n";
  EXPECT_EQ(quotient_table(catalog_entry("q3").code, kFirstTwo), expected);
}

TEST(NormalizerTable, ThreeQubitCodeColumnsAndNotes) {
  const std::string out = normalizer_table(catalog_entry("q3").code, kFirstTwo);
  EXPECT_EQ(out.substr(0, out.find('\n')), "I_L  -X_L  Y_L  Z_L");
  EXPECT_NE(out.find("III  XZI   IYI  XXI\n"), std::string::npos);
  EXPECT_NE(out.find("YXY acts as +X_L (column -X_L)"), std::string::npos);
  EXPECT_NE(out.find("ZZZ acts as -Z_L (column Z_L)"), std::string::npos);
}

TEST(NormalizerTable, FiveQubitCodeHasSixtyFourEntries) {
  const std::string out = normalizer_table(catalog_entry("q5").code, kFirstTwo);
  const auto lines = std::count(out.begin(), out.end(), '\n');
  // Header plus 16 rows; notes may follow.
  EXPECT_GE(lines, 17);
  int cells = 0;
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  for (int r = 0; r < 16 && std::getline(in, line); ++r) {
    std::istringstream words(line);
    std::string w;
    while (words >> w) ++cells;
  }
  EXPECT_EQ(cells, 64);
}

TEST(SignTable, FirstCodeOfTheFamily) {
  const auto& c1 = catalog_entry("C1").code;
  const AmbiguousClass cls = build_class(c1, ErrorSet::on_coordinates(4, kFirstTwo));
  const std::string expected =
      "C1    I   X1    X2  Y1    Z1    X1X2  Y1X2  Z1X2\n"
      "      Y2  X1Y2  Z2  Y1Y2  Z1Y2  X1Z2  Y1Z2  Z1Z2\n"
      "XIIX  +   +     +   -     -     +     -     -\n"
      "YIXY  +   -     +   +     -     -     +     -\n"
      "YYZZ  +   -     -   +     -     +     -     +\n";
  EXPECT_EQ(sign_table("C1", c1, cls), expected);
}

TEST(Reports, GroupAndHamming) {
  const auto& q3 = catalog_entry("q3").code;
  const std::string g = group_report(q3, kFirstTwo);
  EXPECT_NE(g.find("ambiguous group: I Y2 X1X2 X1Z2"), std::string::npos);
  EXPECT_NE(g.find("-> subgroup"), std::string::npos);
  const AmbiguousClass cls = build_class(q3, ErrorSet::on_coordinates(3, kFirstTwo));
  const std::string h = hamming_report(q3, cls, 2);
  EXPECT_NE(h.find("violated"), std::string::npos);
  EXPECT_NE(h.find("measured gamma = 4 (match)"), std::string::npos);
  EXPECT_NE(class_summary(cls).find("order sigma = 4, degree gamma = 4"), std::string::npos);
}

}  // namespace
}  // namespace asc
