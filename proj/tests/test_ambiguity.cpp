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

#include "asc/ambiguity.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "asc/codes.hpp"
#include "gtest/gtest.h"

namespace asc {
namespace {

const StabilizerCode& code(const char* id) { return catalog_entry(id).code; }

Pauli local(const char* label, int n) { return parse_pauli(label, n); }

TEST(AmbiguousClass, ThreeQubitCodeOnTwoCoordinates) {
  const std::vector<int> coords = {0, 1};
  const AmbiguousClass cls = build_class(code("q3"), ErrorSet::on_coordinates(3, coords));
  EXPECT_EQ(cls.order(), 4);
  EXPECT_EQ(cls.degree(), 4);
  EXPECT_EQ(cls.size(), 16);
  const AmbiguousSet* trivial = cls.find(Syndrome::parse("++"));
  ASSERT_NE(trivial, nullptr);
  const std::vector<Pauli> expected = {parse_pauli("III"), parse_pauli("IYI"), parse_pauli("XXI"), parse_pauli("XZI")};
  EXPECT_EQ(trivial->errors, expected);
}

TEST(AmbiguousClass, SetsAreSyndromeClasses) {
  for (const char* id : {"q3", "C1", "C2", "C3"}) {
    const auto& c = code(id);
    const AmbiguousClass cls = build_class(c, ErrorSet::on_coordinates(c.n(), std::vector<int>{0, 1}));
    std::set<Syndrome> seen;
    for (const auto& s : cls.sets()) {
      EXPECT_TRUE(seen.insert(s.syndrome).second);
      for (const Pauli& e : s.errors) EXPECT_EQ(syndrome_of(e, c), s.syndrome);
    }
  }
}

TEST(AmbiguousClass, RejectsDuplicateErrors) {
  ErrorSet errors{3, {parse_pauli("XII"), parse_pauli("XII")}};
  EXPECT_THROW(build_class(code("q3"), errors), std::invalid_argument);
}

TEST(AmbiguousClass, FiveQubitCodeWeightTwo) {
  const AmbiguousClass cls = build_class(code("q5"), ErrorSet::up_to_weight(5, 2));
  EXPECT_EQ(cls.size(), 106);
  EXPECT_EQ(cls.order(), 16);
  EXPECT_EQ(cls.degree(), 7);
  int sevens = 0;
  for (const auto& s : cls.sets()) {
    if (s.syndrome.trivial()) {
      EXPECT_EQ(s.errors.size(), 1u);
    } else {
      sevens += s.errors.size() == 7;
    }
  }
  EXPECT_EQ(sevens, 15);
}

TEST(AmbiguousClass, FiveQubitPartialListingMembership) {
  // Printed partial listing: syndrome -> errors (1-based shorthand).
  const std::map<std::string, std::vector<const char*>> listing = {
      {"++++", {"I"}},
      {"+++-", {"X1", "Y2Y3", "X3Y4"}},
      {"++-+", {"Y1", "Z2Z3", "Y3X4"}},
      {"++--", {"Z1", "X2X3", "Z3Z4"}},
      {"+-++", {"X2", "Z1X3", "Y3Z4"}},
      {"+-+-", {"Y5", "X1X2", "Z2Y3"}},
      {"+--+", {"Y4", "Y1X2", "Y2Z3"}},
      {"+---", {"X3", "Z1X2", "Z2X4"}},
      {"-+++", {"Y3", "X1Y2", "X2Z4"}},
      {"-++-", {"Y2", "X1Y3", "Z3Y4"}},
      {"-+-+", {"X4", "Z1Y2", "Z2X3"}},
      {"-+--", {"X5", "Y1Y2", "X2Z3"}},
      {"--++", {"Z4", "X1Z2", "X2Y3"}},
      {"--+-", {"Z2", "Y1Z3", "X3X4"}},
      {"---+", {"Z5", "Z1Z2", "X1Z3"}},
      {"----", {"Z3", "Y1Z2", "Y2Y4"}},
  };
  const AmbiguousClass cls = build_class(code("q5"), ErrorSet::up_to_weight(5, 2));
  int checked = 0;
  for (const auto& [syndrome, errors] : listing) {
    const AmbiguousSet* set = cls.find(Syndrome::parse(syndrome));
    ASSERT_NE(set, nullptr) << syndrome;
    for (const char* e : errors) {
      EXPECT_TRUE(set->contains(local(e, 5))) << syndrome << " " << e;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 46);
  const AmbiguousSet* first = cls.find(Syndrome::parse("+++-"));
  for (const char* e : {"X4X5", "Z3Z5", "X2Y5", "Z2Z4"}) EXPECT_TRUE(first->contains(local(e, 5))) << e;
}

TEST(AmbiguityNormalizer, FiveQubitMappingsFromX1) {
  const auto& q5 = code("q5");
  const Pauli x1 = local("X1", 5);
  const std::vector<std::pair<const char*, const char*>> expected = {
      {"Y2Y3", "Z_L"}, {"X3Y4", "-Y_L"}, {"X4X5", "Z_L"}, {"Z3Z5", "-X_L"}, {"X2Y5", "-Y_L"}, {"Z2Z4", "-X_L"}};
  for (const auto& [other, action] : expected) {
    const AmbiguityNormalizer an = ambiguity_normalizer(x1, local(other, 5), q5);
    EXPECT_EQ(an.action.str(), action) << other;
    EXPECT_EQ(an.product.unsigned_part(), (x1 * local(other, 5)).unsigned_part());
  }
}

TEST(AmbiguityNormalizer, DegeneracySplit) {
  const auto& q5 = code("q5");
  const Pauli e4 = local("Z3Z5", 5), e5 = local("X2Y5", 5), e6 = local("Z2Z4", 5);
  const Pauli degenerate = e4 * e6;
  EXPECT_TRUE(in_stabilizer(degenerate, q5) || in_stabilizer(degenerate.with_phase(degenerate.phase() + 2), q5));
  const Pauli logical = (e4 * e5).unsigned_part();
  EXPECT_FALSE(in_stabilizer(logical, q5) || in_stabilizer(logical.with_phase(2), q5));
  EXPECT_FALSE(logical_action(logical, q5).logical.is_identity());
}

TEST(AmbiguityNormalizer, ThreeQubitPairs) {
  const auto& q3 = code("q3");
  const AmbiguityNormalizer an = ambiguity_normalizer(parse_pauli("ZZI"), parse_pauli("YII"), q3);
  EXPECT_EQ(an.action.str(), "-X_L");
  EXPECT_EQ(an.full_action.str(), "iX_L");
  EXPECT_FALSE(an.commuting);
  EXPECT_EQ(an.reversed, an.product.dagger());
  const AmbiguityNormalizer back = ambiguity_normalizer(parse_pauli("YII"), parse_pauli("ZZI"), q3);
  EXPECT_EQ(back.action.str(), "-X_L");
  EXPECT_EQ(back.full_action.str(), "-iX_L");
  EXPECT_THROW(ambiguity_normalizer(parse_pauli("XII"), parse_pauli("YII"), q3), std::invalid_argument);
}

void expect_group_structure(const std::vector<Pauli>& checks, int n, const std::vector<int>& coords) {
  const GroupReport g = verify_ambiguous_group(checks, n, coords);
  ASSERT_TRUE(g.ok());
  const auto cosets = quotient_structure(checks, n, coords);
  std::set<std::uint32_t> covered;
  for (const auto& c : cosets) {
    EXPECT_EQ(c.elements.size(), g.group.size());
    for (const Pauli& e : c.elements) {
      EXPECT_TRUE(covered.insert(restrict_to(e, coords).basis_index()).second);
      EXPECT_EQ(syndrome_of(e, checks), c.syndrome);
    }
  }
  EXPECT_EQ(covered.size(), std::size_t{1} << (2 * coords.size()));
}

TEST(AmbiguousGroup, SubgroupWithEqualCosetsOnCatalogAndCoarseGrainedCodes) {
  for (const char* id : {"q3", "C1", "C2", "C3", "q5"}) {
    const auto& c = code(id);
    expect_group_structure(c.generators(), c.n(), {0, 1});
  }
  const auto& q5 = code("q5");
  for (int drop = 0; drop < 4; ++drop) {
    std::vector<Pauli> checks = q5.generators();
    checks.erase(checks.begin() + drop);
    expect_group_structure(checks, 5, {0, 1});
    expect_group_structure(checks, 5, {2, 4});
  }
}

TEST(AmbiguousGroup, ThreeQubitGroup) {
  const GroupReport g = verify_ambiguous_group(code("q3"), std::vector<int>{0, 1});
  const std::vector<Pauli> expected = {parse_pauli("III"), parse_pauli("IYI"), parse_pauli("XXI"), parse_pauli("XZI")};
  EXPECT_EQ(g.group, expected);
}

TEST(Hamming, BoundExamples) {
  EXPECT_TRUE(hamming_check(5, 1, 16).satisfied);
  EXPECT_TRUE(hamming_check(5, 1, 16).perfect);
  EXPECT_TRUE(hamming_check(3, 1, 4).perfect);
  EXPECT_FALSE(hamming_check(5, 1, 106).satisfied);
}

TEST(Hamming, DegreeFormulaMatchesMeasuredDegree) {
  for (const char* id : {"q3", "C1", "C2", "C3", "q5"}) {
    const auto& c = code(id);
    const AmbiguousClass cls = build_class(c, ErrorSet::on_coordinates(c.n(), std::vector<int>{0, 1}));
    EXPECT_EQ(degree_formula(c.n(), c.k(), 2), cls.degree()) << id;
  }
  EXPECT_EQ(degree_formula(3, 1, 2), 4);
  EXPECT_EQ(degree_formula(4, 1, 2), 2);
  EXPECT_EQ(degree_formula(5, 1, 2), 1);
}

TEST(CoarseGraining, DroppingLastFiveQubitGeneratorPairsSets) {
  const AmbiguousClass cls = build_class(code("q5"), ErrorSet::up_to_weight(5, 1));
  const std::vector<int> dropped = {3};
  const AmbiguousClass coarse = coarse_grain(cls, dropped);
  EXPECT_EQ(coarse.order(), 8);
  EXPECT_EQ(coarse.degree(), 2);
  const AmbiguousSet* zero = coarse.find(Syndrome::parse("+++"));
  ASSERT_NE(zero, nullptr);
  EXPECT_TRUE(zero->contains(Pauli(5)));
  EXPECT_TRUE(zero->contains(local("X1", 5)));
  const AmbiguousSet* one = coarse.find(Syndrome::parse("++-"));
  ASSERT_NE(one, nullptr);
  EXPECT_TRUE(one->contains(local("Y1", 5)));
  EXPECT_TRUE(one->contains(local("Z1", 5)));
}

}  // namespace
}  // namespace asc
