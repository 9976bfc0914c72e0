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

#include "asc/reconstruct.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "asc/channel.hpp"
#include "asc/codes.hpp"
#include "gtest/gtest.h"

namespace asc {
namespace {

CodeFamily family(std::vector<std::string> ids) { return catalog_family(ids); }

double value(const ReconstructionReport& r, const char* label) {
  return r.values(parameter_index(parse_parameter(label, r.m), r.m));
}

bool resolved(const ReconstructionReport& r, const char* label) {
  return r.resolved[parameter_index(parse_parameter(label, r.m), r.m)];
}

/// The §VI-style plan: direct, U(I,X1X2) and its toggled variant on each code.
MeasurementPlan reference_plan(const CodeFamily& fam) {
  MeasurementPlan plan;
  for (const auto& pc : fam) {
    for (const char* prep : {"none", "U:I,X1X2", "T:auto;U:I,X1X2"}) {
      plan.entries.push_back({pc.id, logical_zero(1), parse_preprocessing(prep, pc.n())});
    }
  }
  return plan;
}

ProcessMatrix random_channel(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) a(r, c) = {g(rng), g(rng)};
  Eigen::MatrixXcd h = a * a.adjoint();
  return ProcessMatrix(2, h / h.trace().real());
}

TEST(Solve, RankDeficientSystemResolvesOnlyDeterminedColumns) {
  LinearSystem sys;
  sys.m = 1;
  sys.matrix.resize(2, 3);
  sys.matrix << 1, 0, 0,  //
      0, 1, 1;
  sys.rhs.resize(2);
  sys.rhs << 0.5, 0.3;
  sys.columns = {0, 1, 2};
  const SolveResult r = solve(sys);
  EXPECT_EQ(r.rank, 2);
  EXPECT_TRUE(r.resolved[0]);
  EXPECT_FALSE(r.resolved[1]);
  EXPECT_FALSE(r.resolved[2]);
  EXPECT_NEAR(r.values(0), 0.5, 1e-15);
  EXPECT_LT(r.residual, 1e-15);
}

TEST(Plan, DiagonalPlanCoversEveryCode) {
  const CodeFamily fam = family({"C1", "C2", "C3"});
  const MeasurementPlan plan = plan_diagonal(fam);
  std::set<std::string> codes;
  for (const auto& e : plan.entries) {
    EXPECT_TRUE(e.diagonal_stage());
    codes.insert(e.code_id);
  }
  EXPECT_EQ(codes.size(), 3u);
}

TEST(Plan, OffDiagonalTargetsWithinAllGroupsAreUnreachable) {
  // Y2 belongs to the ambiguous group of q3 only; with q3 alone (I,Y2) can
  // never be split into different sets.
  const CodeFamily fam = family({"q3"});
  const std::vector<std::pair<int, int>> target = {{0, static_cast<int>(parse_pauli("Y2", 2).basis_index())}};
  const MeasurementPlan plan = plan_offdiagonal(fam, target);
  EXPECT_TRUE(plan.entries.empty());
  ASSERT_EQ(plan.unreachable.size(), 1u);
}

TEST(Plan, JsonRoundTrip) {
  const CodeFamily fam = family({"C1", "C2", "C3"});
  const MeasurementPlan plan = reference_plan(fam);
  std::stringstream ss;
  write_plan_json(ss, plan);
  const MeasurementPlan back = read_plan_json(ss, fam);
  ASSERT_EQ(back.entries.size(), plan.entries.size());
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    EXPECT_EQ(back.entries[i].code_id, plan.entries[i].code_id);
    EXPECT_EQ(back.entries[i].input.name, plan.entries[i].input.name);
    EXPECT_EQ(back.entries[i].prep.str(), plan.entries[i].prep.str());
  }
  std::istringstream bad(R"({"entries":[{"code":"C9","input":"0L","preprocessing":"none"}]})");
  EXPECT_THROW(read_plan_json(bad, fam), std::invalid_argument);
}

TEST(Plan, ProbabilitiesRoundTrip) {
  const CodeFamily fam = family({"C1"});
  const MeasurementPlan plan = reference_plan(fam);
  const auto probs = collect_probabilities(plan, fam, make_toy_noise_EA(default_EA_params()));
  std::stringstream ss;
  write_probabilities(ss, probs, 17);
  const auto back = read_probabilities(ss, plan);
  ASSERT_EQ(back.size(), probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i)
    for (std::size_t j = 0; j < probs[i].outcomes.size(); ++j)
      EXPECT_EQ(back[i].outcomes[j].second, probs[i].outcomes[j].second);
}

TEST(RoundTrip, ToyNoiseOverThreeCodesWithReferencePlan) {
  const CodeFamily fam = family({"C1", "C2", "C3"});
  const ToyNoiseParams p = default_EA_params();
  const RoundTrip rt = qascd_round_trip(fam, make_toy_noise_EA(p), reference_plan(fam));
  EXPECT_LT(rt.max_error, 1e-12);
  for (const auto& param : chi_parameters(2)) {
    if (param.kind == ChiParameter::Kind::Diag) EXPECT_TRUE(rt.report.resolved[parameter_index(param, 2)]);
  }
  EXPECT_NEAR(value(rt.report, "Diag(I)"), p.delta, 1e-12);
  EXPECT_NEAR(value(rt.report, "Re(I,X1X2)"), p.c / 6, 1e-12);
  EXPECT_NEAR(value(rt.report, "Im(I,X1X2)"), p.d / 6, 1e-12);
  EXPECT_NEAR(value(rt.report, "Re(X2,X1)"), p.a / 6, 1e-12);
  EXPECT_NEAR(value(rt.report, "Im(X2,X1)"), -p.b / 6, 1e-12);
  EXPECT_NEAR(value(rt.report, "Re(Y2,X1Z2)"), p.e / 6, 1e-12);
  EXPECT_NEAR(value(rt.report, "Im(Y2,X1Z2)"), -p.f / 6, 1e-12);
  EXPECT_FALSE(rt.report.unresolved_parameters().empty());
}

TEST(RoundTrip, FullPlanOnRandomChannels) {
  std::mt19937 rng(41);
  const CodeFamily fam = family({"C1", "C2", "C3"});
  for (int t = 0; t < 3; ++t) {
    const ProcessMatrix chi = random_channel(rng);
    const RoundTrip rt = qascd_round_trip(fam, chi);
    EXPECT_LT(rt.max_error, 1e-10);
    EXPECT_EQ(rt.report.resolved_parameters().size(), 232u);
  }
}

TEST(RoundTrip, SingleCodeLeavesParametersUnresolved) {
  const CodeFamily fam = family({"C1"});
  const RoundTrip rt = qascd_round_trip(fam, make_toy_noise_EA(default_EA_params()));
  EXPECT_FALSE(rt.report.unresolved_parameters().empty());
  EXPECT_LT(rt.max_error, 1e-12);
}

TEST(RoundTrip, IdentityChannelRecoversUnitIdentityEntry) {
  const CodeFamily fam = family({"C1", "C2", "C3"});
  const RoundTrip rt = qascd_round_trip(fam, identity_channel(2));
  ASSERT_TRUE(resolved(rt.report, "Diag(I)"));
  EXPECT_NEAR(value(rt.report, "Diag(I)"), 1.0, 1e-12);
}

TEST(RoundTripProperty, CoverageIsMonotoneInTheFamily) {
  const ProcessMatrix chi = make_toy_noise_EA(default_EA_params());
  std::vector<std::string> ids;
  std::set<int> previous;
  for (const char* id : {"C1", "C2", "C3", "q3"}) {
    ids.push_back(id);
    const RoundTrip rt = qascd_round_trip(family(ids), chi);
    std::set<int> now;
    for (int i = 0; i < parameter_count(2); ++i)
      if (rt.report.resolved[i]) now.insert(i);
    for (int i : previous) EXPECT_TRUE(now.count(i)) << "lost parameter " << i << " adding " << id;
    previous = now;
  }
}

TEST(RoundTripProperty, StagedAndJointSolutionsAgree) {
  std::mt19937 rng(43);
  const CodeFamily fam = family({"C1", "C2", "C3"});
  const ProcessMatrix chi = random_channel(rng);
  MeasurementPlan plan = plan_diagonal(fam);
  plan.merge(plan_offdiagonal(fam, all_pairs(2)));
  const auto probs = collect_probabilities(plan, fam, chi);
  const ReconstructionReport staged = reconstruct(plan, fam, probs);
  const ReconstructionReport joint = reconstruct_joint(plan, fam, probs);
  int shared = 0;
  for (int i = 0; i < parameter_count(2); ++i) {
    if (staged.resolved[i] && joint.resolved[i]) {
      EXPECT_NEAR(staged.values(i), joint.values(i), 1e-10);
      ++shared;
    }
  }
  EXPECT_GT(shared, 200);
}

TEST(LogicalCoefficients, ScheduleRecoversFunctionalCoefficients) {
  const CodeFamily fam = family({"q3"});
  const ProtocolCode& q3 = fam.front();
  const ProcessMatrix chi = make_toy_noise_EA(default_EA_params());
  const auto inputs = input_schedule(1);
  for (const auto& set : q3.cls.sets()) {
    Eigen::VectorXd probs(4);
    for (int i = 0; i < 4; ++i) probs(i) = syndrome_distribution(q3, {inputs[i], {}}, chi).probability(set.syndrome);
    const Eigen::VectorXd solved = solve_logical_coefficients(inputs, probs);
    const Eigen::VectorXd expected = direct_functional(q3, set.syndrome).logical_coefficients(to_parameters(chi));
    EXPECT_LT((solved - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
  const std::vector<LogicalState> degenerate = {logical_zero(1), logical_zero(1), logical_plus(1), logical_up(1)};
  EXPECT_THROW(solve_logical_coefficients(degenerate, Eigen::VectorXd::Zero(4)), std::invalid_argument);
}

TEST(Resources, Counts) {
  EXPECT_EQ(resource_estimate(2, 1).preparations, 2);
  EXPECT_EQ(resource_estimate(2, 4).preparations, 5);
  EXPECT_EQ(resource_estimate(2, 2).configurations, 32);
  EXPECT_EQ(resource_estimate(2, 1).configurations, 16);
  EXPECT_EQ(resource_estimate(2, 4).configurations, 64);
  EXPECT_THROW(resource_estimate(0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace asc
