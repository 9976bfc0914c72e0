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

#include "asc/simulate.hpp"

#include <random>
#include <stdexcept>

#include "asc/channel.hpp"
#include "asc/codes.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace asc {
namespace {

using testing::max_abs;

ProtocolCode protocol(const char* id) {
  const auto& e = catalog_entry(id);
  return make_protocol_code(id, e.code, e.coords);
}

/// Random Hermitian chi with unit diagonal mass.
ProcessMatrix random_chi(int m, std::mt19937& rng) {
  const int d = 1 << (2 * m);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = {g(rng), g(rng)};
  Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
  return ProcessMatrix(m, h / h.trace().real());
}

double max_functional_gap(const ProtocolCode& pc, const Configuration& config, const ProcessMatrix& chi) {
  const Distribution dense = syndrome_distribution(pc, config, chi);
  const Eigen::VectorXd params = to_parameters(chi);
  const Eigen::VectorXd expect = state_expectations(config.input.amplitudes);
  double gap = 0;
  for (const auto& [s, p] : dense.outcomes) {
    const ProbabilityFunctional f = outcome_functional(pc, config.prep, s);
    gap = std::max(gap, std::abs(f.evaluate(params, expect) - p));
  }
  return gap;
}

TEST(LogicalStates, NamesAndAmplitudes) {
  EXPECT_EQ(logical_zero(1).name, "0L");
  EXPECT_EQ(logical_plus(1).name, "+L");
  EXPECT_EQ(logical_up(1).name, "upL");
  const auto schedule = input_schedule(1);
  ASSERT_EQ(schedule.size(), 4u);
  EXPECT_EQ(input_schedule(2).size(), 16u);
  for (const auto& s : input_schedule(2)) {
    EXPECT_NEAR(s.amplitudes.norm(), 1.0, 1e-14);
    const LogicalState back = parse_logical_state(s.name, 2);
    EXPECT_LT(max_abs(back.amplitudes - s.amplitudes), 1e-15) << s.name;
  }
  const Eigen::VectorXd e = state_expectations(logical_up(1).amplitudes);
  EXPECT_NEAR(e(2), 1.0, 1e-14);  // <Y_L> of |up_L>
  EXPECT_THROW(parse_logical_state("1L", 1), std::invalid_argument);
  EXPECT_THROW(parse_logical_state("0L*0L", 1), std::invalid_argument);
}

TEST(Preprocessing, ParseForms) {
  EXPECT_FALSE(parse_preprocessing("none", 3).unitary);
  const Preprocessing u = parse_preprocessing("U:I,X1X2", 4);
  EXPECT_TRUE(u.unitary);
  EXPECT_EQ(u.eb, parse_pauli("XXII"));
  EXPECT_EQ(parse_preprocessing("T:auto;U:I,X1X2", 4).toggle, Preprocessing::Toggle::Auto);
  EXPECT_EQ(parse_preprocessing("T:auto;U:I,X1X2", 4).str(), "T:auto;U:I,X1X2");
  EXPECT_THROW(parse_preprocessing("T:auto", 4), std::invalid_argument);
  EXPECT_THROW(parse_preprocessing("U:I", 4), std::invalid_argument);
  EXPECT_THROW(parse_preprocessing("U:I,-X1", 4), std::invalid_argument);
}

TEST(Preprocessing, RejectsInvalidConfigurations) {
  const ProtocolCode c1 = protocol("C1");
  auto check = [&](const char* prep) {
    validate_configuration(c1, {logical_zero(1), parse_preprocessing(prep, 4)});
  };
  EXPECT_NO_THROW(check("U:I,X1X2"));
  EXPECT_THROW(check("U:I,Y2"), std::invalid_argument);     // mutually ambiguous
  EXPECT_THROW(check("U:X1,X1"), std::invalid_argument);    // not distinct
  EXPECT_THROW(check("U:I,X3"), std::invalid_argument);     // outside the noisy coordinates
  EXPECT_THROW(check("T:+-;U:I,X1X2"), std::invalid_argument);  // wrong sign count
}

TEST(Preprocessing, UnitaryForms) {
  const Eigen::MatrixXcd anti = build_U(parse_pauli("XI"), parse_pauli("ZI"));
  const Eigen::MatrixXcd comm = build_U(parse_pauli("II"), parse_pauli("XX"));
  for (const auto* u : {&anti, &comm}) {
    EXPECT_LT(max_abs(*u * u->adjoint() - Eigen::MatrixXcd::Identity(4, 4)), 1e-14);
  }
  const Eigen::MatrixXcd expected = (to_matrix(parse_pauli("XI")) + to_matrix(parse_pauli("ZI"))) / std::sqrt(2.0);
  EXPECT_LT(max_abs(anti - expected), 1e-15);
}

TEST(Preprocessing, TogglerIsDiagonalPhaseOnSyndromeSpaces) {
  const ProtocolCode c1 = protocol("C1");
  const Preprocessing prep = parse_preprocessing("T:auto;U:I,X1X2", 4);
  const auto signs = toggler_signs(c1, prep);
  ASSERT_EQ(signs.size(), c1.cls.sets().size());
  int sum = 0;
  for (int s : signs) sum += s;
  EXPECT_EQ(sum, 0);
  const Eigen::MatrixXcd t = build_toggler(c1, signs);
  EXPECT_LT(max_abs(t * t.adjoint() - Eigen::MatrixXcd::Identity(16, 16)), 1e-14);
}

TEST(Simulate, IdentityNoiseOnThreeQubitCodeGivesTrivialSyndrome) {
  const ProtocolCode q3 = protocol("q3");
  const Distribution d = syndrome_distribution(q3, {logical_zero(1), {}}, identity_channel(2));
  EXPECT_NEAR(d.probability(Syndrome::parse("++")), 1.0, 1e-15);
  EXPECT_NEAR(d.total_trace, 1.0, 1e-15);
}

TEST(Simulate, ToyNoiseProbabilitiesSumToOne) {
  const ProtocolCode c1 = protocol("C1");
  const ProcessMatrix ea = make_toy_noise_EA(default_EA_params());
  for (const char* prep : {"none", "U:I,X1X2", "T:auto;U:I,X1X2"}) {
    const Distribution d = syndrome_distribution(c1, {logical_zero(1), parse_preprocessing(prep, 4)}, ea);
    EXPECT_EQ(d.outcomes.size(), 8u);
    double total = 0;
    for (const auto& [s, p] : d.outcomes) {
      EXPECT_GT(p, -1e-15);
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-14) << prep;
  }
}

TEST(Simulate, ProbabilitiesSumToTraceForNonTracePreservingChi) {
  std::mt19937 rng(31);
  const ProtocolCode q3 = protocol("q3");
  const ProcessMatrix chi = random_chi(2, rng);
  const Distribution d = syndrome_distribution(q3, {logical_plus(1), {}}, chi);
  double total = 0;
  for (const auto& [s, p] : d.outcomes) total += p;
  EXPECT_NEAR(total, d.total_trace, 1e-12);
}

TEST(Functional, DirectThreeQubitTrivialSyndromeAtLogicalZero) {
  // C + 2 Re(I,X1X2) + 2 Im(Y2,X1Z2), C the sum of the ambiguous-group diagonals.
  const ProtocolCode q3 = protocol("q3");
  const ProbabilityFunctional f = direct_functional(q3, Syndrome::parse("++"));
  const Eigen::VectorXd row = f.row(state_expectations(logical_zero(1).amplitudes));
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(256);
  for (const char* label : {"Diag(I)", "Diag(Y2)", "Diag(X1X2)", "Diag(X1Z2)"})
    expected(parameter_index(parse_parameter(label, 2), 2)) = 1;
  expected(parameter_index(parse_parameter("Re(I,X1X2)", 2), 2)) = 2;
  expected(parameter_index(parse_parameter("Im(Y2,X1Z2)", 2), 2)) = 2;
  EXPECT_LT((row - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Functional, DirectDiagonalSumsAreGroupCosets) {
  const ProtocolCode c1 = protocol("C1");
  for (const auto& set : c1.cls.sets()) {
    const ProbabilityFunctional f = direct_functional(c1, set.syndrome);
    for (const Pauli& e : set.errors) {
      const int j = c1.local_index(e);
      EXPECT_NEAR(f.coefficient(parameter_index({ChiParameter::Kind::Diag, j, j}, 2), 0), 1.0, 1e-14);
    }
  }
}

TEST(FunctionalProperty, MatchesDenseSimulationOnRandomChannels) {
  std::mt19937 rng(2026);
  const std::vector<const char*> preps = {"none", "U:X1,Z1", "U:I,X1", "T:auto;U:X1,Z1", "T:auto;U:I,X1"};
  const std::vector<const char*> preps_c1 = {"none", "U:X1,Z1", "U:I,X1X2", "T:auto;U:X1,Z1", "T:auto;U:I,X1X2"};
  int cases = 0;
  double worst = 0;
  for (const char* id : {"q3", "C1"}) {
    const ProtocolCode pc = protocol(id);
    const auto& list = std::string(id) == "q3" ? preps : preps_c1;
    for (int t = 0; t < 25; ++t) {
      const ProcessMatrix chi = random_chi(2, rng);
      const LogicalState input{"random", testing::random_state(2, rng)};
      for (const char* prep : list) {
        worst = std::max(worst, max_functional_gap(pc, {input, parse_preprocessing(prep, pc.n())}, chi));
        ++cases;
      }
    }
  }
  EXPECT_GE(cases, 200);
  EXPECT_LT(worst, 1e-10);
}

TEST(FunctionalProperty, OutcomeFunctionalsSumToTrace) {
  // Summed over outcomes, only terms of Tr sum chi_jk E_k^dag E_j survive.
  const ProtocolCode c1 = protocol("C1");
  const Preprocessing prep = parse_preprocessing("T:auto;U:I,X1X2", 4);
  ProbabilityFunctional total(2, 1);
  for (const auto& set : c1.cls.sets()) {
    const ProbabilityFunctional f = outcome_functional(c1, prep, set.syndrome);
    for (const auto& term : f.terms()) total.add(term.parameter, term.logical, term.coeff);
  }
  total.normalize();
  for (int j = 0; j < 16; ++j) EXPECT_NEAR(total.coefficient(j, 0), 1.0, 1e-14);
}

}  // namespace
}  // namespace asc
