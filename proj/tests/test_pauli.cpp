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

#include "asc/pauli.hpp"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace asc {
namespace {

using testing::kron_letters;
using testing::max_abs;

std::string letters_of(const Pauli& p) {
  std::string s;
  for (int q = 0; q < p.num_qubits(); ++q) s.push_back(p.letter(q));
  return s;
}

/// Dense oracle for a letter-relative Pauli: i^phase times the Kronecker
/// product of its letters.
Eigen::MatrixXcd oracle_matrix(const Pauli& p) {
  return phase_value(p.phase()) * kron_letters(letters_of(p));
}

Pauli random_pauli(int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return Pauli(n, bits(rng), bits(rng), phase(rng));
}

TEST(Pauli, XTimesXIsIdentity) {
  const Pauli x = parse_pauli("X");
  const Pauli p = x * x;
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.phase(), 0);
}

TEST(Pauli, XTimesZIsMinusIY) {
  const Pauli p = parse_pauli("X") * parse_pauli("Z");
  EXPECT_EQ(p.letter(0), 'Y');
  EXPECT_EQ(p.x_bits(), 1u);
  EXPECT_EQ(p.z_bits(), 1u);
  EXPECT_EQ(p.phase(), 3);
}

TEST(Pauli, ProductMatchesDenseOracleForXIXTimesYYZ) {
  const Pauli a = parse_pauli("XIX");
  const Pauli b = parse_pauli("YYZ");
  const Eigen::MatrixXcd expected = kron_letters("XIX") * kron_letters("YYZ");
  EXPECT_EQ(max_abs(to_matrix(a * b) - expected), 0.0);
}

TEST(Pauli, CommutationExamples) {
  EXPECT_TRUE(commutes(parse_pauli("X"), parse_pauli("X")));
  EXPECT_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
  EXPECT_TRUE(commutes(parse_pauli("XIX"), parse_pauli("YYZ")));
}

TEST(Pauli, MatrixExamples) {
  EXPECT_EQ(max_abs(to_matrix(parse_pauli("I")) - Eigen::Matrix2cd::Identity()), 0.0);
  Eigen::Matrix2cd y;
  y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  EXPECT_EQ(max_abs(to_matrix(parse_pauli("Y")) - y), 0.0);
  const Eigen::MatrixXcd expected = std::complex<double>(0, -1) * kron_letters("YYZ");
  EXPECT_EQ(max_abs(to_matrix(parse_pauli("-iYYZ")) - expected), 0.0);
}

TEST(Pauli, ParseExamples) {
  const Pauli xix = parse_pauli("XIX");
  EXPECT_EQ(xix.x_bits(), 0b101u);
  EXPECT_EQ(xix.z_bits(), 0u);
  EXPECT_EQ(xix.phase(), 0);

  const Pauli mx = parse_pauli("-X");
  EXPECT_EQ(mx.phase(), 2);
  EXPECT_EQ(mx.x_bits(), 1u);
  EXPECT_EQ(mx.z_bits(), 0u);

  // YYZ as the product (iX1Z1)(iX2Z2)Z3 in canonical form.
  const Pauli i = Pauli(3, 0, 0, 1);
  const Pauli chain = i * parse_pauli("XII") * parse_pauli("ZII") * i * parse_pauli("IXI") * parse_pauli("IZI") *
                      parse_pauli("IIZ");
  EXPECT_EQ(chain, parse_pauli("YYZ"));
  EXPECT_EQ(parse_pauli("YYZ").phase(), 0);
}

TEST(Pauli, ParseShorthandAndRoundTrip) {
  EXPECT_EQ(parse_pauli("X1Z2", 3), parse_pauli("XZI"));
  EXPECT_EQ(parse_pauli("X_1 Z_2", 2), parse_pauli("XZ"));
  EXPECT_EQ(parse_pauli("I", 2), Pauli(2));
  for (const char* text : {"XIX", "-X", "iYYZ", "-iZZI", "IIII"}) {
    const Pauli p = parse_pauli(text);
    EXPECT_EQ(parse_pauli(to_string(p)), p) << text;
    EXPECT_EQ(to_string(parse_pauli(to_string(p))), to_string(p)) << text;
  }
}

TEST(Pauli, RejectsMalformedText) {
  EXPECT_THROW(parse_pauli("XQ"), std::invalid_argument);
  EXPECT_THROW(parse_pauli(""), std::invalid_argument);
  EXPECT_THROW(parse_pauli("XX", 3), std::invalid_argument);
  EXPECT_THROW(parse_pauli("X4", 3), std::invalid_argument);
  EXPECT_THROW(parse_pauli("XIIIIIIII"), std::invalid_argument);
}

TEST(Pauli, RejectsDimensionMismatch) {
  EXPECT_THROW(parse_pauli("X") * parse_pauli("XX"), std::invalid_argument);
  EXPECT_THROW(commutes(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST(Pauli, BasisIndexOrdering) {
  EXPECT_EQ(parse_pauli("IX").basis_index(), 1u);
  EXPECT_EQ(parse_pauli("XI").basis_index(), 4u);
  EXPECT_EQ(parse_pauli("ZZ").basis_index(), 15u);
  const auto all = all_paulis(2);
  ASSERT_EQ(all.size(), 16u);
  for (std::uint32_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].basis_index(), i);
}

TEST(PauliProperty, GroupLawsOnRandomTriples) {
  std::mt19937 rng(20260415);
  for (int t = 0; t < 10000; ++t) {
    const int n = 1 + t % 5;
    const Pauli a = random_pauli(n, rng), b = random_pauli(n, rng), c = random_pauli(n, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * Pauli(n), a);
    ASSERT_EQ(Pauli(n) * a, a);
    const Pauli sq = a * a;
    ASSERT_TRUE(sq.is_identity());
    ASSERT_EQ(sq.phase(), (2 * a.phase()) % 4);
  }
}

TEST(PauliProperty, CommutesMatchesDenseCommutatorExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = all_paulis(n);
    std::vector<Eigen::MatrixXcd> mats;
    for (const auto& p : all) mats.push_back(kron_letters(letters_of(p)));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool dense = max_abs(mats[i] * mats[j] - mats[j] * mats[i]) == 0.0;
        ASSERT_EQ(commutes(all[i], all[j]), dense) << to_string(all[i]) << " " << to_string(all[j]);
      }
    }
  }
}

TEST(PauliProperty, MultiplyConsistentWithMatrices) {
  std::mt19937 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 4;
    const Pauli a = random_pauli(n, rng), b = random_pauli(n, rng);
    ASSERT_EQ(max_abs(to_matrix(a * b) - to_matrix(a) * to_matrix(b)), 0.0);
    ASSERT_EQ(max_abs(to_matrix(a) - oracle_matrix(a)), 0.0);
  }
}

TEST(PauliProperty, HermitianIffRealPhase) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Pauli a = random_pauli(1 + t % 3, rng);
    const Eigen::MatrixXcd m = to_matrix(a);
    const int d = static_cast<int>(m.rows());
    EXPECT_EQ(max_abs(m * m.adjoint() - Eigen::MatrixXcd::Identity(d, d)), 0.0);
    EXPECT_EQ(max_abs(m - m.adjoint()) == 0.0, a.phase() % 2 == 0);
  }
}

TEST(Pauli, EmbedAndRestrict) {
  const std::vector<int> coords = {1, 3};
  const Pauli local = parse_pauli("XZ");
  const Pauli full = embed(local, 4, coords);
  EXPECT_EQ(full, parse_pauli("IXIZ"));
  EXPECT_EQ(restrict_to(full, coords), local);
  EXPECT_TRUE(supported_within(full, coords));
  EXPECT_FALSE(supported_within(parse_pauli("XIII"), coords));
}

}  // namespace
}  // namespace asc
