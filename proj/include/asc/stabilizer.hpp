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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "asc/pauli.hpp"

namespace asc {

/// Generator eigenvalue signs, in generator order. Sorts as the strings
/// of '+' and '-' do, so "++" < "+-" < "-+" < "--".
class Syndrome {
 public:
  Syndrome() = default;
  Syndrome(int length, std::uint32_t flips) : length_(length), flips_(flips) {}

  static Syndrome parse(std::string_view text);

  int length() const { return length_; }
  /// +1 or -1 for generator i.
  int sign(int i) const { return bit(i) ? -1 : 1; }
  bool bit(int i) const { return (flips_ >> (length_ - 1 - i)) & 1u; }
  bool trivial() const { return flips_ == 0; }
  std::uint32_t flips() const { return flips_; }

  /// Elementwise product of signs.
  Syndrome operator*(const Syndrome& other) const;

  /// Keeps only generators not listed in `dropped`.
  Syndrome without(std::span<const int> dropped) const;

  std::string str() const;

  friend auto operator<=>(const Syndrome&, const Syndrome&) = default;

 private:
  int length_ = 0;
  // Generator i is stored at bit (length - 1 - i).
  std::uint32_t flips_ = 0;
};

/// The 2^k-dimensional joint +1 eigenspace of n-k commuting generators,
/// with an explicit logical basis.
class StabilizerCode {
 public:
  /// Validates independence, commutation, stabilization and
  /// orthonormality. Generators may carry a -1 sign.
  StabilizerCode(std::vector<Pauli> generators, std::vector<Eigen::VectorXcd> codewords);

  /// Logical basis obtained by projecting computational basis states in
  /// index order and orthonormalizing. Each codeword's first nonzero
  /// amplitude is made real positive.
  static StabilizerCode from_generators(std::vector<Pauli> generators);

  /// Logical basis obtained by projecting the given reference kets onto
  /// the code space, orthonormalizing in order, and rotating each result
  /// so its overlap with its reference ket is real positive. Used to
  /// repair printed kets that are slightly off the code space.
  static StabilizerCode from_reference_kets(std::vector<Pauli> generators,
                                            std::span<const Eigen::VectorXcd> kets);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Pauli>& generators() const { return generators_; }
  const std::vector<Eigen::VectorXcd>& codewords() const { return codewords_; }

  /// Columns are the codewords, 2^n x 2^k.
  const Eigen::MatrixXcd& encoder() const { return encoder_; }

  /// Same generators with the listed ones removed (k grows accordingly);
  /// the logical basis is regenerated by projection.
  StabilizerCode without_generators(std::span<const int> dropped) const;

 private:
  StabilizerCode() = default;
  void finish();

  int n_ = 0;
  int k_ = 0;
  std::vector<Pauli> generators_;
  std::vector<Eigen::VectorXcd> codewords_;
  Eigen::MatrixXcd encoder_;
};

Syndrome syndrome_of(const Pauli& error, std::span<const Pauli> checks);
Syndrome syndrome_of(const Pauli& error, const StabilizerCode& code);

/// Product over generators of (I + G)/2.
Eigen::MatrixXcd codespace_projector(const StabilizerCode& code);
Eigen::MatrixXcd codespace_projector(std::span<const Pauli> generators);

/// Projector onto the joint eigenspace carrying the given syndrome.
Eigen::MatrixXcd syndrome_projector(std::span<const Pauli> generators, const Syndrome& s);

/// All 2^(n-k) stabilizer elements with their signs.
std::vector<Pauli> stabilizer_group(const StabilizerCode& code);

/// Exact membership, sign included.
bool in_stabilizer(const Pauli& p, const StabilizerCode& code);

/// Phase-0 Paulis commuting with every generator, in basis order.
std::vector<Pauli> normalizer(const StabilizerCode& code);

/// How a normalizer element acts on the logical basis:
/// <i_L|N|j_L> = i^phase * logical.
struct LogicalAction {
  Pauli logical;  // phase 0, k qubits
  int phase = 0;

  std::string str() const;  // "-X_L", "iY_L", "I_L"; k > 1 uses "-XZ_L"
  friend bool operator==(const LogicalAction&, const LogicalAction&) = default;
};

/// Throws std::domain_error if `element` has no well-defined logical
/// action (it leaves the code space).
LogicalAction logical_action(const Pauli& element, const StabilizerCode& code);

/// sum_j state_j |j_L>. The state must have unit norm within 1e-12.
Eigen::VectorXcd encode(const Eigen::VectorXcd& state, const StabilizerCode& code);

/// <L> for every logical Pauli L in basis order, so entry 0 is 1 and for
/// k=1 the entries are (1, <X_L>, <Y_L>, <Z_L>). Each value is taken from
/// a physical normalizer representative of its logical class. Throws if
/// the state is not in the code space.
Eigen::VectorXd logical_expectations(const Eigen::VectorXcd& encoded, const StabilizerCode& code);

/// Text format: "n k", one generator per line, then optional blocks
/// "codeword j" followed by "index re im" lines. '#' starts a comment.
void write_code(std::ostream& out, const StabilizerCode& code);
StabilizerCode read_code(std::istream& in);

}  // namespace asc
