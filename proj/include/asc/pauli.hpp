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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace asc {

/// Hard ceiling on register size. Dense matrices are 2^n x 2^n.
inline constexpr int kMaxQubits = 8;

/// A phase-tracked n-qubit Pauli operator.
///
/// The operator is i^phase times the tensor product of the letters
/// I, X, Y, Z read off the bit pairs (x_q, z_q): (0,0)=I, (1,0)=X,
/// (1,1)=Y, (0,1)=Z. Letters follow Y = iXZ, so the bare letter string is
/// always Hermitian and phase 0 means "exactly the printed letters".
/// Qubit 0 is the leftmost tensor factor and is stored in bit 0.
class Pauli {
 public:
  Pauli() = default;

  /// Identity on n qubits.
  explicit Pauli(int n);

  Pauli(int n, std::uint32_t x_bits, std::uint32_t z_bits, int phase = 0);

  /// Single-letter operator on `qubit` (0-based).
  static Pauli single(int n, int qubit, char letter);

  /// Inverse of basis_index(): digit per qubit, I=0 X=1 Y=2 Z=3,
  /// leftmost qubit most significant.
  static Pauli from_basis_index(int n, std::uint32_t index);

  int num_qubits() const { return n_; }
  std::uint32_t x_bits() const { return x_; }
  std::uint32_t z_bits() const { return z_; }
  int phase() const { return phase_; }

  char letter(int qubit) const;
  int weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Position of this letter string in the lexicographic basis of 4^n
  /// Paulis. Ignores the phase.
  std::uint32_t basis_index() const;

  /// Same letters with phase 0.
  Pauli unsigned_part() const { return Pauli(n_, x_, z_, 0); }
  Pauli with_phase(int phase) const { return Pauli(n_, x_, z_, phase); }
  Pauli dagger() const { return Pauli(n_, x_, z_, -phase_); }

  bool same_letters(const Pauli& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

  friend bool operator==(const Pauli&, const Pauli&) = default;

 private:
  int n_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
  int phase_ = 0;
};

/// Group product a*b with exact phase.
Pauli multiply(const Pauli& a, const Pauli& b);
inline Pauli operator*(const Pauli& a, const Pauli& b) { return multiply(a, b); }

/// True iff the symplectic inner product of a and b is even.
bool commutes(const Pauli& a, const Pauli& b);

/// Dense 2^n x 2^n matrix. Entries are exactly 0 or a power of i.
Eigen::MatrixXcd to_matrix(const Pauli& p);

/// i^k for k taken mod 4.
std::complex<double> phase_value(int k);

/// Parses "XIX", "-X", "iXZ", "-iYYZ". The letter count fixes n.
Pauli parse_pauli(std::string_view text);

/// Parses with a fixed register size. Accepts a dense letter string of
/// length n, or subscripted shorthand such as "X_1 Z_2", "X1Z2", "Y2"
/// (1-based qubit indices), or a lone "I".
Pauli parse_pauli(std::string_view text, int n);

/// Canonical dense text: optional "", "i", "-", "-i" prefix then letters.
std::string to_string(const Pauli& p);

/// Subscripted label of the letters only, e.g. "X1Y2"; identity is "I".
std::string to_label(const Pauli& p);

/// Ordering used for tables: by weight, then by subscripted label.
bool label_less(const Pauli& a, const Pauli& b);

/// All 4^n phase-0 Paulis in basis_index() order.
std::vector<Pauli> all_paulis(int n);

/// Places an m-qubit operator on the given 0-based coordinates of an
/// n-qubit register. coords.size() must equal local.num_qubits().
Pauli embed(const Pauli& local, int n, std::span<const int> coords);

/// Reads the letters of `p` on `coords` into an m-qubit operator. The
/// phase is kept; letters outside coords are dropped.
Pauli restrict_to(const Pauli& p, std::span<const int> coords);

/// True iff p acts as identity outside coords.
bool supported_within(const Pauli& p, std::span<const int> coords);

}  // namespace asc
