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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "asc/pauli.hpp"

namespace asc {

/// A channel rho -> sum_jk chi_jk E_j rho E_k^dagger over the 4^m
/// Paulis E_j on m noisy qubits. Rows and columns follow the basis order
/// of all_paulis(m): per qubit I, X, Y, Z with the leftmost qubit most
/// significant.
class ProcessMatrix {
 public:
  /// chi must be 4^m x 4^m. Hermiticity is not enforced here; see
  /// validate().
  ProcessMatrix(int m, Eigen::MatrixXcd chi);

  int m() const { return m_; }
  int dimension() const { return static_cast<int>(chi_.rows()); }
  const Eigen::MatrixXcd& chi() const { return chi_; }
  std::vector<Pauli> basis() const { return all_paulis(m_); }

  /// Entry addressed by m-qubit Paulis (phases ignored).
  std::complex<double> entry(const Pauli& row, const Pauli& col) const;

 private:
  int m_ = 0;
  Eigen::MatrixXcd chi_;
};

/// One real coordinate of a Hermitian chi: a diagonal entry, or the real
/// or imaginary part of chi[row][col] with row < col in basis order.
struct ChiParameter {
  enum class Kind { Diag, Re, Im };
  Kind kind = Kind::Diag;
  int row = 0;
  int col = 0;

  /// "Diag(X1)", "Re(I,X1X2)", "Im(Y2,X1Z2)".
  std::string label(int m) const;
  friend bool operator==(const ChiParameter&, const ChiParameter&) = default;
};

/// All 16^m real parameters: the diagonals in basis order, then for
/// each row < col (row-major) the pair Re, Im.
std::vector<ChiParameter> chi_parameters(int m);
int parameter_index(const ChiParameter& p, int m);
int parameter_count(int m);

/// Accepts the labels produced by ChiParameter::label. Throws
/// std::invalid_argument otherwise; pairs are reordered to row < col with
/// Im negated by the caller-visible `sign` output when given.
ChiParameter parse_parameter(std::string_view label, int m, int* sign = nullptr);

/// Real parameter vector from the upper triangle of chi.
Eigen::VectorXd to_parameters(const ProcessMatrix& chi);
/// Hermitian chi from a parameter vector.
ProcessMatrix from_parameters(int m, const Eigen::VectorXd& params);

/// sum_jk chi_jk E_j rho E_k^dagger with E_j embedded on `coords` of an
/// n-qubit register (rho is 2^n x 2^n). Throws std::invalid_argument on a
/// coordinate clash, a size mismatch or a non-Hermitian chi.
Eigen::MatrixXcd apply(const ProcessMatrix& chi, const Eigen::MatrixXcd& rho, std::span<const int> coords);

/// Physicality diagnostics. Residuals are max-abs deviations; the CP
/// residual is the magnitude of the most negative eigenvalue.
struct ChannelReport {
  bool hermitian = false;
  bool unit_mass = false;
  bool trace_preserving = false;
  bool completely_positive = false;
  double hermitian_residual = 0;
  double mass_residual = 0;
  double tp_residual = 0;
  double cp_residual = 0;

  std::string str() const;
};

inline constexpr double kChannelTolerance = 1e-10;

ChannelReport validate(const ProcessMatrix& chi);

/// sum_jk chi_jk E_k^dagger E_j - I as an m-qubit matrix; zero for a
/// trace-preserving channel.
Eigen::MatrixXcd trace_preservation_residual(const ProcessMatrix& chi);

/// Parameters of the two-qubit toy channel E_A.
struct ToyNoiseParams {
  double delta = 0.7;
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

/// delta on I, (1 - delta)/5 on X1, X1Z2, Y2, X2, X1X2, and the coherences
/// (a+ib)/6 at (X1,X2), (c+id)/6 at (I,X1X2), (e+if)/6 at (X1Z2,Y2) plus
/// their conjugates.
ProcessMatrix make_toy_noise_EA(const ToyNoiseParams& p);

/// Closest (a..f) in Euclidean norm for which E_A is trace preserving,
/// found by solving the residual's linear dependence numerically.
ToyNoiseParams project_EA_trace_preserving(const ToyNoiseParams& p);

/// The parameters used by the bundled examples and tests.
ToyNoiseParams default_EA_params();

ProcessMatrix identity_channel(int m);

/// rho -> (1 - p) rho + p I / 2^m.
ProcessMatrix depolarizing(int m, double p);

/// "identity", "depolarizing(p)", "EA" or "EA(delta,a,b,c,d,e,f)".
/// Throws std::invalid_argument for unknown names or an m the preset
/// does not support.
ProcessMatrix noise_preset(std::string_view spec, int m);

/// {"m": int, "entries": [{"row": "X1", "col": "X2", "re": x, "im": y}]}.
/// A listed entry whose transpose is not listed also sets the transpose
/// to the conjugate.
ProcessMatrix read_noise_json(std::istream& in);
void write_noise_json(std::ostream& out, const ProcessMatrix& chi);

}  // namespace asc
