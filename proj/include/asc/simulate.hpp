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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "asc/ambiguity.hpp"
#include "asc/channel.hpp"
#include "asc/pauli.hpp"
#include "asc/stabilizer.hpp"

namespace asc {

/// A code used as a noise probe: every Pauli on the noisy coordinates is
/// an allowed error. Carries the ambiguous class, the syndrome projectors
/// of its sets and the logical action of every normalizer element
/// supported on the noisy coordinates.
struct ProtocolCode {
  std::string id;
  StabilizerCode code;
  std::vector<int> coords;  // 0-based
  AmbiguousClass cls;
  std::vector<Eigen::MatrixXcd> projectors;  // aligned with cls.sets()
  // Indexed by the local basis index of a Pauli on the noisy coordinates;
  // empty where the Pauli is not in the normalizer.
  std::vector<std::optional<LogicalAction>> actions;

  int m() const { return static_cast<int>(coords.size()); }
  int n() const { return code.n(); }
  int k() const { return code.k(); }

  /// Embeds an m-qubit Pauli on the noisy coordinates.
  Pauli embed_local(const Pauli& local) const;
  /// Local basis index of an n-qubit Pauli supported on the coordinates.
  int local_index(const Pauli& p) const;
};

ProtocolCode make_protocol_code(std::string id, StabilizerCode code, std::vector<int> coords);

/// A named logical input state (2^k amplitudes in the code's logical basis).
struct LogicalState {
  std::string name;
  Eigen::VectorXcd amplitudes;
};

/// k=1 states |0>, |+>, |up> = (|0> + i|1>)/sqrt2 and
/// cos(theta)|0> + sin(theta)|1>; for k > 1 the k-fold tensor power.
LogicalState logical_zero(int k);
LogicalState logical_plus(int k);
LogicalState logical_up(int k);
LogicalState logical_theta(int k, double theta);

/// "0L", "+L", "upL", "theta(x)" or a bare angle in radians, applied to
/// every logical qubit; or a product "a*b*..." with one factor per qubit.
LogicalState parse_logical_state(std::string_view text, int k);

/// Angle of the fourth input in the default schedule.
inline constexpr double kScheduleTheta = 0.39269908169872414;  // pi/8

/// 4^k inputs whose logical expectation vectors are linearly
/// independent: all tensor products of {0L, +L, upL, theta(pi/8)}.
std::vector<LogicalState> input_schedule(int k);

/// <L> for every logical Pauli of the (unencoded) logical state, in basis
/// order; entry 0 is 1.
Eigen::VectorXd state_expectations(const Eigen::VectorXcd& amplitudes);

/// "X_L" for k=1, "XZ_L" for k=2, by logical basis index.
std::string logical_name(int k, int index);

/// Optional preprocessing before the syndrome measurement: the toggler
/// T+ first, then U(Ea, Eb).
struct Preprocessing {
  enum class Toggle { None, Auto, Explicit };

  bool unitary = false;
  Pauli ea;
  Pauli eb;
  Toggle toggle = Toggle::None;
  std::vector<int> signs;  // +1/-1 per ambiguous set, for Explicit

  /// "none", "U:I,X1X2", "T:auto;U:I,X1X2", "T:+-+-;U:X1,Z1".
  std::string str() const;
};

/// Parses the text form above. Pauli labels use the code's register size.
Preprocessing parse_preprocessing(std::string_view text, int n);

struct Configuration {
  LogicalState input;
  Preprocessing prep;
};

/// Throws std::invalid_argument if Ea or Eb is not an allowed error, if
/// they are equal or mutually ambiguous, if toggling is requested without
/// U, or if toggler signs are missing or unbalanced.
void validate_configuration(const ProtocolCode& pc, const Configuration& config);

/// Toggler signs actually used: the explicit ones, or for Toggle::Auto a
/// generator i on which Ea and Eb have different syndromes and which
/// splits the sets evenly; sets with + on generator i get +1. Empty when
/// no toggling is requested. Throws std::invalid_argument if no such
/// generator exists.
std::vector<int> toggler_signs(const ProtocolCode& pc, const Preprocessing& prep);

/// (Ea + Eb)/sqrt2 if they anticommute, (Ea + i Eb)/sqrt2 if they commute.
/// Throws std::invalid_argument if Ea == Eb.
Eigen::MatrixXcd build_U(const Pauli& ea, const Pauli& eb);

/// Phase e^{+-i pi/4} on each erroneous subspace of the class, identity on
/// the rest of the register. Throws on unbalanced or mis-sized signs.
Eigen::MatrixXcd build_toggler(const ProtocolCode& pc, std::span<const int> signs);

/// U * T+ (either factor may be the identity).
Eigen::MatrixXcd preprocessing_matrix(const ProtocolCode& pc, const Preprocessing& prep);

struct Distribution {
  std::vector<std::pair<Syndrome, double>> outcomes;  // class sets, syndrome order
  double total_trace = 0;  // trace of the measured state
  double probability(const Syndrome& s) const;
};

/// Dense density-matrix evaluation of Tr(V E(rho) V^dagger P_s).
Distribution syndrome_distribution(const ProtocolCode& pc, const Configuration& config, const ProcessMatrix& chi);

/// partner and g with g * ej = eside * partner; partner has phase 0 and
/// g = i^phase.
struct PauliFactor {
  Pauli partner;
  int phase = 0;
};
PauliFactor pauli_factors(const Pauli& ej, const Pauli& eside);

/// coeff * parameter * <logical>.
struct FunctionalTerm {
  int parameter = 0;
  int logical = 0;  // logical Pauli basis index
  double coeff = 0;
};

/// An outcome probability as a linear function of the real chi
/// parameters, each weighted by a logical expectation value.
class ProbabilityFunctional {
 public:
  ProbabilityFunctional(int m, int k) : m_(m), k_(k) {}

  int m() const { return m_; }
  int k() const { return k_; }
  double constant() const { return constant_; }
  const std::vector<FunctionalTerm>& terms() const { return terms_; }

  void add(int parameter, int logical, double coeff);
  void add_constant(double v) { constant_ += v; }
  /// Merges duplicate terms and drops those below 1e-14.
  void normalize();

  double evaluate(const Eigen::VectorXd& params, const Eigen::VectorXd& expectations) const;

  /// Coefficient of every parameter for the given logical expectations.
  Eigen::VectorXd row(const Eigen::VectorXd& expectations) const;

  /// Value multiplying each <L> (entry 0 includes the constant) for the
  /// given parameter values.
  Eigen::VectorXd logical_coefficients(const Eigen::VectorXd& params) const;

  /// Coefficient of one parameter in front of one logical expectation.
  double coefficient(int parameter, int logical) const;

  /// Parameters appearing with the given logical weight.
  std::vector<int> support(int logical) const;

  /// e.g. "+0.5 Diag(I) +1 Re(I,X1X2) <Z_L> ..." in term order.
  std::string str() const;

 private:
  int m_;
  int k_;
  double constant_ = 0;
  std::vector<FunctionalTerm> terms_;
};

/// One branch of the preprocessing unitary: amplitude * E.
struct Side {
  Pauli error;
  std::complex<double> amplitude;
};

/// General builder: outcome functional for V = (sum of sides) * T+ with
/// the given toggler signs (empty for none). No configuration checks.
ProbabilityFunctional build_functional(const ProtocolCode& pc, std::span<const Side> sides,
                                       std::span<const int> signs, const Syndrome& outcome);

/// No preprocessing.
ProbabilityFunctional direct_functional(const ProtocolCode& pc, const Syndrome& outcome);

/// With U and optional toggling; validates the preprocessing first.
ProbabilityFunctional preprocessed_functional(const ProtocolCode& pc, const Preprocessing& prep,
                                              const Syndrome& outcome);

/// Dispatches on prep.unitary.
ProbabilityFunctional outcome_functional(const ProtocolCode& pc, const Preprocessing& prep, const Syndrome& outcome);

}  // namespace asc
