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

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "asc/channel.hpp"
#include "asc/simulate.hpp"

namespace asc {

/// The codes available to a plan, looked up by id.
using CodeFamily = std::vector<ProtocolCode>;

/// Catalog codes with their default noisy coordinates.
CodeFamily catalog_family(std::span<const std::string> ids);

const ProtocolCode& find_code(const CodeFamily& family, std::string_view id);

/// One measured configuration. Every syndrome outcome of the code becomes
/// one observation. Entries without preprocessing belong to the diagonal
/// stage, the rest to the off-diagonal stage.
struct PlanEntry {
  std::string code_id;
  LogicalState input;
  Preprocessing prep;

  bool diagonal_stage() const { return !prep.unitary; }
};

struct MeasurementPlan {
  std::vector<PlanEntry> entries;
  /// Off-diagonal targets (row < col local basis indices) that no code in
  /// the family separates.
  std::vector<std::pair<int, int>> unreachable;

  /// Appends entries not already present (same code, input and
  /// preprocessing).
  void merge(const MeasurementPlan& other);
};

/// Inputs for a code: the first of 0L, +L, upL whose expectation vanishes
/// for every nontrivial logical class reached by the code's ambiguous
/// group, otherwise the full 4^k input schedule.
std::vector<LogicalState> default_inputs(const ProtocolCode& pc);

/// Direct measurements on every code of the family.
MeasurementPlan plan_diagonal(const CodeFamily& family);

/// For each target pair (mu, nu) and each code whose class separates them:
/// U(I, mu*nu) and its auto-toggled variant.
MeasurementPlan plan_offdiagonal(const CodeFamily& family, std::span<const std::pair<int, int>> targets);

/// Every row < col pair of the 4^m basis.
std::vector<std::pair<int, int>> all_pairs(int m);

/// Outcome probabilities, one Distribution per plan entry.
std::vector<Distribution> collect_probabilities(const MeasurementPlan& plan, const CodeFamily& family,
                                                const ProcessMatrix& chi);

/// Rows: one per (entry, outcome); columns: the parameters that appear,
/// minus any whose value is already known (those are moved to the
/// right-hand side).
struct LinearSystem {
  int m = 0;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  std::vector<int> columns;  // parameter indices
  std::vector<std::string> row_labels;
};

enum class Stage { All, Diagonal, OffDiagonal };

/// Throws std::invalid_argument if a probability is missing for a plan
/// entry or an outcome.
LinearSystem assemble(const MeasurementPlan& plan, const CodeFamily& family,
                      std::span<const Distribution> probabilities, Stage stage,
                      const std::map<int, double>& known = {});

/// Minimum-norm least-squares solution by SVD. A column is resolved iff
/// its unit vector lies in the row space (singular values below 1e-9
/// times the largest are treated as zero).
struct SolveResult {
  Eigen::VectorXd values;  // aligned with system.columns
  std::vector<bool> resolved;
  int rank = 0;
  double residual = 0;  // max |A x - b|
};

inline constexpr double kRankTolerance = 1e-9;

SolveResult solve(const LinearSystem& system);

struct ReconstructionReport {
  int m = 0;
  Eigen::VectorXd values;      // all parameters; 0 where unresolved
  std::vector<bool> resolved;  // all parameters
  double residual = 0;
  int observations = 0;

  std::vector<ChiParameter> resolved_parameters() const;
  std::vector<ChiParameter> unresolved_parameters() const;
  /// Hermitian chi built from the resolved values (unresolved set to 0).
  ProcessMatrix estimate() const;
};

/// Diagonal stage first, then the off-diagonal stage with the resolved
/// diagonal-stage values substituted.
ReconstructionReport reconstruct(const MeasurementPlan& plan, const CodeFamily& family,
                                 std::span<const Distribution> probabilities);

/// All rows solved at once, for cross-checking the staged path.
ReconstructionReport reconstruct_joint(const MeasurementPlan& plan, const CodeFamily& family,
                                       std::span<const Distribution> probabilities);

struct RoundTrip {
  MeasurementPlan plan;
  ReconstructionReport report;
  double max_error = 0;  // over resolved parameters
};

/// Plans (diagonal plus all off-diagonal pairs unless a plan is given),
/// simulates exactly, reconstructs and compares with chi_true.
RoundTrip qascd_round_trip(const CodeFamily& family, const ProcessMatrix& chi_true);
RoundTrip qascd_round_trip(const CodeFamily& family, const ProcessMatrix& chi_true, const MeasurementPlan& plan);

/// Solves sum_L c_L <L>_input = p over a schedule of inputs for the
/// coefficients c_L (entry 0 is the constant part). Throws
/// std::invalid_argument if the schedule does not determine them.
Eigen::VectorXd solve_logical_coefficients(std::span<const LogicalState> inputs, const Eigen::VectorXd& probabilities);

/// Order-of-magnitude resource figures: gamma + 1 preparations and
/// gamma * 4^m configurations.
struct ResourceEstimate {
  long long preparations = 0;
  long long configurations = 0;
};
ResourceEstimate resource_estimate(int m, int gamma, int k = 1);

/// Plan file: {"entries": [{"code": "C1", "input": "0L",
/// "preprocessing": "none"}]}. Inputs are "0L", "+L", "upL" or an angle.
MeasurementPlan read_plan_json(std::istream& in, const CodeFamily& family);
void write_plan_json(std::ostream& out, const MeasurementPlan& plan);

/// Records "index syndrome probability", one per line, '#' comments.
std::vector<Distribution> read_probabilities(std::istream& in, const MeasurementPlan& plan);
void write_probabilities(std::ostream& out, std::span<const Distribution> probabilities, int digits);

/// Fixed-width report: one line per parameter with value and status.
void write_report_text(std::ostream& out, const ReconstructionReport& report, int digits);
void write_report_json(std::ostream& out, const ReconstructionReport& report);

}  // namespace asc
