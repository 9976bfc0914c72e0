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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "asc/codes.hpp"
#include "json.hpp"

namespace asc {
namespace {

std::string entry_key(const PlanEntry& e) { return e.code_id + "|" + e.input.name + "|" + e.prep.str(); }

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Stage-aware solve shared by the staged and joint paths.
void store(const LinearSystem& system, const SolveResult& result, ReconstructionReport& report) {
  for (std::size_t c = 0; c < system.columns.size(); ++c) {
    const int p = system.columns[c];
    if (result.resolved[c]) {
      report.values(p) = result.values(static_cast<Eigen::Index>(c));
      report.resolved[p] = true;
    }
  }
  report.residual = std::max(report.residual, result.residual);
  report.observations += static_cast<int>(system.matrix.rows());
}

ReconstructionReport empty_report(const CodeFamily& family) {
  if (family.empty()) throw std::invalid_argument("empty code family");
  ReconstructionReport r;
  r.m = family.front().m();
  for (const auto& pc : family) {
    if (pc.m() != r.m) throw std::invalid_argument("codes in a family must share the noisy qubit count");
  }
  r.values = Eigen::VectorXd::Zero(parameter_count(r.m));
  r.resolved.assign(static_cast<std::size_t>(parameter_count(r.m)), false);
  return r;
}

}  // namespace

CodeFamily catalog_family(std::span<const std::string> ids) {
  CodeFamily out;
  for (const auto& id : ids) {
    const CatalogEntry& e = catalog_entry(id);
    out.push_back(make_protocol_code(e.id, e.code, e.coords));
  }
  return out;
}

const ProtocolCode& find_code(const CodeFamily& family, std::string_view id) {
  for (const auto& pc : family) {
    if (pc.id == id) return pc;
  }
  throw std::invalid_argument("code '" + std::string(id) + "' is not part of the family");
}

void MeasurementPlan::merge(const MeasurementPlan& other) {
  std::set<std::string> seen;
  for (const auto& e : entries) seen.insert(entry_key(e));
  for (const auto& e : other.entries) {
    if (seen.insert(entry_key(e)).second) entries.push_back(e);
  }
  for (const auto& u : other.unreachable) {
    if (std::find(unreachable.begin(), unreachable.end(), u) == unreachable.end()) unreachable.push_back(u);
  }
}

std::vector<LogicalState> default_inputs(const ProtocolCode& pc) {
  std::set<int> classes;
  const AmbiguousSet* group = pc.cls.find(Syndrome(static_cast<int>(pc.code.generators().size()), 0));
  if (group != nullptr) {
    for (const Pauli& b : group->errors) {
      const auto& action = pc.actions[pc.local_index(b)];
      if (action && !action->logical.is_identity()) classes.insert(static_cast<int>(action->logical.basis_index()));
    }
  }
  for (const LogicalState& s : {logical_zero(pc.k()), logical_plus(pc.k()), logical_up(pc.k())}) {
    const Eigen::VectorXd ex = state_expectations(s.amplitudes);
    const bool vanishes = std::all_of(classes.begin(), classes.end(), [&](int l) { return std::abs(ex(l)) < 1e-12; });
    if (vanishes) return {s};
  }
  return input_schedule(pc.k());
}

MeasurementPlan plan_diagonal(const CodeFamily& family) {
  MeasurementPlan plan;
  for (const auto& pc : family) {
    for (const auto& input : default_inputs(pc)) plan.entries.push_back({pc.id, input, Preprocessing{}});
  }
  return plan;
}

std::vector<std::pair<int, int>> all_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  const int d = 1 << (2 * m);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) out.emplace_back(j, k);
  }
  return out;
}

MeasurementPlan plan_offdiagonal(const CodeFamily& family, std::span<const std::pair<int, int>> targets) {
  MeasurementPlan plan;
  std::set<std::string> seen;
  for (const auto& [mu, nu] : targets) {
    bool reached = false;
    for (const auto& pc : family) {
      const Pauli a = pc.embed_local(Pauli::from_basis_index(pc.m(), static_cast<std::uint32_t>(mu)));
      const Pauli b = pc.embed_local(Pauli::from_basis_index(pc.m(), static_cast<std::uint32_t>(nu)));
      if (syndrome_of(a, pc.code) == syndrome_of(b, pc.code)) continue;
      reached = true;
      Preprocessing prep;
      prep.unitary = true;
      prep.ea = Pauli(pc.n());
      prep.eb = (a * b).unsigned_part();
      std::vector<Preprocessing> variants = {prep};
      Preprocessing toggled = prep;
      toggled.toggle = Preprocessing::Toggle::Auto;
      try {
        (void)toggler_signs(pc, toggled);
        variants.push_back(toggled);
      } catch (const std::invalid_argument&) {
        // No balanced toggler for this code; the plain variant still helps.
      }
      for (const auto& v : variants) {
        for (const auto& input : default_inputs(pc)) {
          PlanEntry entry{pc.id, input, v};
          if (seen.insert(entry_key(entry)).second) plan.entries.push_back(std::move(entry));
        }
      }
    }
    if (!reached) plan.unreachable.emplace_back(mu, nu);
  }
  return plan;
}

std::vector<Distribution> collect_probabilities(const MeasurementPlan& plan, const CodeFamily& family,
                                                const ProcessMatrix& chi) {
  std::vector<Distribution> out;
  out.reserve(plan.entries.size());
  for (const auto& e : plan.entries) {
    out.push_back(syndrome_distribution(find_code(family, e.code_id), Configuration{e.input, e.prep}, chi));
  }
  return out;
}

LinearSystem assemble(const MeasurementPlan& plan, const CodeFamily& family,
                      std::span<const Distribution> probabilities, Stage stage, const std::map<int, double>& known) {
  if (probabilities.size() != plan.entries.size()) {
    throw std::invalid_argument("expected probabilities for " + std::to_string(plan.entries.size()) +
                                " plan entries, got " + std::to_string(probabilities.size()));
  }
  LinearSystem sys;
  sys.m = family.empty() ? 0 : family.front().m();
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const PlanEntry& e = plan.entries[i];
    if (stage == Stage::Diagonal && !e.diagonal_stage()) continue;
    if (stage == Stage::OffDiagonal && e.diagonal_stage()) continue;
    const ProtocolCode& pc = find_code(family, e.code_id);
    const Eigen::VectorXd ex = state_expectations(e.input.amplitudes);
    for (const AmbiguousSet& set : pc.cls.sets()) {
      const auto it = std::find_if(probabilities[i].outcomes.begin(), probabilities[i].outcomes.end(),
                                   [&](const auto& o) { return o.first == set.syndrome; });
      if (it == probabilities[i].outcomes.end()) {
        throw std::invalid_argument("missing probability for plan entry " + std::to_string(i) + " outcome " +
                                    set.syndrome.str());
      }
      const ProbabilityFunctional f = outcome_functional(pc, e.prep, set.syndrome);
      Eigen::VectorXd row = f.row(ex);
      double b = it->second - f.constant();
      for (const auto& [p, v] : known) {
        b -= row(p) * v;
        row(p) = 0;
      }
      rows.push_back(std::move(row));
      rhs.push_back(b);
      sys.row_labels.push_back(e.code_id + " " + e.input.name + " " + e.prep.str() + " " + set.syndrome.str());
    }
  }
  if (rows.empty()) {
    sys.matrix.resize(0, 0);
    sys.rhs.resize(0);
    return sys;
  }
  for (Eigen::Index p = 0; p < rows.front().size(); ++p) {
    if (std::any_of(rows.begin(), rows.end(), [&](const Eigen::VectorXd& r) { return std::abs(r(p)) > 1e-14; })) {
      sys.columns.push_back(static_cast<int>(p));
    }
  }
  sys.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(sys.columns.size()));
  sys.rhs.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
      sys.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r](sys.columns[c]);
    }
    sys.rhs(static_cast<Eigen::Index>(r)) = rhs[r];
  }
  return sys;
}

SolveResult solve(const LinearSystem& system) {
  SolveResult out;
  const Eigen::Index cols = system.matrix.cols();
  out.values = Eigen::VectorXd::Zero(cols);
  out.resolved.assign(static_cast<std::size_t>(cols), false);
  if (system.matrix.rows() == 0 || cols == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = kRankTolerance * sv(0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  out.rank = rank;
  if (rank == 0) {
    out.residual = system.rhs.cwiseAbs().maxCoeff();
    return out;
  }
  const auto u = svd.matrixU().leftCols(rank);
  const auto v = svd.matrixV().leftCols(rank);
  out.values = v * (sv.head(rank).cwiseInverse().asDiagonal() * (u.transpose() * system.rhs));
  for (Eigen::Index c = 0; c < cols; ++c) {
    out.resolved[static_cast<std::size_t>(c)] = v.row(c).squaredNorm() > 1.0 - kRankTolerance;
  }
  out.residual = (system.matrix * out.values - system.rhs).cwiseAbs().maxCoeff();
  return out;
}

std::vector<ChiParameter> ReconstructionReport::resolved_parameters() const {
  std::vector<ChiParameter> out;
  const auto params = chi_parameters(m);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (resolved[i]) out.push_back(params[i]);
  }
  return out;
}

std::vector<ChiParameter> ReconstructionReport::unresolved_parameters() const {
  std::vector<ChiParameter> out;
  const auto params = chi_parameters(m);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!resolved[i]) out.push_back(params[i]);
  }
  return out;
}

ProcessMatrix ReconstructionReport::estimate() const { return from_parameters(m, values); }

ReconstructionReport reconstruct(const MeasurementPlan& plan, const CodeFamily& family,
                                 std::span<const Distribution> probabilities) {
  ReconstructionReport report = empty_report(family);
  const LinearSystem diag = assemble(plan, family, probabilities, Stage::Diagonal);
  const SolveResult first = solve(diag);
  store(diag, first, report);
  std::map<int, double> known;
  for (std::size_t c = 0; c < diag.columns.size(); ++c) {
    if (first.resolved[c]) known[diag.columns[c]] = first.values(static_cast<Eigen::Index>(c));
  }
  const LinearSystem off = assemble(plan, family, probabilities, Stage::OffDiagonal, known);
  store(off, solve(off), report);
  return report;
}

ReconstructionReport reconstruct_joint(const MeasurementPlan& plan, const CodeFamily& family,
                                       std::span<const Distribution> probabilities) {
  ReconstructionReport report = empty_report(family);
  const LinearSystem all = assemble(plan, family, probabilities, Stage::All);
  store(all, solve(all), report);
  return report;
}

RoundTrip qascd_round_trip(const CodeFamily& family, const ProcessMatrix& chi_true, const MeasurementPlan& plan) {
  RoundTrip out{plan, {}, 0.0};
  const auto probabilities = collect_probabilities(plan, family, chi_true);
  out.report = reconstruct(plan, family, probabilities);
  const Eigen::VectorXd truth = to_parameters(chi_true);
  for (Eigen::Index p = 0; p < truth.size(); ++p) {
    if (out.report.resolved[static_cast<std::size_t>(p)]) {
      out.max_error = std::max(out.max_error, std::abs(out.report.values(p) - truth(p)));
    }
  }
  return out;
}

RoundTrip qascd_round_trip(const CodeFamily& family, const ProcessMatrix& chi_true) {
  if (family.empty()) throw std::invalid_argument("empty code family");
  MeasurementPlan plan = plan_diagonal(family);
  const auto pairs = all_pairs(family.front().m());
  plan.merge(plan_offdiagonal(family, pairs));
  return qascd_round_trip(family, chi_true, plan);
}

Eigen::VectorXd solve_logical_coefficients(std::span<const LogicalState> inputs, const Eigen::VectorXd& probabilities) {
  if (inputs.empty() || static_cast<Eigen::Index>(inputs.size()) != probabilities.size()) {
    throw std::invalid_argument("need one probability per input");
  }
  const Eigen::Index width = state_expectations(inputs.front().amplitudes).size();
  Eigen::MatrixXd e(static_cast<Eigen::Index>(inputs.size()), width);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    e.row(static_cast<Eigen::Index>(i)) = state_expectations(inputs[i].amplitudes).transpose();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
  if (lu.rank() < width) throw std::invalid_argument("input schedule does not determine the coefficients");
  return e.colPivHouseholderQr().solve(probabilities);
}

ResourceEstimate resource_estimate(int m, int gamma, int k) {
  if (gamma < 1 || m < 1 || k < 1) throw std::invalid_argument("resource estimate needs m, gamma, k >= 1");
  return {static_cast<long long>(gamma) + 1, static_cast<long long>(gamma) << (2 * m)};
}

MeasurementPlan read_plan_json(std::istream& in, const CodeFamily& family) {
  MeasurementPlan plan;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    for (const auto& item : doc.at("entries")) {
      const std::string id = item.at("code").get<std::string>();
      const ProtocolCode& pc = find_code(family, id);
      std::string input = "0L";
      if (item.contains("input")) {
        input = item["input"].is_number() ? item["input"].dump()
                                          : item["input"].get<std::string>();
      }
      const std::string prep = item.value("preprocessing", std::string("none"));
      PlanEntry entry{id, parse_logical_state(input, pc.k()), parse_preprocessing(prep, pc.n())};
      validate_configuration(pc, Configuration{entry.input, entry.prep});
      plan.entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("plan file: ") + e.what());
  }
  return plan;
}

void write_plan_json(std::ostream& out, const MeasurementPlan& plan) {
  nlohmann::ordered_json doc;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : plan.entries) {
    nlohmann::ordered_json item;
    item["code"] = e.code_id;
    item["input"] = e.input.name;
    item["preprocessing"] = e.prep.str();
    doc["entries"].push_back(item);
  }
  out << doc.dump(2) << '\n';
}

std::vector<Distribution> read_probabilities(std::istream& in, const MeasurementPlan& plan) {
  std::vector<Distribution> out(plan.entries.size());
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long index = 0;
    std::string syndrome;
    double p = 0;
    if (!(ls >> index)) continue;
    if (!(ls >> syndrome >> p) || index < 0 || index >= static_cast<long long>(out.size())) {
      throw std::invalid_argument("malformed probability record: " + line);
    }
    out[static_cast<std::size_t>(index)].outcomes.emplace_back(Syndrome::parse(syndrome), p);
    out[static_cast<std::size_t>(index)].total_trace += p;
  }
  return out;
}

void write_probabilities(std::ostream& out, std::span<const Distribution> probabilities, int digits) {
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    for (const auto& [s, p] : probabilities[i].outcomes) {
      out << i << ' ' << s.str() << ' ' << format_number(p, digits) << '\n';
    }
  }
}

void write_report_text(std::ostream& out, const ReconstructionReport& report, int digits) {
  const auto params = chi_parameters(report.m);
  std::size_t resolved = 0;
  for (bool r : report.resolved) resolved += r ? 1 : 0;
  out << "observations " << report.observations << '\n';
  out << "resolved     " << resolved << " of " << params.size() << " parameters\n";
  out << "residual     " << format_number(report.residual, 3) << "\n\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-20s %-26s %s\n", "parameter", "value", "status");
  out << buf;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const bool r = report.resolved[i];
    double v = report.values(static_cast<Eigen::Index>(i));
    if (r && std::abs(v) < 1e-15) v = 0.0;  // print exact zeros without sign noise
    std::snprintf(buf, sizeof buf, "%-20s %-26s %s\n", params[i].label(report.m).c_str(),
                  r ? format_number(v, digits).c_str() : "-", r ? "resolved" : "unresolved");
    out << buf;
  }
}

void write_report_json(std::ostream& out, const ReconstructionReport& report) {
  nlohmann::ordered_json doc;
  doc["m"] = report.m;
  doc["observations"] = report.observations;
  doc["residual"] = report.residual;
  doc["parameters"] = nlohmann::ordered_json::array();
  const auto params = chi_parameters(report.m);
  for (std::size_t i = 0; i < params.size(); ++i) {
    nlohmann::ordered_json item;
    item["label"] = params[i].label(report.m);
    if (report.resolved[i]) {
      item["value"] = report.values(static_cast<Eigen::Index>(i));
    } else {
      item["value"] = nullptr;
    }
    item["resolved"] = static_cast<bool>(report.resolved[i]);
    doc["parameters"].push_back(item);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace asc
