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

#include "asc/channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace asc {
namespace {

int basis_size(int m) { return 1 << (2 * m); }

std::string basis_label(int index, int m) {
  return to_label(Pauli::from_basis_index(m, static_cast<std::uint32_t>(index)));
}

double hermitian_deviation(const Eigen::MatrixXcd& chi) {
  return (chi - chi.adjoint()).cwiseAbs().maxCoeff();
}

// Parses "name(x, y, ...)" into its numeric arguments.
std::vector<double> preset_arguments(std::string_view spec, std::string_view name) {
  std::string_view rest = spec.substr(name.size());
  if (rest.empty()) return {};
  if (rest.front() != '(' || rest.back() != ')') {
    throw std::invalid_argument("malformed noise preset '" + std::string(spec) + "'");
  }
  std::string inner(rest.substr(1, rest.size() - 2));
  std::replace(inner.begin(), inner.end(), ',', ' ');
  std::istringstream in(inner);
  std::vector<double> out;
  double v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed noise preset '" + std::string(spec) + "'");
  return out;
}

Eigen::VectorXd ea_free_vector(const ToyNoiseParams& p) {
  Eigen::VectorXd v(6);
  v << p.a, p.b, p.c, p.d, p.e, p.f;
  return v;
}

ToyNoiseParams ea_with_free(double delta, const Eigen::VectorXd& v) {
  return {delta, v(0), v(1), v(2), v(3), v(4), v(5)};
}

Eigen::VectorXd stacked_residual(const ToyNoiseParams& p) {
  const Eigen::MatrixXcd r = trace_preservation_residual(make_toy_noise_EA(p));
  Eigen::VectorXd out(2 * r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    out(2 * i) = r(i).real();
    out(2 * i + 1) = r(i).imag();
  }
  return out;
}

}  // namespace

ProcessMatrix::ProcessMatrix(int m, Eigen::MatrixXcd chi) : m_(m), chi_(std::move(chi)) {
  if (m < 1 || m > 4) throw std::invalid_argument("noisy qubit count must be between 1 and 4");
  if (chi_.rows() != basis_size(m) || chi_.cols() != basis_size(m)) {
    throw std::invalid_argument("process matrix must be 4^m x 4^m");
  }
}

std::complex<double> ProcessMatrix::entry(const Pauli& row, const Pauli& col) const {
  if (row.num_qubits() != m_ || col.num_qubits() != m_) throw std::invalid_argument("entry label size mismatch");
  return chi_(row.basis_index(), col.basis_index());
}

std::string ChiParameter::label(int m) const {
  switch (kind) {
    case Kind::Diag:
      return "Diag(" + basis_label(row, m) + ")";
    case Kind::Re:
      return "Re(" + basis_label(row, m) + "," + basis_label(col, m) + ")";
    case Kind::Im:
      return "Im(" + basis_label(row, m) + "," + basis_label(col, m) + ")";
  }
  return {};
}

int parameter_count(int m) { return basis_size(m) * basis_size(m); }

std::vector<ChiParameter> chi_parameters(int m) {
  const int d = basis_size(m);
  std::vector<ChiParameter> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) out.push_back({ChiParameter::Kind::Diag, j, j});
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      out.push_back({ChiParameter::Kind::Re, j, k});
      out.push_back({ChiParameter::Kind::Im, j, k});
    }
  }
  return out;
}

int parameter_index(const ChiParameter& p, int m) {
  const int d = basis_size(m);
  if (p.row < 0 || p.col < 0 || p.row >= d || p.col >= d) throw std::out_of_range("parameter out of range");
  if (p.kind == ChiParameter::Kind::Diag) {
    if (p.row != p.col) throw std::invalid_argument("diagonal parameter needs row == col");
    return p.row;
  }
  if (p.row >= p.col) throw std::invalid_argument("off-diagonal parameter needs row < col");
  // Pairs before row j: sum_{r<j} (d - 1 - r).
  const int before = p.row * (d - 1) - p.row * (p.row - 1) / 2;
  const int pair = before + (p.col - p.row - 1);
  return d + 2 * pair + (p.kind == ChiParameter::Kind::Im ? 1 : 0);
}

ChiParameter parse_parameter(std::string_view label, int m, int* sign) {
  auto fail = [&]() { return std::invalid_argument("malformed parameter label '" + std::string(label) + "'"); };
  const auto open = label.find('(');
  if (open == std::string_view::npos || label.back() != ')') throw fail();
  const std::string_view kind = label.substr(0, open);
  const std::string_view inner = label.substr(open + 1, label.size() - open - 2);
  if (sign != nullptr) *sign = 1;
  if (kind == "Diag") {
    const int j = static_cast<int>(parse_pauli(inner, m).basis_index());
    return {ChiParameter::Kind::Diag, j, j};
  }
  if (kind != "Re" && kind != "Im") throw fail();
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw fail();
  int j = static_cast<int>(parse_pauli(inner.substr(0, comma), m).basis_index());
  int k = static_cast<int>(parse_pauli(inner.substr(comma + 1), m).basis_index());
  if (j == k) throw fail();
  const auto type = kind == "Re" ? ChiParameter::Kind::Re : ChiParameter::Kind::Im;
  if (j > k) {
    std::swap(j, k);
    if (sign != nullptr && type == ChiParameter::Kind::Im) *sign = -1;
  }
  return {type, j, k};
}

Eigen::VectorXd to_parameters(const ProcessMatrix& chi) {
  const auto params = chi_parameters(chi.m());
  Eigen::VectorXd out(static_cast<Eigen::Index>(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    const std::complex<double> v = chi.chi()(p.row, p.col);
    out(static_cast<Eigen::Index>(i)) = p.kind == ChiParameter::Kind::Im ? v.imag() : v.real();
  }
  return out;
}

ProcessMatrix from_parameters(int m, const Eigen::VectorXd& values) {
  const auto params = chi_parameters(m);
  if (values.size() != static_cast<Eigen::Index>(params.size())) {
    throw std::invalid_argument("parameter vector has wrong length");
  }
  const int d = basis_size(m);
  Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    const double v = values(static_cast<Eigen::Index>(i));
    switch (p.kind) {
      case ChiParameter::Kind::Diag:
        chi(p.row, p.row) = v;
        break;
      case ChiParameter::Kind::Re:
        chi(p.row, p.col) += v;
        chi(p.col, p.row) += v;
        break;
      case ChiParameter::Kind::Im:
        chi(p.row, p.col) += std::complex<double>(0, v);
        chi(p.col, p.row) -= std::complex<double>(0, v);
        break;
    }
  }
  return ProcessMatrix(m, std::move(chi));
}

Eigen::MatrixXcd apply(const ProcessMatrix& chi, const Eigen::MatrixXcd& rho, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != chi.m()) {
    throw std::invalid_argument("coordinate count does not match the process matrix");
  }
  if (rho.rows() != rho.cols() || rho.rows() < 2 || (rho.rows() & (rho.rows() - 1)) != 0) {
    throw std::invalid_argument("density matrix must be square with power-of-two size");
  }
  const int n = std::countr_zero(static_cast<unsigned long long>(rho.rows()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= n) throw std::invalid_argument("noisy coordinate outside the register");
    for (std::size_t j = 0; j < i; ++j) {
      if (coords[i] == coords[j]) throw std::invalid_argument("noisy coordinates clash");
    }
  }
  if (hermitian_deviation(chi.chi()) > 1e-12) throw std::invalid_argument("process matrix is not Hermitian");

  const auto basis = chi.basis();
  const int d = chi.dimension();
  std::vector<Eigen::MatrixXcd> left(d);   // E_j rho
  std::vector<Eigen::MatrixXcd> errors(d);
  for (int j = 0; j < d; ++j) errors[j] = to_matrix(embed(basis[j], n, coords));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (int j = 0; j < d; ++j) {
    Eigen::MatrixXcd row_sum = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    bool any = false;
    for (int k = 0; k < d; ++k) {
      const std::complex<double> c = chi.chi()(j, k);
      if (c == 0.0) continue;
      row_sum.noalias() += c * errors[k].adjoint();
      any = true;
    }
    if (any) out.noalias() += errors[j] * rho * row_sum;
  }
  return out;
}

Eigen::MatrixXcd trace_preservation_residual(const ProcessMatrix& chi) {
  const auto basis = chi.basis();
  const int d = chi.dimension();
  const Eigen::Index dim = Eigen::Index{1} << chi.m();
  Eigen::MatrixXcd sum = -Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const std::complex<double> c = chi.chi()(j, k);
      if (c == 0.0) continue;
      sum += c * to_matrix(basis[k]).adjoint() * to_matrix(basis[j]);
    }
  }
  return sum;
}

ChannelReport validate(const ProcessMatrix& chi) {
  ChannelReport r;
  r.hermitian_residual = hermitian_deviation(chi.chi());
  r.mass_residual = std::abs(chi.chi().trace() - 1.0);
  r.tp_residual = trace_preservation_residual(chi).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd herm = 0.5 * (chi.chi() + chi.chi().adjoint());
  const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(herm, Eigen::EigenvaluesOnly)
                             .eigenvalues()
                             .minCoeff();
  r.cp_residual = std::max(0.0, -min_eig);
  r.hermitian = r.hermitian_residual <= kChannelTolerance;
  r.unit_mass = r.mass_residual <= kChannelTolerance;
  r.trace_preserving = r.tp_residual <= kChannelTolerance;
  r.completely_positive = r.hermitian && r.cp_residual <= kChannelTolerance;
  return r;
}

std::string ChannelReport::str() const {
  char buf[512];
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::snprintf(buf, sizeof buf,
                "hermitian            %-3s  residual %.3g\n"
                "unit diagonal mass   %-3s  residual %.3g\n"
                "trace preserving     %-3s  residual %.3g\n"
                "completely positive  %-3s  residual %.3g\n",
                yn(hermitian), hermitian_residual, yn(unit_mass), mass_residual, yn(trace_preserving),
                tp_residual, yn(completely_positive), cp_residual);
  return buf;
}

ProcessMatrix make_toy_noise_EA(const ToyNoiseParams& p) {
  auto idx = [](const char* s) { return static_cast<int>(parse_pauli(s, 2).basis_index()); };
  Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(16, 16);
  chi(idx("I"), idx("I")) = p.delta;
  for (const char* e : {"X1", "X1Z2", "Y2", "X2", "X1X2"}) chi(idx(e), idx(e)) = (1.0 - p.delta) / 5.0;
  auto coherence = [&](const char* r, const char* c, double re, double im) {
    chi(idx(r), idx(c)) = std::complex<double>(re, im) / 6.0;
    chi(idx(c), idx(r)) = std::complex<double>(re, -im) / 6.0;
  };
  coherence("X1", "X2", p.a, p.b);
  coherence("I", "X1X2", p.c, p.d);
  coherence("X1Z2", "Y2", p.e, p.f);
  return ProcessMatrix(2, std::move(chi));
}

ToyNoiseParams project_EA_trace_preserving(const ToyNoiseParams& p) {
  // The residual is affine in (a..f): r(v) = r0 + A v.
  const Eigen::VectorXd r0 = stacked_residual(ea_with_free(p.delta, Eigen::VectorXd::Zero(6)));
  Eigen::MatrixXd a(r0.size(), 6);
  for (int i = 0; i < 6; ++i) {
    a.col(i) = stacked_residual(ea_with_free(p.delta, Eigen::VectorXd::Unit(6, i))) - r0;
  }
  const Eigen::VectorXd v = ea_free_vector(p);
  const Eigen::VectorXd correction = a.completeOrthogonalDecomposition().solve(a * v + r0);
  return ea_with_free(p.delta, v - correction);
}

ToyNoiseParams default_EA_params() { return {0.7, 0.03, 0.03, 0.02, 0.02, 0.05, 0.05}; }

ProcessMatrix identity_channel(int m) {
  const int d = basis_size(m);
  Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(d, d);
  chi(0, 0) = 1.0;
  return ProcessMatrix(m, std::move(chi));
}

ProcessMatrix depolarizing(int m, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
  const int d = basis_size(m);
  Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) chi(j, j) = p / d;
  chi(0, 0) += 1.0 - p;
  return ProcessMatrix(m, std::move(chi));
}

ProcessMatrix noise_preset(std::string_view spec, int m) {
  if (spec == "identity") return identity_channel(m);
  if (spec.starts_with("depolarizing")) {
    const auto args = preset_arguments(spec, "depolarizing");
    if (args.size() != 1) throw std::invalid_argument("depolarizing(p) takes one argument");
    return depolarizing(m, args[0]);
  }
  if (spec.starts_with("EA")) {
    if (m != 2) throw std::invalid_argument("the EA preset acts on 2 noisy qubits");
    const auto args = preset_arguments(spec, "EA");
    if (args.empty()) return make_toy_noise_EA(default_EA_params());
    if (args.size() != 7) throw std::invalid_argument("EA(delta,a,b,c,d,e,f) takes seven arguments");
    return make_toy_noise_EA({args[0], args[1], args[2], args[3], args[4], args[5], args[6]});
  }
  throw std::invalid_argument("unknown noise preset '" + std::string(spec) + "'");
}

ProcessMatrix read_noise_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("noise file is not valid JSON: ") + e.what());
  }
  try {
    const int m = doc.at("m").get<int>();
    const int d = 1 << (2 * m);
    if (m < 1 || m > 4) throw std::invalid_argument("noise file: m must be between 1 and 4");
    Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXi listed = Eigen::MatrixXi::Zero(d, d);
    for (const auto& e : doc.at("entries")) {
      const int r = static_cast<int>(parse_pauli(e.at("row").get<std::string>(), m).basis_index());
      const int c = static_cast<int>(parse_pauli(e.at("col").get<std::string>(), m).basis_index());
      chi(r, c) = {e.value("re", 0.0), e.value("im", 0.0)};
      listed(r, c) = 1;
    }
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (listed(r, c) && !listed(c, r)) chi(c, r) = std::conj(chi(r, c));
      }
    }
    return ProcessMatrix(m, std::move(chi));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("noise file: ") + e.what());
  }
}

void write_noise_json(std::ostream& out, const ProcessMatrix& chi) {
  nlohmann::ordered_json doc;
  doc["m"] = chi.m();
  doc["entries"] = nlohmann::ordered_json::array();
  for (int r = 0; r < chi.dimension(); ++r) {
    for (int c = r; c < chi.dimension(); ++c) {
      const std::complex<double> v = chi.chi()(r, c);
      if (v == 0.0) continue;
      nlohmann::ordered_json e;
      e["row"] = basis_label(r, chi.m());
      e["col"] = basis_label(c, chi.m());
      e["re"] = v.real();
      e["im"] = v.imag();
      doc["entries"].push_back(e);
    }
  }
  out << doc.dump(2) << '\n';
}

}  // namespace asc
