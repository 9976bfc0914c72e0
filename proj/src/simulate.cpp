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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace asc {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

LogicalState tensor_power(const std::string& name, const Eigen::VectorXcd& single, int k) {
  if (k < 1) throw std::invalid_argument("logical qubit count must be positive");
  Eigen::VectorXcd out = single;
  for (int i = 1; i < k; ++i) out = Eigen::kroneckerProduct(out, single).eval();
  return {name, out};
}

bool balanced(std::span<const int> signs) {
  int sum = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) return false;
    sum += s;
  }
  return std::abs(sum) == static_cast<int>(signs.size() % 2);
}

std::string sign_string(std::span<const int> signs) {
  std::string out;
  for (int s : signs) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Pauli ProtocolCode::embed_local(const Pauli& local) const { return embed(local, code.n(), coords); }

int ProtocolCode::local_index(const Pauli& p) const {
  if (!supported_within(p, coords)) throw std::invalid_argument(to_label(p) + " acts outside the noisy coordinates");
  return static_cast<int>(restrict_to(p, coords).basis_index());
}

ProtocolCode make_protocol_code(std::string id, StabilizerCode code, std::vector<int> coords) {
  const int n = code.n();
  AmbiguousClass cls = build_class(code, ErrorSet::on_coordinates(n, coords));
  std::vector<Eigen::MatrixXcd> projectors;
  for (const AmbiguousSet& set : cls.sets()) {
    projectors.push_back(syndrome_projector(code.generators(), set.syndrome));
  }
  std::vector<std::optional<LogicalAction>> actions;
  for (const Pauli& local : all_paulis(static_cast<int>(coords.size()))) {
    const Pauli p = embed(local, n, coords);
    if (syndrome_of(p, code).trivial()) {
      actions.emplace_back(logical_action(p, code));
    } else {
      actions.emplace_back(std::nullopt);
    }
  }
  return ProtocolCode{std::move(id), std::move(code), std::move(coords), std::move(cls), std::move(projectors),
                      std::move(actions)};
}

LogicalState logical_zero(int k) { return tensor_power("0L", Eigen::Vector2cd(1, 0), k); }

LogicalState logical_plus(int k) {
  return tensor_power("+L", Eigen::Vector2cd(kInvSqrt2, kInvSqrt2), k);
}

LogicalState logical_up(int k) {
  return tensor_power("upL", Eigen::Vector2cd(kInvSqrt2, std::complex<double>(0, kInvSqrt2)), k);
}

LogicalState logical_theta(int k, double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta(%.17g)", theta);
  return tensor_power(buf, Eigen::Vector2cd(std::cos(theta), std::sin(theta)), k);
}

LogicalState parse_logical_state(std::string_view text, int k) {
  const std::string t = trim(text);
  if (const auto star = t.find('*'); star != std::string::npos) {
    // Product of single-qubit inputs, one factor per logical qubit.
    if (std::count(t.begin(), t.end(), '*') + 1 != k) {
      throw std::invalid_argument("product input '" + t + "' needs one factor per logical qubit");
    }
    const LogicalState head = parse_logical_state(t.substr(0, star), 1);
    const LogicalState tail = parse_logical_state(t.substr(star + 1), k - 1);
    return {head.name + "*" + tail.name, Eigen::kroneckerProduct(head.amplitudes, tail.amplitudes).eval()};
  }
  if (t == "0L") return logical_zero(k);
  if (t == "+L") return logical_plus(k);
  if (t == "upL") return logical_up(k);
  std::string number = t;
  if (t.starts_with("theta(") && t.ends_with(")")) number = t.substr(6, t.size() - 7);
  std::size_t used = 0;
  double theta = 0;
  try {
    theta = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size()) {
    throw std::invalid_argument("unknown input state '" + t + "' (expected 0L, +L, upL or an angle)");
  }
  return logical_theta(k, theta);
}

std::vector<LogicalState> input_schedule(int k) {
  const std::vector<LogicalState> single = {logical_zero(1), logical_plus(1), logical_up(1),
                                            logical_theta(1, kScheduleTheta)};
  std::vector<LogicalState> out = single;
  for (int i = 1; i < k; ++i) {
    std::vector<LogicalState> next;
    for (const auto& a : out) {
      for (const auto& b : single) {
        next.push_back({a.name + "*" + b.name, Eigen::kroneckerProduct(a.amplitudes, b.amplitudes).eval()});
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string logical_name(int k, int index) {
  const Pauli l = Pauli::from_basis_index(k, static_cast<std::uint32_t>(index));
  std::string out;
  for (int q = 0; q < k; ++q) out.push_back(l.letter(q));
  return out + "_L";
}

Eigen::VectorXd state_expectations(const Eigen::VectorXcd& amplitudes) {
  const int k = std::countr_zero(static_cast<unsigned long long>(amplitudes.size()));
  if ((Eigen::Index{1} << k) != amplitudes.size()) throw std::invalid_argument("amplitude count is not 2^k");
  const auto logicals = all_paulis(k);
  Eigen::VectorXd out(static_cast<Eigen::Index>(logicals.size()));
  for (std::size_t i = 0; i < logicals.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = amplitudes.dot(to_matrix(logicals[i]) * amplitudes).real();
  }
  return out;
}

std::string Preprocessing::str() const {
  if (!unitary) return "none";
  std::string out;
  if (toggle == Toggle::Auto) out = "T:auto;";
  if (toggle == Toggle::Explicit) out = "T:" + sign_string(signs) + ";";
  return out + "U:" + to_label(ea) + "," + to_label(eb);
}

Preprocessing parse_preprocessing(std::string_view text, int n) {
  const std::string t = trim(text);
  Preprocessing out;
  if (t == "none" || t.empty()) return out;
  std::string rest = t;
  if (rest.starts_with("T:")) {
    const auto semi = rest.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("toggling needs a following U:Ea,Eb");
    const std::string spec = trim(std::string_view(rest).substr(2, semi - 2));
    if (spec == "auto") {
      out.toggle = Preprocessing::Toggle::Auto;
    } else {
      out.toggle = Preprocessing::Toggle::Explicit;
      for (char c : spec) {
        if (c == '+') out.signs.push_back(1);
        else if (c == '-') out.signs.push_back(-1);
        else if (c != ' ') throw std::invalid_argument("toggler signs must be '+' or '-'");
      }
    }
    rest = trim(std::string_view(rest).substr(semi + 1));
  }
  if (!rest.starts_with("U:")) throw std::invalid_argument("malformed preprocessing '" + t + "'");
  const auto comma = rest.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("U needs two errors: U:Ea,Eb");
  out.unitary = true;
  out.ea = parse_pauli(trim(std::string_view(rest).substr(2, comma - 2)), n);
  out.eb = parse_pauli(trim(std::string_view(rest).substr(comma + 1)), n);
  if (out.ea.phase() != 0 || out.eb.phase() != 0) throw std::invalid_argument("U errors must be unsigned Paulis");
  return out;
}

void validate_configuration(const ProtocolCode& pc, const Configuration& config) {
  if (config.input.amplitudes.size() != pc.code.encoder().cols()) {
    throw std::invalid_argument("input state has wrong dimension for code " + pc.id);
  }
  if (std::abs(config.input.amplitudes.norm() - 1.0) > 1e-12) throw std::invalid_argument("input state is not normalized");
  const Preprocessing& prep = config.prep;
  if (!prep.unitary) {
    if (prep.toggle != Preprocessing::Toggle::None) throw std::invalid_argument("toggling requires U");
    return;
  }
  for (const Pauli* e : {&prep.ea, &prep.eb}) {
    if (e->num_qubits() != pc.n() || !supported_within(*e, pc.coords)) {
      throw std::invalid_argument(to_label(*e) + " is not an allowed error of code " + pc.id);
    }
  }
  if (prep.ea.same_letters(prep.eb)) throw std::invalid_argument("U needs two different errors");
  if (syndrome_of(prep.ea, pc.code) == syndrome_of(prep.eb, pc.code)) {
    throw std::invalid_argument(to_label(prep.ea) + " and " + to_label(prep.eb) + " are mutually ambiguous in code " +
                                pc.id);
  }
  if (prep.toggle == Preprocessing::Toggle::Explicit) {
    if (prep.signs.size() != pc.cls.sets().size()) {
      throw std::invalid_argument("toggler needs one sign per ambiguous set (" +
                                  std::to_string(pc.cls.sets().size()) + ")");
    }
    if (!balanced(prep.signs)) throw std::invalid_argument("toggler signs are not balanced");
  }
  (void)toggler_signs(pc, prep);
}

std::vector<int> toggler_signs(const ProtocolCode& pc, const Preprocessing& prep) {
  switch (prep.toggle) {
    case Preprocessing::Toggle::None:
      return {};
    case Preprocessing::Toggle::Explicit:
      return prep.signs;
    case Preprocessing::Toggle::Auto:
      break;
  }
  const Syndrome diff = syndrome_of(prep.ea, pc.code) * syndrome_of(prep.eb, pc.code);
  for (int i = 0; i < diff.length(); ++i) {
    if (!diff.bit(i)) continue;
    std::vector<int> signs;
    for (const AmbiguousSet& set : pc.cls.sets()) signs.push_back(set.syndrome.bit(i) ? -1 : 1);
    if (balanced(signs)) return signs;
  }
  throw std::invalid_argument("no generator gives a balanced toggler for " + prep.str());
}

Eigen::MatrixXcd build_U(const Pauli& ea, const Pauli& eb) {
  if (ea.num_qubits() != eb.num_qubits()) throw std::invalid_argument("U errors have different sizes");
  if (ea == eb) throw std::invalid_argument("U needs two different errors");
  const std::complex<double> c = commutes(ea, eb) ? std::complex<double>(0, 1) : std::complex<double>(1, 0);
  return kInvSqrt2 * (to_matrix(ea) + c * to_matrix(eb));
}

Eigen::MatrixXcd build_toggler(const ProtocolCode& pc, std::span<const int> signs) {
  if (signs.size() != pc.cls.sets().size()) throw std::invalid_argument("toggler needs one sign per ambiguous set");
  if (!balanced(signs)) throw std::invalid_argument("toggler signs are not balanced");
  const Eigen::Index dim = Eigen::Index{1} << pc.n();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const std::complex<double> phase = std::polar(1.0, signs[i] * std::numbers::pi / 4.0);
    t += (phase - 1.0) * pc.projectors[i];
  }
  return t;
}

Eigen::MatrixXcd preprocessing_matrix(const ProtocolCode& pc, const Preprocessing& prep) {
  const Eigen::Index dim = Eigen::Index{1} << pc.n();
  if (!prep.unitary) return Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd v = build_U(prep.ea, prep.eb);
  const auto signs = toggler_signs(pc, prep);
  if (!signs.empty()) v = v * build_toggler(pc, signs);
  return v;
}

double Distribution::probability(const Syndrome& s) const {
  for (const auto& [syn, p] : outcomes) {
    if (syn == s) return p;
  }
  return 0.0;
}

Distribution syndrome_distribution(const ProtocolCode& pc, const Configuration& config, const ProcessMatrix& chi) {
  validate_configuration(pc, config);
  const Eigen::VectorXcd psi = encode(config.input.amplitudes, pc.code);
  const Eigen::MatrixXcd rho = psi * psi.adjoint();
  const Eigen::MatrixXcd v = preprocessing_matrix(pc, config.prep);
  const Eigen::MatrixXcd out = v * apply(chi, rho, pc.coords) * v.adjoint();
  Distribution d;
  d.total_trace = out.trace().real();
  for (std::size_t i = 0; i < pc.cls.sets().size(); ++i) {
    d.outcomes.emplace_back(pc.cls.sets()[i].syndrome, (out * pc.projectors[i]).trace().real());
  }
  return d;
}

PauliFactor pauli_factors(const Pauli& ej, const Pauli& eside) {
  const Pauli partner = (eside * ej).unsigned_part();
  const Pauli back = eside * partner;  // = g * ej
  return {partner, ((back.phase() - ej.phase()) % 4 + 4) % 4};
}

void ProbabilityFunctional::add(int parameter, int logical, double coeff) {
  terms_.push_back({parameter, logical, coeff});
}

void ProbabilityFunctional::normalize() {
  std::map<std::pair<int, int>, double> merged;
  for (const auto& t : terms_) merged[{t.parameter, t.logical}] += t.coeff;
  terms_.clear();
  for (const auto& [key, c] : merged) {
    if (std::abs(c) > 1e-14) terms_.push_back({key.first, key.second, c});
  }
}

double ProbabilityFunctional::evaluate(const Eigen::VectorXd& params, const Eigen::VectorXd& expectations) const {
  double p = constant_;
  for (const auto& t : terms_) p += t.coeff * params(t.parameter) * expectations(t.logical);
  return p;
}

Eigen::VectorXd ProbabilityFunctional::row(const Eigen::VectorXd& expectations) const {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(parameter_count(m_));
  for (const auto& t : terms_) r(t.parameter) += t.coeff * expectations(t.logical);
  return r;
}

Eigen::VectorXd ProbabilityFunctional::logical_coefficients(const Eigen::VectorXd& params) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(Eigen::Index{1} << (2 * k_));
  out(0) = constant_;
  for (const auto& t : terms_) out(t.logical) += t.coeff * params(t.parameter);
  return out;
}

double ProbabilityFunctional::coefficient(int parameter, int logical) const {
  double c = 0;
  for (const auto& t : terms_) {
    if (t.parameter == parameter && t.logical == logical) c += t.coeff;
  }
  return c;
}

std::vector<int> ProbabilityFunctional::support(int logical) const {
  std::vector<int> out;
  for (const auto& t : terms_) {
    if (t.logical == logical && std::find(out.begin(), out.end(), t.parameter) == out.end()) {
      out.push_back(t.parameter);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ProbabilityFunctional::str() const {
  const auto params = chi_parameters(m_);
  std::ostringstream out;
  char buf[64];
  bool first = true;
  if (constant_ != 0.0) {
    std::snprintf(buf, sizeof buf, "%+.6g", constant_);
    out << buf;
    first = false;
  }
  for (const auto& t : terms_) {
    std::snprintf(buf, sizeof buf, "%+.6g", t.coeff);
    out << (first ? "" : " ") << buf << ' ' << params[t.parameter].label(m_);
    if (t.logical != 0) out << " <" << logical_name(k_, t.logical) << ">";
    first = false;
  }
  return first ? "0" : out.str();
}

ProbabilityFunctional build_functional(const ProtocolCode& pc, std::span<const Side> sides,
                                       std::span<const int> signs, const Syndrome& outcome) {
  ProbabilityFunctional f(pc.m(), pc.k());
  const AmbiguousSet* set = pc.cls.find(outcome);
  if (set == nullptr) return f;
  if (!signs.empty() && signs.size() != pc.cls.sets().size()) {
    throw std::invalid_argument("toggler needs one sign per ambiguous set");
  }

  // Each branch: chi index mu, amplitude, and the outcome error E_j with
  // side * E_mu = g * E_j.
  struct Branch {
    int mu;
    std::complex<double> amp;
    const Pauli* ej;
  };
  std::vector<Branch> branches;
  for (const Side& side : sides) {
    for (const Pauli& ej : set->errors) {
      const PauliFactor pf = pauli_factors(ej, side.error);
      std::complex<double> amp = side.amplitude * phase_value(pf.phase);
      if (!signs.empty()) {
        const int idx = pc.cls.set_index_of(pf.partner);
        if (idx >= 0) amp *= std::polar(1.0, signs[idx] * std::numbers::pi / 4.0);
      }
      branches.push_back({pc.local_index(pf.partner), amp, &ej});
    }
  }

  for (const Branch& b1 : branches) {
    for (const Branch& b2 : branches) {
      const Pauli product = *b2.ej * *b1.ej;
      const auto& action = pc.actions[pc.local_index(product)];
      if (!action) throw std::logic_error("outcome errors are not linked by a normalizer element");
      const std::complex<double> w = b1.amp * std::conj(b2.amp) * phase_value(product.phase() + action->phase);
      const int logical = static_cast<int>(action->logical.basis_index());
      if (b1.mu == b2.mu) {
        f.add(parameter_index({ChiParameter::Kind::Diag, b1.mu, b1.mu}, pc.m()), logical, w.real());
      } else {
        const int lo = std::min(b1.mu, b2.mu);
        const int hi = std::max(b1.mu, b2.mu);
        const double im_sign = b1.mu < b2.mu ? -1.0 : 1.0;
        f.add(parameter_index({ChiParameter::Kind::Re, lo, hi}, pc.m()), logical, w.real());
        f.add(parameter_index({ChiParameter::Kind::Im, lo, hi}, pc.m()), logical, im_sign * w.imag());
      }
    }
  }
  f.normalize();
  return f;
}

ProbabilityFunctional direct_functional(const ProtocolCode& pc, const Syndrome& outcome) {
  const Side identity{Pauli(pc.n()), 1.0};
  return build_functional(pc, std::span<const Side>(&identity, 1), {}, outcome);
}

ProbabilityFunctional preprocessed_functional(const ProtocolCode& pc, const Preprocessing& prep,
                                              const Syndrome& outcome) {
  validate_configuration(pc, Configuration{logical_zero(pc.k()), prep});
  if (!prep.unitary) throw std::invalid_argument("preprocessed functional needs U");
  const std::complex<double> c = commutes(prep.ea, prep.eb) ? std::complex<double>(0, 1) : 1.0;
  const Side sides[] = {{prep.ea, kInvSqrt2}, {prep.eb, c * kInvSqrt2}};
  const auto signs = toggler_signs(pc, prep);
  return build_functional(pc, sides, signs, outcome);
}

ProbabilityFunctional outcome_functional(const ProtocolCode& pc, const Preprocessing& prep, const Syndrome& outcome) {
  return prep.unitary ? preprocessed_functional(pc, prep, outcome) : direct_functional(pc, outcome);
}

}  // namespace asc
