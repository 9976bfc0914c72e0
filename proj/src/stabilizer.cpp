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

#include "asc/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace asc {
namespace {

constexpr double kTol = 1e-10;

// Rank of the generators' symplectic vectors over GF(2).
int symplectic_rank(std::span<const Pauli> ps) {
  std::vector<std::uint64_t> rows;
  for (const Pauli& p : ps) {
    rows.push_back((std::uint64_t{p.x_bits()} << 32) | p.z_bits());
  }
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](std::uint64_t r) { return r & mask; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

void check_generators(std::span<const Pauli> gens) {
  if (gens.empty()) return;
  const int n = gens.front().num_qubits();
  for (const Pauli& g : gens) {
    if (g.num_qubits() != n) throw std::invalid_argument("generators have different sizes");
    if (g.phase() % 2 != 0) {
      throw std::invalid_argument("generator " + to_string(g) + " is not Hermitian");
    }
    if (g.is_identity()) throw std::invalid_argument("identity cannot be a generator");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        throw std::invalid_argument("generators " + to_string(gens[i]) + " and " +
                                    to_string(gens[j]) + " anticommute");
      }
    }
  }
  if (symplectic_rank(gens) != static_cast<int>(gens.size())) {
    throw std::invalid_argument("generators are not independent");
  }
}

void normalize_phase_to(Eigen::VectorXcd& v, std::complex<double> target) {
  if (std::abs(target) < 1e-12) return;
  v *= std::conj(target) / std::abs(target);
}

void normalize_first_amplitude(Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) {
      normalize_phase_to(v, v(i));
      return;
    }
  }
}

// Gram-Schmidt of `candidate` against `basis`; returns false if nothing
// new survives.
bool orthonormalize_into(std::vector<Eigen::VectorXcd>& basis, Eigen::VectorXcd v) {
  for (const auto& b : basis) v -= b * b.dot(v);
  const double norm = v.norm();
  if (norm < 1e-8) return false;
  basis.push_back(v / norm);
  return true;
}

}  // namespace

Syndrome Syndrome::parse(std::string_view text) {
  std::uint32_t flips = 0;
  int length = 0;
  for (char c : text) {
    if (c == '+' || c == '-') {
      flips = (flips << 1) | (c == '-' ? 1u : 0u);
      ++length;
    } else if (c != ' ') {
      throw std::invalid_argument("malformed syndrome '" + std::string(text) + "'");
    }
  }
  return Syndrome(length, flips);
}

Syndrome Syndrome::operator*(const Syndrome& other) const {
  if (length_ != other.length_) throw std::invalid_argument("syndrome length mismatch");
  return Syndrome(length_, flips_ ^ other.flips_);
}

Syndrome Syndrome::without(std::span<const int> dropped) const {
  std::uint32_t flips = 0;
  int length = 0;
  for (int i = 0; i < length_; ++i) {
    if (std::find(dropped.begin(), dropped.end(), i) != dropped.end()) continue;
    flips = (flips << 1) | (bit(i) ? 1u : 0u);
    ++length;
  }
  return Syndrome(length, flips);
}

std::string Syndrome::str() const {
  std::string out;
  for (int i = 0; i < length_; ++i) out.push_back(bit(i) ? '-' : '+');
  return out;
}

StabilizerCode::StabilizerCode(std::vector<Pauli> generators, std::vector<Eigen::VectorXcd> codewords)
    : generators_(std::move(generators)), codewords_(std::move(codewords)) {
  finish();
}

void StabilizerCode::finish() {
  if (generators_.empty()) throw std::invalid_argument("a code needs at least one generator");
  check_generators(generators_);
  n_ = generators_.front().num_qubits();
  k_ = n_ - static_cast<int>(generators_.size());
  if (k_ < 0) throw std::invalid_argument("more generators than qubits");
  const Eigen::Index dim = Eigen::Index{1} << n_;
  const std::size_t count = std::size_t{1} << k_;
  if (codewords_.size() != count) {
    throw std::invalid_argument("expected " + std::to_string(count) + " codewords, got " +
                                std::to_string(codewords_.size()));
  }
  encoder_.resize(dim, static_cast<Eigen::Index>(count));
  for (std::size_t j = 0; j < count; ++j) {
    if (codewords_[j].size() != dim) throw std::invalid_argument("codeword has wrong dimension");
    encoder_.col(static_cast<Eigen::Index>(j)) = codewords_[j];
  }
  const Eigen::MatrixXcd gram = encoder_.adjoint() * encoder_;
  if (!gram.isApprox(Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()), kTol) &&
      (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > kTol) {
    throw std::invalid_argument("codewords are not orthonormal");
  }
  for (const Pauli& g : generators_) {
    const Eigen::MatrixXcd moved = to_matrix(g) * encoder_;
    if ((moved - encoder_).cwiseAbs().maxCoeff() > kTol) {
      throw std::invalid_argument("generator " + to_string(g) + " does not stabilize the codewords");
    }
  }
}

StabilizerCode StabilizerCode::from_generators(std::vector<Pauli> generators) {
  check_generators(generators);
  if (generators.empty()) throw std::invalid_argument("a code needs at least one generator");
  const int n = generators.front().num_qubits();
  const Eigen::MatrixXcd proj = codespace_projector(generators);
  const std::size_t want = std::size_t{1} << (n - static_cast<int>(generators.size()));
  std::vector<Eigen::VectorXcd> basis;
  for (Eigen::Index i = 0; i < proj.cols() && basis.size() < want; ++i) {
    orthonormalize_into(basis, proj.col(i));
  }
  for (auto& b : basis) normalize_first_amplitude(b);
  return StabilizerCode(std::move(generators), std::move(basis));
}

StabilizerCode StabilizerCode::from_reference_kets(std::vector<Pauli> generators,
                                                   std::span<const Eigen::VectorXcd> kets) {
  check_generators(generators);
  if (generators.empty()) throw std::invalid_argument("a code needs at least one generator");
  const Eigen::MatrixXcd proj = codespace_projector(generators);
  std::vector<Eigen::VectorXcd> basis;
  for (const auto& ket : kets) {
    if (ket.size() != proj.rows()) throw std::invalid_argument("reference ket has wrong dimension");
    if (!orthonormalize_into(basis, proj * ket)) {
      throw std::invalid_argument("reference ket has no new component in the code space");
    }
    normalize_phase_to(basis.back(), ket.dot(basis.back()));
  }
  return StabilizerCode(std::move(generators), std::move(basis));
}

StabilizerCode StabilizerCode::without_generators(std::span<const int> dropped) const {
  std::vector<Pauli> kept;
  for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
    if (std::find(dropped.begin(), dropped.end(), i) == dropped.end()) kept.push_back(generators_[i]);
  }
  return from_generators(std::move(kept));
}

Syndrome syndrome_of(const Pauli& error, std::span<const Pauli> checks) {
  std::uint32_t flips = 0;
  for (const Pauli& g : checks) flips = (flips << 1) | (commutes(error, g) ? 0u : 1u);
  return Syndrome(static_cast<int>(checks.size()), flips);
}

Syndrome syndrome_of(const Pauli& error, const StabilizerCode& code) {
  if (error.num_qubits() != code.n()) throw std::invalid_argument("error size does not match code");
  return syndrome_of(error, std::span<const Pauli>(code.generators()));
}

Eigen::MatrixXcd syndrome_projector(std::span<const Pauli> generators, const Syndrome& s) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const Eigen::Index dim = Eigen::Index{1} << generators.front().num_qubits();
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const double sign = s.sign(static_cast<int>(i));
    proj = proj * (0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + sign * to_matrix(generators[i])));
  }
  return proj;
}

Eigen::MatrixXcd codespace_projector(std::span<const Pauli> generators) {
  return syndrome_projector(generators, Syndrome(static_cast<int>(generators.size()), 0));
}

Eigen::MatrixXcd codespace_projector(const StabilizerCode& code) {
  return codespace_projector(std::span<const Pauli>(code.generators()));
}

std::vector<Pauli> stabilizer_group(const StabilizerCode& code) {
  const auto& gens = code.generators();
  std::vector<Pauli> out;
  const std::uint32_t count = 1u << gens.size();
  for (std::uint32_t subset = 0; subset < count; ++subset) {
    Pauli p(code.n());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((subset >> i) & 1u) p = p * gens[i];
    }
    out.push_back(p);
  }
  return out;
}

bool in_stabilizer(const Pauli& p, const StabilizerCode& code) {
  for (const Pauli& s : stabilizer_group(code)) {
    if (s == p) return true;
  }
  return false;
}

std::vector<Pauli> normalizer(const StabilizerCode& code) {
  std::vector<Pauli> out;
  for (const Pauli& p : all_paulis(code.n())) {
    bool ok = true;
    for (const Pauli& g : code.generators()) {
      if (!commutes(p, g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

std::string LogicalAction::str() const {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string body;
  if (logical.num_qubits() == 1) {
    body.push_back(logical.letter(0));
  } else {
    for (int q = 0; q < logical.num_qubits(); ++q) body.push_back(logical.letter(q));
  }
  return std::string(kPrefix[phase]) + body + "_L";
}

LogicalAction logical_action(const Pauli& element, const StabilizerCode& code) {
  if (element.num_qubits() != code.n()) throw std::invalid_argument("operator size does not match code");
  const Eigen::MatrixXcd& enc = code.encoder();
  const Eigen::MatrixXcd moved = to_matrix(element) * enc;
  const Eigen::MatrixXcd m = enc.adjoint() * moved;
  if ((moved - enc * m).cwiseAbs().maxCoeff() > kTol) {
    throw std::domain_error(to_string(element) + " does not preserve the code space");
  }
  const double dim = static_cast<double>(m.rows());
  for (const Pauli& l : all_paulis(code.k())) {
    const std::complex<double> c = (to_matrix(l).adjoint() * m).trace() / dim;
    if (std::abs(std::abs(c) - 1.0) > 1e-8) continue;
    for (int ph = 0; ph < 4; ++ph) {
      if (std::abs(c - phase_value(ph)) < 1e-8) {
        if ((m - phase_value(ph) * to_matrix(l)).cwiseAbs().maxCoeff() > kTol) break;
        return LogicalAction{l, ph};
      }
    }
  }
  throw std::domain_error(to_string(element) + " has no logical Pauli action");
}

Eigen::VectorXcd encode(const Eigen::VectorXcd& state, const StabilizerCode& code) {
  if (state.size() != code.encoder().cols()) throw std::invalid_argument("logical state has wrong dimension");
  if (std::abs(state.norm() - 1.0) > 1e-12) throw std::invalid_argument("logical state is not normalized");
  return code.encoder() * state;
}

Eigen::VectorXd logical_expectations(const Eigen::VectorXcd& encoded, const StabilizerCode& code) {
  const Eigen::MatrixXcd& enc = code.encoder();
  if (encoded.size() != enc.rows()) throw std::invalid_argument("state has wrong dimension");
  if ((encoded - enc * (enc.adjoint() * encoded)).norm() > kTol) {
    throw std::domain_error("state is not in the code space");
  }
  const std::size_t count = std::size_t{1} << (2 * code.k());
  std::vector<bool> found(count, false);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(count));
  std::size_t remaining = count;
  for (const Pauli& p : all_paulis(code.n())) {
    if (remaining == 0) break;
    bool in_normalizer = true;
    for (const Pauli& g : code.generators()) in_normalizer = in_normalizer && commutes(p, g);
    if (!in_normalizer) continue;
    const LogicalAction act = logical_action(p, code);
    const std::uint32_t idx = act.logical.basis_index();
    if (found[idx]) continue;
    found[idx] = true;
    --remaining;
    // <psi|N|psi> = i^phase <L>
    const std::complex<double> v = encoded.dot(to_matrix(p) * encoded) * phase_value(-act.phase);
    out(idx) = v.real();
  }
  return out;
}

void write_code(std::ostream& out, const StabilizerCode& code) {
  out << code.n() << ' ' << code.k() << '\n';
  for (const Pauli& g : code.generators()) out << to_string(g) << '\n';
  char buf[96];
  for (std::size_t j = 0; j < code.codewords().size(); ++j) {
    out << "codeword " << j << '\n';
    const auto& cw = code.codewords()[j];
    for (Eigen::Index i = 0; i < cw.size(); ++i) {
      if (std::abs(cw(i)) < 1e-15) continue;
      std::snprintf(buf, sizeof buf, "%lld %.17g %.17g\n", static_cast<long long>(i), cw(i).real(),
                    cw(i).imag());
      out << buf;
    }
  }
}

StabilizerCode read_code(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty code file");
  int n = 0, k = 0;
  {
    std::istringstream header(lines[0]);
    if (!(header >> n >> k) || n <= 0 || k < 0 || k >= n) {
      throw std::invalid_argument("code file header must be 'n k'");
    }
  }
  const std::size_t ngen = static_cast<std::size_t>(n - k);
  if (lines.size() < 1 + ngen) throw std::invalid_argument("code file lists too few generators");
  std::vector<Pauli> gens;
  for (std::size_t i = 0; i < ngen; ++i) {
    std::istringstream ls(lines[1 + i]);
    std::string token;
    ls >> token;
    gens.push_back(parse_pauli(token, n));
  }
  std::vector<Eigen::VectorXcd> words;
  const Eigen::Index dim = Eigen::Index{1} << n;
  for (std::size_t i = 1 + ngen; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string first;
    ls >> first;
    if (first == "codeword") {
      words.push_back(Eigen::VectorXcd::Zero(dim));
      continue;
    }
    if (words.empty()) throw std::invalid_argument("amplitude line outside a codeword block");
    long long index = std::stoll(first);
    double re = 0, im = 0;
    if (!(ls >> re >> im) || index < 0 || index >= dim) {
      throw std::invalid_argument("malformed amplitude line: " + lines[i]);
    }
    words.back()(index) = {re, im};
  }
  if (words.empty()) return StabilizerCode::from_generators(std::move(gens));
  return StabilizerCode(std::move(gens), std::move(words));
}

}  // namespace asc
