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

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace asc {
namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

void check_size(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("Pauli register size must be in [0, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
  }
}

void check_same_size(const Pauli& a, const Pauli& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("Pauli size mismatch: " +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()));
  }
}

// Reverses the low n bits so that qubit 0 lands on the most significant
// bit of a computational basis index.
std::uint32_t reverse_bits(std::uint32_t v, int n) {
  std::uint32_t r = 0;
  for (int q = 0; q < n; ++q) {
    if ((v >> q) & 1u) r |= 1u << (n - 1 - q);
  }
  return r;
}

struct SignPrefix {
  int phase = 0;
  std::string_view rest;
};

SignPrefix strip_sign(std::string_view text) {
  SignPrefix out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    out.phase = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("\xE2\x88\x92")) {  // U+2212
    out.phase = 2;
    text.remove_prefix(3);
  }
  if (text.starts_with("i")) {
    out.phase += 1;
    text.remove_prefix(1);
  }
  out.rest = trim(text);
  return out;
}

int letter_code(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: return -1;
  }
}

void set_letter(std::uint32_t& x, std::uint32_t& z, int q, char c) {
  switch (c) {
    case 'X': x |= 1u << q; break;
    case 'Y': x |= 1u << q; z |= 1u << q; break;
    case 'Z': z |= 1u << q; break;
    default: break;
  }
}

}  // namespace

std::complex<double> phase_value(int k) {
  switch (mod4(k)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Pauli::Pauli(int n) : n_(n) { check_size(n); }

Pauli::Pauli(int n, std::uint32_t x_bits, std::uint32_t z_bits, int phase)
    : n_(n), x_(x_bits), z_(z_bits), phase_(mod4(phase)) {
  check_size(n);
  const std::uint32_t mask = n == 32 ? ~0u : ((1u << n) - 1u);
  if ((x_bits | z_bits) & ~mask) {
    throw std::invalid_argument("Pauli bits exceed register size");
  }
}

Pauli Pauli::single(int n, int qubit, char letter) {
  if (qubit < 0 || qubit >= n) throw std::out_of_range("qubit index out of range");
  if (letter_code(letter) < 0) throw std::invalid_argument(std::string("bad Pauli letter '") + letter + "'");
  std::uint32_t x = 0, z = 0;
  set_letter(x, z, qubit, letter);
  return Pauli(n, x, z);
}

Pauli Pauli::from_basis_index(int n, std::uint32_t index) {
  check_size(n);
  std::uint32_t x = 0, z = 0;
  for (int q = n - 1; q >= 0; --q) {
    set_letter(x, z, q, "IXYZ"[index & 3u]);
    index >>= 2;
  }
  if (index != 0) throw std::out_of_range("basis index exceeds 4^n");
  return Pauli(n, x, z);
}

char Pauli::letter(int qubit) const {
  const int xb = (x_ >> qubit) & 1u;
  const int zb = (z_ >> qubit) & 1u;
  return "IZXY"[2 * xb + zb];
}

int Pauli::weight() const { return std::popcount(x_ | z_); }

std::uint32_t Pauli::basis_index() const {
  std::uint32_t index = 0;
  for (int q = 0; q < n_; ++q) {
    index = (index << 2) | static_cast<std::uint32_t>(letter_code(letter(q)));
  }
  return index;
}

Pauli multiply(const Pauli& a, const Pauli& b) {
  check_same_size(a, b);
  // Move to the X^x Z^z form, where the only reordering cost is Z past X.
  const int total = a.phase() + b.phase() + std::popcount(a.x_bits() & a.z_bits()) +
                    std::popcount(b.x_bits() & b.z_bits()) +
                    2 * std::popcount(a.z_bits() & b.x_bits());
  const std::uint32_t x = a.x_bits() ^ b.x_bits();
  const std::uint32_t z = a.z_bits() ^ b.z_bits();
  return Pauli(a.num_qubits(), x, z, total - std::popcount(x & z));
}

bool commutes(const Pauli& a, const Pauli& b) {
  check_same_size(a, b);
  const int s = std::popcount(a.x_bits() & b.z_bits()) + std::popcount(a.z_bits() & b.x_bits());
  return s % 2 == 0;
}

Eigen::MatrixXcd to_matrix(const Pauli& p) {
  const int n = p.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const std::uint32_t xr = reverse_bits(p.x_bits(), n);
  const std::uint32_t zr = reverse_bits(p.z_bits(), n);
  const int base = p.phase() + std::popcount(p.x_bits() & p.z_bits());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint32_t col = 0; col < static_cast<std::uint32_t>(dim); ++col) {
    // X^x Z^z |col> = (-1)^{z.col} |col ^ x>
    const int sign = std::popcount(zr & col) % 2;
    m(col ^ xr, col) = phase_value(base + 2 * sign);
  }
  return m;
}

Pauli parse_pauli(std::string_view text) {
  const SignPrefix s = strip_sign(text);
  if (s.rest.empty()) throw std::invalid_argument("empty Pauli string '" + std::string(text) + "'");
  const int n = static_cast<int>(s.rest.size());
  check_size(n);
  std::uint32_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const char c = s.rest[q];
    if (letter_code(c) < 0) {
      throw std::invalid_argument("malformed Pauli string '" + std::string(text) + "'");
    }
    set_letter(x, z, q, c);
  }
  return Pauli(n, x, z, s.phase);
}

Pauli parse_pauli(std::string_view text, int n) {
  check_size(n);
  const SignPrefix s = strip_sign(text);
  const std::string_view body = s.rest;
  if (body.empty()) throw std::invalid_argument("empty Pauli string");
  const bool dense = std::all_of(body.begin(), body.end(), [](char c) { return letter_code(c) >= 0; });
  if (dense && static_cast<int>(body.size()) == n) {
    Pauli p = parse_pauli(body);
    return p.with_phase(s.phase);
  }
  if (body == "I") return Pauli(n).with_phase(s.phase);

  // Subscripted shorthand: letter [_] digits, optionally separated by spaces.
  std::uint32_t x = 0, z = 0, seen = 0;
  std::size_t i = 0;
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    const char c = body[i];
    if (letter_code(c) < 0) {
      throw std::invalid_argument("malformed Pauli string '" + std::string(text) + "'");
    }
    ++i;
    if (i < body.size() && body[i] == '_') ++i;
    std::size_t start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (start == i) {
      throw std::invalid_argument("inconsistent Pauli length in '" + std::string(text) +
                                  "' for n=" + std::to_string(n));
    }
    const int q = std::stoi(std::string(body.substr(start, i - start))) - 1;
    if (q < 0 || q >= n) {
      throw std::invalid_argument("qubit index out of range in '" + std::string(text) + "'");
    }
    if ((seen >> q) & 1u) {
      throw std::invalid_argument("repeated qubit index in '" + std::string(text) + "'");
    }
    seen |= 1u << q;
    set_letter(x, z, q, c);
  }
  return Pauli(n, x, z, s.phase);
}

std::string to_string(const Pauli& p) {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string out = kPrefix[p.phase()];
  for (int q = 0; q < p.num_qubits(); ++q) out.push_back(p.letter(q));
  return out;
}

std::string to_label(const Pauli& p) {
  std::string out;
  for (int q = 0; q < p.num_qubits(); ++q) {
    const char c = p.letter(q);
    if (c == 'I') continue;
    out.push_back(c);
    out += std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

bool label_less(const Pauli& a, const Pauli& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return to_label(a) < to_label(b);
}

std::vector<Pauli> all_paulis(int n) {
  check_size(n);
  const std::uint32_t count = 1u << (2 * n);
  std::vector<Pauli> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(Pauli::from_basis_index(n, i));
  return out;
}

Pauli embed(const Pauli& local, int n, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != local.num_qubits()) {
    throw std::invalid_argument("embed: coordinate count does not match operator size");
  }
  std::uint32_t x = 0, z = 0, used = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const int q = coords[j];
    if (q < 0 || q >= n) throw std::invalid_argument("embed: coordinate out of range");
    if ((used >> q) & 1u) throw std::invalid_argument("embed: repeated coordinate");
    used |= 1u << q;
    set_letter(x, z, q, local.letter(static_cast<int>(j)));
  }
  return Pauli(n, x, z, local.phase());
}

Pauli restrict_to(const Pauli& p, std::span<const int> coords) {
  const int m = static_cast<int>(coords.size());
  std::uint32_t x = 0, z = 0;
  for (int j = 0; j < m; ++j) set_letter(x, z, j, p.letter(coords[j]));
  return Pauli(m, x, z, p.phase());
}

bool supported_within(const Pauli& p, std::span<const int> coords) {
  std::uint32_t mask = 0;
  for (int q : coords) mask |= 1u << q;
  return ((p.x_bits() | p.z_bits()) & ~mask) == 0;
}

}  // namespace asc
