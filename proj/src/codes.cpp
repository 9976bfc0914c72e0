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

#include "asc/codes.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace asc {
namespace {

struct Term {
  double sign;
  const char* bits;
};

Eigen::VectorXcd ket(std::initializer_list<Term> terms, int n, double norm) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (const Term& t : terms) {
    const std::string bits(t.bits);
    if (static_cast<int>(bits.size()) != n) throw std::logic_error("ket length mismatch");
    v(static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))) += t.sign * norm;
  }
  return v;
}

std::vector<Pauli> paulis(std::initializer_list<const char*> texts) {
  std::vector<Pauli> out;
  for (const char* t : texts) out.push_back(parse_pauli(t));
  return out;
}

Eigen::MatrixXcd tensor_power(const Eigen::Matrix2cd& u, int n) {
  Eigen::MatrixXcd out = u;
  for (int i = 1; i < n; ++i) out = Eigen::kroneckerProduct(out, u).eval();
  return out;
}

const double kQuarterRoot8 = 1.0 / (2.0 * std::sqrt(2.0));

std::vector<Eigen::VectorXcd> c1_codewords() {
  return {ket({{-1, "0000"}, {1, "0010"}, {1, "0101"}, {1, "0111"},
               {-1, "1001"}, {1, "1011"}, {1, "1100"}, {1, "1110"}}, 4, kQuarterRoot8),
          ket({{-1, "1111"}, {1, "1101"}, {1, "1010"}, {1, "1000"},
               {-1, "0110"}, {1, "0100"}, {1, "0011"}, {1, "0001"}}, 4, kQuarterRoot8)};
}

std::vector<Eigen::VectorXcd> transformed(const std::vector<Eigen::VectorXcd>& words, const Eigen::Matrix2cd& u) {
  const Eigen::MatrixXcd big = tensor_power(u, 4);
  std::vector<Eigen::VectorXcd> out;
  for (const auto& w : words) out.push_back(big * w);
  return out;
}

CatalogEntry build_entry(std::string_view id) {
  const std::vector<int> coords = {0, 1};
  if (id == "q3") {
    std::vector<Eigen::VectorXcd> words = {
        ket({{1, "001"}, {1, "010"}, {1, "100"}, {1, "111"}}, 3, 0.5),
        ket({{1, "110"}, {-1, "101"}, {1, "011"}, {-1, "000"}}, 3, 0.5)};
    return {"q3", "[[3,1]] code correcting arbitrary errors on qubit 1",
            StabilizerCode(paulis({"XIX", "YYZ"}), std::move(words)), coords, {}};
  }
  if (id == "q5") {
    // The printed |0_L> lists a four-bit ket |0111>; it is dropped and the
    // remaining terms are projected onto the code space, which restores the
    // missing |01111> term and keeps the printed phase.
    const std::vector<Eigen::VectorXcd> refs = {
        ket({{-1, "00000"}, {-1, "10011"}, {1, "11100"}, {1, "00110"},
             {1, "01001"}, {1, "10101"}, {1, "11010"}}, 5, kQuarterRoot8),
        ket({{-1, "11111"}, {1, "10000"}, {1, "01100"}, {-1, "00011"},
             {1, "11001"}, {1, "10110"}, {-1, "01010"}, {-1, "00101"}}, 5, kQuarterRoot8)};
    return {"q5", "[[5,1]] perfect code",
            StabilizerCode::from_reference_kets(paulis({"IXXYY", "IYYXX", "XIYZY", "YXYIZ"}), refs), coords,
            {"printed |0_L> contains the four-qubit ket |0111>; codeword regenerated by projection "
             "(equivalent to reading it as |01111>)"}};
  }
  if (id == "C1") {
    return {"C1", "[[4,1]] code from dropping the last qubit of the [[5,1]] code",
            StabilizerCode(paulis({"XIIX", "YIXY", "YYZZ"}), c1_codewords()), coords, {}};
  }
  if (id == "C2") {
    return {"C2", "C1 codewords transformed by H_ZY on every qubit",
            StabilizerCode(paulis({"IZZX", "XIIX", "YZYZ"}), transformed(c1_codewords(), h_zy())), coords, {}};
  }
  if (id == "C3") {
    return {"C3", "C1 codewords transformed by H_YX on every qubit",
            StabilizerCode(paulis({"IXXZ", "XIZX", "YXYX"}), transformed(c1_codewords(), h_yx())), coords,
            {"printed generator XIXZ anticommutes with YXYX and does not stabilize the transformed codewords; "
             "XIZX is used (identical syndromes on the noisy coordinates)"}};
  }
  throw std::invalid_argument("unknown code id '" + std::string(id) + "' (known: q3, q5, C1, C2, C3)");
}

}  // namespace

std::vector<std::string> catalog_ids() { return {"q3", "q5", "C1", "C2", "C3"}; }

const CatalogEntry& catalog_entry(std::string_view id) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(id);
  if (it == cache.end()) {
    it = cache.emplace(std::string(id), std::make_unique<CatalogEntry>(build_entry(id))).first;
  }
  return *it->second;
}

Eigen::Matrix2cd h_zy() {
  using C = std::complex<double>;
  Eigen::Matrix2cd h;
  h << C(1, 0), C(0, 1), C(0, 1), C(1, 0);
  return h / std::sqrt(2.0);
}

Eigen::Matrix2cd h_yx() {
  using C = std::complex<double>;
  Eigen::Matrix2cd h;
  h << C(1, 1), C(1, 1), -C(1, -1), C(1, -1);
  return h / 2.0;
}

std::optional<Pauli> as_pauli(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() < 2 || (m.rows() & (m.rows() - 1)) != 0) return std::nullopt;
  int n = 0;
  while ((Eigen::Index{1} << n) < m.rows()) ++n;
  const double dim = static_cast<double>(m.rows());
  for (const Pauli& p : all_paulis(n)) {
    const Eigen::MatrixXcd pm = to_matrix(p);
    const std::complex<double> c = (pm.adjoint() * m).trace() / dim;
    if (std::abs(std::abs(c) - 1.0) > 1e-9) continue;
    for (int ph = 0; ph < 4; ++ph) {
      if (std::abs(c - phase_value(ph)) < 1e-9 && (m - phase_value(ph) * pm).cwiseAbs().maxCoeff() < 1e-9) {
        return p.with_phase(ph);
      }
    }
  }
  return std::nullopt;
}

std::vector<Pauli> conjugation_action(const Eigen::Matrix2cd& u) {
  std::vector<Pauli> out;
  for (char letter : {'X', 'Y', 'Z'}) {
    const auto p = as_pauli(u * to_matrix(Pauli::single(1, 0, letter)) * u.adjoint());
    if (!p) throw std::invalid_argument("unitary does not map Paulis to Paulis");
    out.push_back(*p);
  }
  return out;
}

StabilizerCode transform_code(const StabilizerCode& code, const Eigen::Matrix2cd& u) {
  if ((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("transform is not unitary");
  }
  const Eigen::MatrixXcd big = tensor_power(u, code.n());
  std::vector<Pauli> gens;
  for (const Pauli& g : code.generators()) {
    const auto p = as_pauli(big * to_matrix(g) * big.adjoint());
    if (!p) throw std::invalid_argument("conjugated generator " + to_string(g) + " is not a Pauli");
    gens.push_back(*p);
  }
  std::vector<Eigen::VectorXcd> words;
  for (const auto& w : code.codewords()) words.push_back(big * w);
  return StabilizerCode(std::move(gens), std::move(words));
}

std::vector<PrintedSignTable> printed_sign_tables() {
  return {
      {"C1",
       {"XIIX", "YIXY", "YYZZ"},
       {"II", "XI", "IX", "YI", "ZI", "XX", "YX", "ZX"},
       {"IY", "XY", "IZ", "YY", "ZY", "XZ", "YZ", "ZZ"},
       {"+++--+--", "+-++--+-", "+--+-+-+"}},
      {"C2",
       {"IZZX", "XIIX", "YZYZ"},
       {"II", "XI", "IX", "YI", "ZI", "XX", "YX", "ZX"},
       {"IZ", "XZ", "IY", "YZ", "ZZ", "XY", "YY", "ZY"},
       {"++-++---", "+++--+--", "+--+-+-+"}},
      {"C3",
       {"IXXZ", "XIXZ", "YXYX"},
       {"II", "XI", "YI", "IY", "ZI", "XY", "YY", "ZY"},
       {"IX", "XX", "YX", "IZ", "ZX", "XZ", "YZ", "ZZ"},
       {"+++-+---", "++-+-+--", "+-+--+-+"}},
  };
}

std::vector<CatalogCheck> validate_catalog() {
  std::vector<CatalogCheck> out;
  const auto tables = printed_sign_tables();
  for (const std::string& id : catalog_ids()) {
    CatalogCheck check{id, false, std::nullopt, {}};
    try {
      const CatalogEntry& entry = catalog_entry(id);
      // Re-run the constructor checks on the stored data.
      StabilizerCode again(entry.code.generators(), entry.code.codewords());
      check.valid = true;
      check.notes = entry.errata;
      for (const auto& table : tables) {
        if (table.id != id) continue;
        bool match = true;
        const auto& gens = entry.code.generators();
        for (std::size_t g = 0; g < gens.size(); ++g) {
          if (to_string(gens[g]) != table.generators[g]) {
            check.notes.push_back("generator " + std::to_string(g + 1) + " printed as " + table.generators[g] +
                                  ", used " + to_string(gens[g]));
          }
          for (std::size_t c = 0; c < table.first_row.size(); ++c) {
            for (const auto* row : {&table.first_row, &table.second_row}) {
              const Pauli e = embed(parse_pauli((*row)[c]), entry.code.n(), entry.coords);
              const char got = commutes(e, gens[g]) ? '+' : '-';
              if (got != table.signs[g][c]) {
                match = false;
                check.notes.push_back("sign mismatch for " + (*row)[c] + " under " + to_string(gens[g]));
              }
            }
          }
        }
        check.table_matches = match;
      }
    } catch (const std::exception& e) {
      check.notes.push_back(e.what());
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace asc
