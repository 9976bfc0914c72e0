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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "asc/pauli.hpp"
#include "asc/stabilizer.hpp"

namespace asc {

/// A built-in code with its designated noisy coordinates (0-based) and
/// any corrections applied to the printed data it was taken from.
struct CatalogEntry {
  std::string id;
  std::string description;
  StabilizerCode code;
  std::vector<int> coords;
  std::vector<std::string> errata;
};

/// "q3", "q5", "C1", "C2", "C3".
std::vector<std::string> catalog_ids();

/// Throws std::invalid_argument for an unknown id. Entries are built once
/// and shared.
const CatalogEntry& catalog_entry(std::string_view id);

/// (1/sqrt2)[[1, i], [i, 1]]: fixes X and exchanges Y and Z up to sign.
Eigen::Matrix2cd h_zy();
/// (1/2)[[1+i, 1+i], [-(1-i), 1-i]]: fixes Z and exchanges X and Y up to
/// sign.
Eigen::Matrix2cd h_yx();

/// The Pauli proportional to `m` by a power of i, if any.
std::optional<Pauli> as_pauli(const Eigen::MatrixXcd& m);

/// u^{(x)n} applied to the codewords, generators conjugated to
/// u G u^dagger. Throws std::invalid_argument if u is not a 2x2 unitary or
/// a conjugated generator is not a Pauli.
StabilizerCode transform_code(const StabilizerCode& code, const Eigen::Matrix2cd& u);

/// Per-qubit letter map of conjugation by u: result[letter] for X, Y, Z
/// as a signed single-qubit Pauli.
std::vector<Pauli> conjugation_action(const Eigen::Matrix2cd& u);

/// Printed syndrome table for one of the 4-qubit codes: generator text
/// as printed, the error pairs per column, and the sign rows.
struct PrintedSignTable {
  std::string id;
  std::vector<std::string> generators;
  std::vector<std::string> first_row;
  std::vector<std::string> second_row;
  std::vector<std::string> signs;  // one string of '+'/'-' per generator
};
std::vector<PrintedSignTable> printed_sign_tables();

struct CatalogCheck {
  std::string id;
  bool valid = false;          // code invariants hold
  std::optional<bool> table_matches;  // 4-qubit codes only
  std::vector<std::string> notes;
};

/// Re-validates every entry and compares the 4-qubit codes' syndromes to
/// their printed tables.
std::vector<CatalogCheck> validate_catalog();

}  // namespace asc
