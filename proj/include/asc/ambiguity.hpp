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
#include <vector>

#include "asc/pauli.hpp"
#include "asc/stabilizer.hpp"

namespace asc {

/// An allowed error set: distinct phase-0 Paulis on n qubits.
struct ErrorSet {
  int n = 0;
  std::vector<Pauli> elements;

  /// All 4^m Paulis supported on the given 0-based coordinates, in the
  /// lexicographic order of their local letters.
  static ErrorSet on_coordinates(int n, std::span<const int> coords);

  /// Every Pauli of weight at most w (identity included).
  static ErrorSet up_to_weight(int n, int w);
};

/// Errors sharing one syndrome, ordered by (weight, label).
struct AmbiguousSet {
  Syndrome syndrome;
  std::vector<Pauli> errors;

  bool contains(const Pauli& e) const;
};

/// Partition of an error set by syndrome. Sets are kept in syndrome order.
class AmbiguousClass {
 public:
  AmbiguousClass(std::vector<Pauli> checks, std::vector<AmbiguousSet> sets);

  const std::vector<Pauli>& checks() const { return checks_; }
  const std::vector<AmbiguousSet>& sets() const { return sets_; }

  /// Number of nonempty sets (sigma).
  int order() const { return static_cast<int>(sets_.size()); }
  /// Size of the largest set (gamma).
  int degree() const;
  /// Total number of errors.
  int size() const;

  /// Set with the given syndrome, or nullptr if unoccupied.
  const AmbiguousSet* find(const Syndrome& s) const;
  /// Index of the set holding `e`, or -1.
  int set_index_of(const Pauli& e) const;

 private:
  std::vector<Pauli> checks_;
  std::vector<AmbiguousSet> sets_;
};

AmbiguousClass build_class(const StabilizerCode& code, const ErrorSet& errors);
AmbiguousClass build_class(std::span<const Pauli> checks, const ErrorSet& errors);

/// The normalizer element linking two ambiguous errors.
struct AmbiguityNormalizer {
  Pauli product;            // e1 * e2 with its phase
  Pauli reversed;           // e2 * e1, always product.dagger()
  LogicalAction action;     // action of the phase-0 letters of the product
  LogicalAction full_action;  // action including the product's phase
  bool commuting = false;   // [e1, e2] = 0, equivalently product == reversed
};

/// Throws std::invalid_argument if e1 and e2 have different syndromes.
AmbiguityNormalizer ambiguity_normalizer(const Pauli& e1, const Pauli& e2, const StabilizerCode& code);

/// The no-error-syndrome set of all Paulis on the given coordinates,
/// with the subgroup checks that make the ambiguous class a group (all modulo
/// phase).
struct GroupReport {
  std::vector<Pauli> group;
  bool has_identity = false;
  bool closed = false;
  bool self_inverse = false;
  bool ok() const { return has_identity && closed && self_inverse; }
};

GroupReport verify_ambiguous_group(const StabilizerCode& code, std::span<const int> coords);
GroupReport verify_ambiguous_group(std::span<const Pauli> checks, int n, std::span<const int> coords);

struct Coset {
  Pauli representative;
  Syndrome syndrome;
  std::vector<Pauli> elements;  // representative * group, (weight, label) order
};

/// Cosets of the ambiguous group inside all Paulis on `coords`. Throws
/// std::runtime_error if the group checks fail or an ambiguous set is
/// not a coset.
std::vector<Coset> quotient_structure(const StabilizerCode& code, std::span<const int> coords);
std::vector<Coset> quotient_structure(std::span<const Pauli> checks, int n, std::span<const int> coords);

struct HammingReport {
  bool satisfied = false;
  bool perfect = false;
};

/// 2^k * error_count <= 2^n; perfect on equality.
HammingReport hamming_check(int n, int k, long long error_count);

/// 2^(2m - n + k). Throws std::invalid_argument if 2m < n - k.
long long degree_formula(int n, int k, int m);

/// Merges sets whose syndromes agree once the listed generator indices
/// (0-based) are no longer measured.
AmbiguousClass coarse_grain(const AmbiguousClass& cls, std::span<const int> dropped);

}  // namespace asc
