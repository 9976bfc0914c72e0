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

#include <span>
#include <string>
#include <vector>

#include "asc/ambiguity.hpp"
#include "asc/stabilizer.hpp"

namespace asc {

/// Plain-text table renderers used by the command-line tool. Columns are
/// left-aligned and separated by at least two spaces; lines carry no
/// trailing whitespace.

/// Rows of cells rendered with per-column widths.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

/// Ambiguous class over all Paulis on `coords`, laid out as the quotient
/// by the ambiguous group: one column per set in syndrome order, row r
/// holding representative * (r-th group element), and a final column with
/// the logical action of that group element. Throws std::runtime_error if
/// the class is not a quotient.
std::string quotient_table(const StabilizerCode& code, std::span<const int> coords);

/// Any ambiguous class: one column per set in syndrome order, errors
/// listed below in (weight, label) order.
std::string class_table(const AmbiguousClass& cls);

/// Normalizer grouped by logical class (I, X, Y, Z order for k=1). Each
/// column header is the action of its first element; elements supported
/// on `coords` come first, the rest follow in lexicographic order. A note
/// lists every element whose sign differs from its column header.
std::string normalizer_table(const StabilizerCode& code, std::span<const int> coords);

/// Syndrome sign table: one column per set ordered by representative,
/// the set's errors below the code id, then one row of signs per
/// generator.
std::string sign_table(const std::string& id, const StabilizerCode& code, const AmbiguousClass& cls);

/// Order, degree and set sizes.
std::string class_summary(const AmbiguousClass& cls);

/// Ambiguous group checks and cosets.
std::string group_report(const StabilizerCode& code, std::span<const int> coords);

/// Hamming bound and, for coordinate error sets, the degree formula.
std::string hamming_report(const StabilizerCode& code, const AmbiguousClass& cls, int m);

}  // namespace asc
