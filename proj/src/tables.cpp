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

#include "asc/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace asc {
namespace {

std::string dense_letters(const Pauli& p) {
  std::string out;
  for (int q = 0; q < p.num_qubits(); ++q) out.push_back(p.letter(q));
  return out;
}

std::string signed_action(const LogicalAction& a) {
  // Hermitian normalizer elements act with phase +1 or -1.
  return a.phase == 0 ? "+" + a.str() : a.str();
}

}  // namespace

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string quotient_table(const StabilizerCode& code, std::span<const int> coords) {
  const auto cosets = quotient_structure(code, coords);
  const GroupReport group = verify_ambiguous_group(code, coords);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (const auto& c : cosets) header.push_back(c.syndrome.str());
  header.push_back("Normalizer");
  rows.push_back(header);
  for (const Pauli& b : group.group) {
    std::vector<std::string> row;
    for (const auto& c : cosets) row.push_back(to_label(c.representative * b));
    row.push_back(logical_action(b, code).str());
    rows.push_back(row);
  }
  return render_table(rows);
}

std::string class_table(const AmbiguousClass& cls) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (const auto& s : cls.sets()) header.push_back(s.syndrome.str());
  rows.push_back(header);
  for (int r = 0; r < cls.degree(); ++r) {
    std::vector<std::string> row;
    for (const auto& s : cls.sets()) {
      row.push_back(r < static_cast<int>(s.errors.size()) ? to_label(s.errors[r]) : "");
    }
    rows.push_back(row);
  }
  return render_table(rows);
}

std::string normalizer_table(const StabilizerCode& code, std::span<const int> coords) {
  std::map<std::uint32_t, std::vector<std::pair<Pauli, LogicalAction>>> columns;
  for (const Pauli& p : normalizer(code)) {
    const LogicalAction a = logical_action(p, code);
    columns[a.logical.basis_index()].emplace_back(p, a);
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  std::vector<std::string> notes;
  std::size_t height = 0;
  for (auto& [index, list] : columns) {
    std::stable_sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      const bool ia = supported_within(a.first, coords);
      const bool ib = supported_within(b.first, coords);
      if (ia != ib) return ia;
      return a.first.basis_index() < b.first.basis_index();
    });
    const LogicalAction& head = list.front().second;
    header.push_back(head.str());
    for (const auto& [p, a] : list) {
      if (a.phase != head.phase) {
        notes.push_back(dense_letters(p) + " acts as " + signed_action(a) + " (column " + head.str() + ")");
      }
    }
    height = std::max(height, list.size());
  }
  rows.push_back(header);
  for (std::size_t r = 0; r < height; ++r) {
    std::vector<std::string> row;
    for (const auto& [index, list] : columns) row.push_back(r < list.size() ? dense_letters(list[r].first) : "");
    rows.push_back(row);
  }
  std::string out = render_table(rows);
  if (!notes.empty()) {
    out += "\nSign notes:\n";
    for (const auto& n : notes) out += "  " + n + "\n";
  }
  return out;
}

std::string sign_table(const std::string& id, const StabilizerCode& code, const AmbiguousClass& cls) {
  std::vector<const AmbiguousSet*> sets;
  for (const auto& s : cls.sets()) sets.push_back(&s);
  std::sort(sets.begin(), sets.end(),
            [](const AmbiguousSet* a, const AmbiguousSet* b) { return label_less(a->errors.front(), b->errors.front()); });
  std::vector<std::vector<std::string>> rows;
  for (int r = 0; r < cls.degree(); ++r) {
    std::vector<std::string> row = {r == 0 ? id : ""};
    for (const auto* s : sets) row.push_back(r < static_cast<int>(s->errors.size()) ? to_label(s->errors[r]) : "");
    rows.push_back(row);
  }
  for (std::size_t g = 0; g < code.generators().size(); ++g) {
    std::vector<std::string> row = {to_string(code.generators()[g])};
    for (const auto* s : sets) row.push_back(s->syndrome.bit(static_cast<int>(g)) ? "-" : "+");
    rows.push_back(row);
  }
  return render_table(rows);
}

std::string class_summary(const AmbiguousClass& cls) {
  std::ostringstream out;
  out << "errors " << cls.size() << ", order sigma = " << cls.order() << ", degree gamma = " << cls.degree() << '\n';
  std::map<std::size_t, int> sizes;
  for (const auto& s : cls.sets()) ++sizes[s.errors.size()];
  out << "set sizes:";
  for (const auto& [size, count] : sizes) out << ' ' << count << " x " << size;
  out << '\n';
  return out.str();
}

std::string group_report(const StabilizerCode& code, std::span<const int> coords) {
  const GroupReport g = verify_ambiguous_group(code, coords);
  std::ostringstream out;
  out << "ambiguous group:";
  for (const Pauli& p : g.group) out << ' ' << to_label(p);
  out << '\n';
  out << "  identity " << (g.has_identity ? "yes" : "no") << ", closed " << (g.closed ? "yes" : "no")
      << ", self-inverse " << (g.self_inverse ? "yes" : "no") << " -> " << (g.ok() ? "subgroup" : "not a subgroup")
      << '\n';
  if (g.ok()) {
    try {
      const auto cosets = quotient_structure(code, coords);
      out << "cosets (" << cosets.size() << " of size " << g.group.size() << "):";
      for (const auto& c : cosets) out << ' ' << to_label(c.representative) << "B";
      out << '\n';
    } catch (const std::runtime_error& e) {
      out << "cosets: " << e.what() << '\n';
    }
  }
  return out.str();
}

std::string hamming_report(const StabilizerCode& code, const AmbiguousClass& cls, int m) {
  std::ostringstream out;
  const HammingReport h = hamming_check(code.n(), code.k(), cls.size());
  out << "Hamming bound 2^k * |E| <= 2^n: 2^" << code.k() << " * " << cls.size() << " vs 2^" << code.n() << " -> "
      << (h.satisfied ? (h.perfect ? "satisfied (perfect)" : "satisfied") : "violated") << '\n';
  if (m > 0) {
    if (2 * m >= code.n() - code.k()) {
      const long long predicted = degree_formula(code.n(), code.k(), m);
      out << "degree formula 2^(2m-n+k) = " << predicted << ", measured gamma = " << cls.degree()
          << (predicted == cls.degree() ? " (match)" : " (differs)") << '\n';
    } else {
      out << "degree formula not applicable (2m < n-k)\n";
    }
  }
  return out.str();
}

}  // namespace asc
