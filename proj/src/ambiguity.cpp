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

#include "asc/ambiguity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace asc {
namespace {

void sort_errors(std::vector<Pauli>& errors) { std::sort(errors.begin(), errors.end(), label_less); }

bool contains_letters(const std::vector<Pauli>& list, const Pauli& p) {
  return std::any_of(list.begin(), list.end(), [&](const Pauli& q) { return q.same_letters(p); });
}

bool same_letter_sets(std::vector<Pauli> a, std::vector<Pauli> b) {
  if (a.size() != b.size()) return false;
  for (auto& p : a) p = p.unsigned_part();
  for (auto& p : b) p = p.unsigned_part();
  sort_errors(a);
  sort_errors(b);
  return a == b;
}

}  // namespace

ErrorSet ErrorSet::on_coordinates(int n, std::span<const int> coords) {
  ErrorSet out{n, {}};
  for (const Pauli& local : all_paulis(static_cast<int>(coords.size()))) {
    out.elements.push_back(embed(local, n, coords));
  }
  return out;
}

ErrorSet ErrorSet::up_to_weight(int n, int w) {
  ErrorSet out{n, {}};
  for (const Pauli& p : all_paulis(n)) {
    if (p.weight() <= w) out.elements.push_back(p);
  }
  return out;
}

bool AmbiguousSet::contains(const Pauli& e) const { return contains_letters(errors, e); }

AmbiguousClass::AmbiguousClass(std::vector<Pauli> checks, std::vector<AmbiguousSet> sets)
    : checks_(std::move(checks)), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(),
            [](const AmbiguousSet& a, const AmbiguousSet& b) { return a.syndrome < b.syndrome; });
  for (auto& s : sets_) sort_errors(s.errors);
}

int AmbiguousClass::degree() const {
  std::size_t best = 0;
  for (const auto& s : sets_) best = std::max(best, s.errors.size());
  return static_cast<int>(best);
}

int AmbiguousClass::size() const {
  std::size_t total = 0;
  for (const auto& s : sets_) total += s.errors.size();
  return static_cast<int>(total);
}

const AmbiguousSet* AmbiguousClass::find(const Syndrome& s) const {
  for (const auto& set : sets_) {
    if (set.syndrome == s) return &set;
  }
  return nullptr;
}

int AmbiguousClass::set_index_of(const Pauli& e) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].contains(e)) return static_cast<int>(i);
  }
  return -1;
}

AmbiguousClass build_class(std::span<const Pauli> checks, const ErrorSet& errors) {
  std::map<Syndrome, std::vector<Pauli>> groups;
  std::vector<Pauli> seen;
  for (const Pauli& e : errors.elements) {
    if (e.num_qubits() != errors.n) throw std::invalid_argument("error set mixes register sizes");
    if (!checks.empty() && e.num_qubits() != checks.front().num_qubits()) {
      throw std::invalid_argument("error size does not match the code");
    }
    if (contains_letters(seen, e)) throw std::invalid_argument("duplicate error " + to_label(e));
    seen.push_back(e);
    groups[syndrome_of(e, checks)].push_back(e.unsigned_part());
  }
  std::vector<AmbiguousSet> sets;
  for (auto& [s, list] : groups) sets.push_back({s, std::move(list)});
  return AmbiguousClass(std::vector<Pauli>(checks.begin(), checks.end()), std::move(sets));
}

AmbiguousClass build_class(const StabilizerCode& code, const ErrorSet& errors) {
  if (errors.n != code.n()) throw std::invalid_argument("error set size does not match the code");
  return build_class(std::span<const Pauli>(code.generators()), errors);
}

AmbiguityNormalizer ambiguity_normalizer(const Pauli& e1, const Pauli& e2, const StabilizerCode& code) {
  if (syndrome_of(e1, code) != syndrome_of(e2, code)) {
    throw std::invalid_argument(to_label(e1) + " and " + to_label(e2) + " are not ambiguous");
  }
  AmbiguityNormalizer out{e1 * e2, e2 * e1, {}, {}, commutes(e1, e2)};
  out.action = logical_action(out.product.unsigned_part(), code);
  out.full_action = logical_action(out.product, code);
  return out;
}

GroupReport verify_ambiguous_group(std::span<const Pauli> checks, int n, std::span<const int> coords) {
  const AmbiguousClass cls = build_class(checks, ErrorSet::on_coordinates(n, coords));
  GroupReport report;
  const AmbiguousSet* trivial = cls.find(Syndrome(static_cast<int>(checks.size()), 0));
  if (trivial == nullptr) return report;
  report.group = trivial->errors;
  report.has_identity = contains_letters(report.group, Pauli(n));
  report.closed = true;
  report.self_inverse = true;
  for (const Pauli& a : report.group) {
    // Every Pauli squares to a phase times identity; check it explicitly.
    if (!(a * a).is_identity()) report.self_inverse = false;
    for (const Pauli& b : report.group) {
      if (!contains_letters(report.group, a * b)) report.closed = false;
    }
  }
  return report;
}

GroupReport verify_ambiguous_group(const StabilizerCode& code, std::span<const int> coords) {
  return verify_ambiguous_group(std::span<const Pauli>(code.generators()), code.n(), coords);
}

std::vector<Coset> quotient_structure(std::span<const Pauli> checks, int n, std::span<const int> coords) {
  const GroupReport group = verify_ambiguous_group(checks, n, coords);
  if (!group.ok()) throw std::runtime_error("the no-error syndrome set is not a group");
  const AmbiguousClass cls = build_class(checks, ErrorSet::on_coordinates(n, coords));
  std::vector<Coset> out;
  for (const AmbiguousSet& set : cls.sets()) {
    Coset coset{set.errors.front(), set.syndrome, {}};
    for (const Pauli& g : group.group) coset.elements.push_back((coset.representative * g).unsigned_part());
    sort_errors(coset.elements);
    if (!same_letter_sets(coset.elements, set.errors)) {
      throw std::runtime_error("ambiguous set " + set.syndrome.str() + " is not a coset");
    }
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<Coset> quotient_structure(const StabilizerCode& code, std::span<const int> coords) {
  return quotient_structure(std::span<const Pauli>(code.generators()), code.n(), coords);
}

HammingReport hamming_check(int n, int k, long long error_count) {
  if (n < 1 || k < 0 || k > n || n > 62 || error_count < 0) {
    throw std::invalid_argument("invalid Hamming bound arguments");
  }
  const long long lhs = (1LL << k) * error_count;
  const long long rhs = 1LL << n;
  return {lhs <= rhs, lhs == rhs};
}

long long degree_formula(int n, int k, int m) {
  const int e = 2 * m - n + k;
  if (e < 0) throw std::invalid_argument("degree formula needs 2m >= n - k");
  return 1LL << e;
}

AmbiguousClass coarse_grain(const AmbiguousClass& cls, std::span<const int> dropped) {
  const int len = static_cast<int>(cls.checks().size());
  for (int d : dropped) {
    if (d < 0 || d >= len) throw std::out_of_range("generator index out of range");
  }
  std::vector<Pauli> kept;
  for (int i = 0; i < len; ++i) {
    if (std::find(dropped.begin(), dropped.end(), i) == dropped.end()) kept.push_back(cls.checks()[i]);
  }
  std::map<Syndrome, std::vector<Pauli>> groups;
  for (const AmbiguousSet& set : cls.sets()) {
    auto& target = groups[set.syndrome.without(dropped)];
    target.insert(target.end(), set.errors.begin(), set.errors.end());
  }
  std::vector<AmbiguousSet> sets;
  for (auto& [s, list] : groups) sets.push_back({s, std::move(list)});
  return AmbiguousClass(std::move(kept), std::move(sets));
}

}  // namespace asc
