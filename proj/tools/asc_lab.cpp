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

// asc_lab: command-line front end for ambiguous stabilizer code analysis,
// syndrome-statistics simulation and process-matrix reconstruction.
//
// Exit codes: 0 on success (warnings go to stderr), 2 on usage or input
// errors. All output is deterministic; ASC_LAB_SEED is reserved and unused
// because nothing here is random.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "asc/ambiguity.hpp"
#include "asc/channel.hpp"
#include "asc/codes.hpp"
#include "asc/reconstruct.hpp"
#include "asc/simulate.hpp"
#include "asc/stabilizer.hpp"
#include "asc/tables.hpp"

namespace {

using namespace asc;

/// Input problems reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string code;
  std::string codes = "C1,C2,C3";
  std::string coords;
  int weight = 0;
  std::string drop;
  std::string noise = "identity";
  std::string plan;
  std::string probabilities;
  std::string input = "0L";
  std::string prep = "none";
  std::string format = "human";
  std::string out;
  int m = 2;
  int gamma = 1;
  int k = 1;
};

bool structured(const Options& o) { return o.format == "structured"; }
int digits(const Options& o) { return structured(o) ? 17 : 6; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

/// 1-based comma-separated indices to 0-based, each below `limit`.
std::vector<int> parse_indices(const std::string& text, int limit, const char* what) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || v < 1 || v > limit) {
      throw InputError(std::string("invalid ") + what + " '" + part + "' (expected 1.." + std::to_string(limit) + ")");
    }
    out.push_back(v - 1);
  }
  if (out.empty()) throw InputError(std::string("empty ") + what + " list");
  return out;
}

bool is_catalog_id(const std::string& id) {
  for (const auto& c : catalog_ids()) {
    if (c == id) return true;
  }
  return false;
}

/// A catalog entry or a code read from a file in the serialization format.
struct LoadedCode {
  std::string id;
  StabilizerCode code;
  std::vector<int> coords;  // catalog default, or all qubits for files
};

LoadedCode load_code(const std::string& spec) {
  if (spec.empty()) throw InputError("--code is required");
  if (is_catalog_id(spec)) {
    const auto& e = catalog_entry(spec);
    return {e.id, e.code, e.coords};
  }
  std::ifstream in(spec);
  if (!in) throw InputError("unknown code '" + spec + "' (not a catalog id or readable file)");
  try {
    StabilizerCode code = read_code(in);
    std::vector<int> all(code.n());
    for (int q = 0; q < code.n(); ++q) all[q] = q;
    return {spec, std::move(code), std::move(all)};
  } catch (const std::exception& e) {
    throw InputError("cannot read code file '" + spec + "': " + e.what());
  }
}

ProcessMatrix load_noise(const std::string& spec, int m) {
  std::ifstream in(spec);
  if (in) {
    ProcessMatrix chi = read_noise_json(in);
    if (chi.m() != m) {
      throw InputError("noise file acts on " + std::to_string(chi.m()) + " qubits, codes expect " + std::to_string(m));
    }
    return chi;
  }
  return noise_preset(spec, m);
}

CodeFamily load_family(const std::vector<std::string>& ids, const std::string& coords) {
  CodeFamily family;
  for (const auto& id : ids) {
    LoadedCode lc = load_code(id);
    std::vector<int> c = coords.empty() ? lc.coords : parse_indices(coords, lc.code.n(), "coordinate");
    family.push_back(make_protocol_code(lc.id, std::move(lc.code), std::move(c)));
  }
  if (family.empty()) throw InputError("no codes given");
  for (const auto& pc : family) {
    if (pc.m() != family.front().m()) throw InputError("codes in a family must share the number of noisy qubits");
  }
  return family;
}

/// Code ids referenced by a plan file, in first-appearance order.
std::vector<std::string> plan_code_ids(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open plan file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("malformed plan file '" + path + "': " + e.what());
  }
  std::vector<std::string> ids;
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("plan file needs an 'entries' array");
  for (const auto& e : j["entries"]) {
    if (!e.contains("code") || !e["code"].is_string()) throw InputError("plan entry without a 'code' string");
    const std::string id = e["code"].get<std::string>();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return ids;
}

MeasurementPlan load_plan(const std::string& path, const CodeFamily& family) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open plan file '" + path + "'");
  return read_plan_json(in, family);
}

// ---------------------------------------------------------------- commands

void cmd_catalog(const Options& o, std::ostream& out) {
  if (!o.code.empty()) {
    write_code(out, load_code(o.code).code);
    return;
  }
  for (const auto& id : catalog_ids()) {
    const auto& e = catalog_entry(id);
    out << e.id << "  [[" << e.code.n() << "," << e.code.k() << "]]  " << e.description << '\n';
    for (const auto& note : e.errata) out << "    erratum: " << note << '\n';
  }
  out << '\n';
  for (const auto& check : validate_catalog()) {
    out << check.id << ": " << (check.valid ? "valid" : "INVALID");
    if (check.table_matches) out << ", sign table " << (*check.table_matches ? "matches" : "differs");
    out << '\n';
    for (const auto& note : check.notes) out << "    " << note << '\n';
  }
}

void cmd_analyze(const Options& o, std::ostream& out) {
  const LoadedCode lc = load_code(o.code);
  const StabilizerCode& code = lc.code;
  if (!o.coords.empty() && o.weight > 0) throw InputError("--coords and --weight are mutually exclusive");

  std::vector<int> coords;
  ErrorSet errors;
  if (o.weight > 0) {
    if (o.weight > code.n()) throw InputError("--weight exceeds the number of qubits");
    errors = ErrorSet::up_to_weight(code.n(), o.weight);
  } else {
    coords = o.coords.empty() ? lc.coords : parse_indices(o.coords, code.n(), "coordinate");
    errors = ErrorSet::on_coordinates(code.n(), coords);
  }
  AmbiguousClass cls = build_class(code, errors);

  out << "code " << lc.id << " [[" << code.n() << "," << code.k() << "]], generators";
  for (const auto& g : code.generators()) out << ' ' << to_string(g);
  out << '\n';
  if (o.weight > 0) {
    out << "errors: all Paulis of weight <= " << o.weight << '\n';
  } else {
    out << "errors: all Paulis on coordinates";
    for (int c : coords) out << ' ' << c + 1;
    out << '\n';
  }

  if (!o.drop.empty()) {
    const auto dropped = parse_indices(o.drop, static_cast<int>(code.generators().size()), "generator");
    cls = coarse_grain(cls, dropped);
    out << "coarse-grained: dropped generator";
    for (int d : dropped) out << ' ' << d + 1;
    out << '\n';
  }
  out << class_summary(cls) << '\n';

  const bool quotient = o.weight == 0 && o.drop.empty() && verify_ambiguous_group(code, coords).ok();
  out << (quotient ? quotient_table(code, coords) : class_table(cls)) << '\n';
  if (o.weight == 0 && o.drop.empty()) out << group_report(code, coords);
  out << hamming_report(code, cls, o.weight == 0 ? static_cast<int>(coords.size()) : 0);
  if (cls.degree() == 1) out << "unambiguous: every allowed error has a distinct syndrome\n";
}

void cmd_normalizer(const Options& o, std::ostream& out) {
  const LoadedCode lc = load_code(o.code);
  const std::vector<int> coords = o.coords.empty() ? lc.coords : parse_indices(o.coords, lc.code.n(), "coordinate");
  out << normalizer_table(lc.code, coords);
}

void cmd_signs(const Options& o, std::ostream& out) {
  const LoadedCode lc = load_code(o.code);
  const std::vector<int> coords = o.coords.empty() ? lc.coords : parse_indices(o.coords, lc.code.n(), "coordinate");
  const AmbiguousClass cls = build_class(lc.code, ErrorSet::on_coordinates(lc.code.n(), coords));
  out << sign_table(lc.id, lc.code, cls);
}

void cmd_simulate(const Options& o, std::ostream& out) {
  MeasurementPlan plan;
  CodeFamily family;
  if (!o.plan.empty()) {
    family = load_family(plan_code_ids(o.plan), o.coords);
    plan = load_plan(o.plan, family);
  } else {
    family = load_family({o.code}, o.coords);
    const ProtocolCode& pc = family.front();
    plan.entries.push_back({pc.id, parse_logical_state(o.input, pc.k()), parse_preprocessing(o.prep, pc.n())});
  }
  const ProcessMatrix chi = load_noise(o.noise, family.front().m());
  const ChannelReport report = validate(chi);
  if (!report.trace_preserving) std::cerr << "warning: noise is not trace preserving; probabilities sum to Tr E(rho)\n";
  const auto probs = collect_probabilities(plan, family, chi);
  out << "# entry code input preprocessing\n";
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const auto& e = plan.entries[i];
    out << "# " << i << ' ' << e.code_id << ' ' << e.input.name << ' ' << e.prep.str() << '\n';
  }
  write_probabilities(out, probs, digits(o));
}

void cmd_reconstruct(const Options& o, std::ostream& out) {
  const std::vector<std::string> ids = !o.plan.empty() ? plan_code_ids(o.plan) : split(o.codes, ',');
  const CodeFamily family = load_family(ids, o.coords);
  const int m = family.front().m();

  MeasurementPlan plan;
  if (!o.plan.empty()) {
    plan = load_plan(o.plan, family);
  } else {
    plan = plan_diagonal(family);
    const auto pairs = all_pairs(m);
    plan.merge(plan_offdiagonal(family, pairs));
  }

  std::vector<Distribution> probs;
  if (!o.probabilities.empty()) {
    if (o.plan.empty()) throw InputError("--probabilities requires --plan");
    std::ifstream in(o.probabilities);
    if (!in) throw InputError("cannot open probabilities file '" + o.probabilities + "'");
    probs = read_probabilities(in, plan);
  } else {
    probs = collect_probabilities(plan, family, load_noise(o.noise, m));
  }
  const ReconstructionReport report = reconstruct(plan, family, probs);
  if (structured(o)) {
    write_report_json(out, report);
  } else {
    write_report_text(out, report, digits(o));
  }
  const auto unresolved = report.unresolved_parameters();
  if (!unresolved.empty()) {
    std::cerr << "warning: " << unresolved.size() << " of " << parameter_count(m)
              << " parameters are not determined by this plan\n";
  }
}

void cmd_noise(const Options& o, std::ostream& out) {
  const ProcessMatrix chi = load_noise(o.noise, o.m);
  std::cerr << validate(chi).str() << '\n';
  write_noise_json(out, chi);
}

void cmd_resources(const Options& o, std::ostream& out) {
  if (o.m < 1 || o.gamma < 1 || o.k < 1) throw InputError("--m, --gamma and --k must be positive");
  const ResourceEstimate r = resource_estimate(o.m, o.gamma, o.k);
  out << "m " << o.m << ", gamma " << o.gamma << ", k " << o.k << '\n';
  out << "preparations " << r.preparations << '\n';
  out << "configurations (order) " << r.configurations << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ambiguous stabilizer code lab: tables, syndrome statistics and process-matrix reconstruction"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: human (6 digits) or structured (17 digits)")
        ->check(CLI::IsMember({"human", "structured"}));
    sub->add_option("--out", o.out, "Write output to this path instead of stdout");
  };

  auto* catalog = app.add_subcommand("catalog", "List built-in codes, or export one with --code");
  catalog->add_option("--code", o.code, "Catalog id to export in the code file format");
  add_format(catalog);

  auto* analyze = app.add_subcommand("analyze", "Ambiguous class, group/quotient and Hamming-bound report");
  analyze->add_option("--code", o.code, "Catalog id or code file")->required();
  analyze->add_option("--coords", o.coords, "Noisy coordinates, 1-based, comma separated");
  analyze->add_option("--weight", o.weight, "Use all Paulis up to this weight instead of coordinates");
  analyze->add_option("--drop", o.drop, "Generators to omit (syndrome coarse-graining), 1-based");
  add_format(analyze);

  auto* normal = app.add_subcommand("normalizer", "Normalizer grouped by logical action");
  normal->add_option("--code", o.code, "Catalog id or code file")->required();
  normal->add_option("--coords", o.coords, "Coordinates listed first in each column, 1-based");
  add_format(normal);

  auto* signs = app.add_subcommand("signs", "Syndrome sign table of the ambiguous class");
  signs->add_option("--code", o.code, "Catalog id or code file")->required();
  signs->add_option("--coords", o.coords, "Noisy coordinates, 1-based");
  add_format(signs);

  auto* simulate = app.add_subcommand("simulate", "Exact syndrome probabilities");
  simulate->add_option("--code", o.code, "Catalog id or code file (without --plan)");
  simulate->add_option("--coords", o.coords, "Noisy coordinates, 1-based");
  simulate->add_option("--plan", o.plan, "Measurement plan JSON");
  simulate->add_option("--input", o.input, "Logical input state: 0L, +L, upL, theta(x), products joined by *");
  simulate->add_option("--prep", o.prep, "Preprocessing: none, U:Ea,Eb, T:auto;U:Ea,Eb");
  simulate->add_option("--noise", o.noise, "Noise preset (identity, depolarizing(p), EA, EA(...)) or JSON file");
  add_format(simulate);

  auto* recon = app.add_subcommand("reconstruct", "Reconstruct the process matrix from syndrome statistics");
  recon->add_option("--codes", o.codes, "Comma-separated code family (ignored with --plan)");
  recon->add_option("--coords", o.coords, "Noisy coordinates, 1-based");
  recon->add_option("--plan", o.plan, "Measurement plan JSON (default: full diagonal + off-diagonal plan)");
  recon->add_option("--probabilities", o.probabilities, "Measured probabilities instead of simulating --noise");
  recon->add_option("--noise", o.noise, "Noise preset or JSON file");
  add_format(recon);

  auto* noise = app.add_subcommand("noise", "Export a noise preset as process-matrix JSON (checks to stderr)");
  noise->add_option("--noise", o.noise, "Noise preset or JSON file");
  noise->add_option("--m", o.m, "Number of noisy qubits");
  add_format(noise);

  auto* resources = app.add_subcommand("resources", "Preparation and configuration counts");
  resources->add_option("--m", o.m, "Number of noisy qubits");
  resources->add_option("--gamma", o.gamma, "Degree of ambiguity");
  resources->add_option("--k", o.k, "Logical qubits");
  add_format(resources);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
  }
  std::ostream& out = o.out.empty() ? std::cout : file;

  try {
    if (catalog->parsed()) cmd_catalog(o, out);
    if (analyze->parsed()) cmd_analyze(o, out);
    if (normal->parsed()) cmd_normalizer(o, out);
    if (signs->parsed()) cmd_signs(o, out);
    if (simulate->parsed()) cmd_simulate(o, out);
    if (recon->parsed()) cmd_reconstruct(o, out);
    if (noise->parsed()) cmd_noise(o, out);
    if (resources->parsed()) cmd_resources(o, out);
  } catch (const std::exception& e) {
    // Every library failure here stems from user-supplied input.
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
