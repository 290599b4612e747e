// Copyright 2026 The tableauxb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI/CLI.hpp>

#include "tableauxb/bijections.h"
#include "tableauxb/enumerate.h"
#include "tableauxb/errors.h"
#include "tableauxb/json_io.h"
#include "tableauxb/signed_permutation.h"
#include "tableauxb/tableau.h"
#include "tableauxb/verify.h"
#include "tableauxb/zigzag.h"

namespace tableauxb::cli {
namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path);
  if (!file) throw InvalidArgument("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

AlternatingType require_type(const std::string& text) {
  const auto type = parse_alternating_type(text);
  if (!type) {
    throw InvalidArgument("unknown alternating type '" + text +
                          "' (expected -DU, -UD, +DU, +UD or ndu, nud, pdu, pud)");
  }
  return *type;
}

DerangementClass require_class(const std::string& text) {
  const auto cls = parse_derangement_class(text);
  if (!cls) {
    throw InvalidArgument("unknown derangement class '" + text +
                          "' (expected B, minus, minus-d)");
  }
  return *cls;
}

void warn_about_bounds(std::ostream& err) {
  const EnumerationBounds bounds = enumeration_bounds();
  const EnumerationBounds defaults;
  if (bounds.permutations > defaults.permutations ||
      bounds.tableaux > defaults.tableaux) {
    err << "warning: TABLEAUXB_MAX_N raises the enumeration bounds to "
        << bounds.permutations
        << "; exhaustive runs may take a long time and a lot of memory\n";
  }
}

enum class Emit { kTableau, kPermutation, kBoth };

Emit require_emit(const std::string& text) {
  if (text == "tableau") return Emit::kTableau;
  if (text == "permutation") return Emit::kPermutation;
  if (text == "both") return Emit::kBoth;
  throw InvalidArgument("--emit must be tableau, permutation or both");
}

void emit(const PermutationTableau& t, Emit what, std::ostream& out) {
  if (what != Emit::kPermutation) out << tableau_to_json(t) << '\n';
  if (what != Emit::kTableau) out << format_window(zeta(t)) << '\n';
}

// Options shared by several subcommands, bound by reference into CLI11.
struct Options {
  std::string object;
  int n = 0;
  std::string type;
  std::optional<int> k;
  bool maximal = false;
  std::string cls;
  std::string format = "jsonl";
  int threads = 1;

  std::string input;
  std::string window;
  bool trace = false;
  bool json = false;
  bool render = false;
  int max_n = kDefaultZetaInverseBound;
  std::string emit = "tableau";

  std::string theorem;
  std::optional<int> n_max;
  int samples = VerifyOptions{}.round_trip_samples;
  unsigned seed = VerifyOptions{}.seed;
};

int run_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  warn_about_bounds(err);
  if (o.format != "jsonl" && o.format != "window") {
    throw InvalidArgument("--format must be jsonl or window");
  }
  if (o.object == "tableaux") {
    for_each_tableau(o.n, [&](const PermutationTableau& t) {
      out << tableau_to_json(t) << '\n';
    });
    return kExitOk;
  }
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  std::optional<AlternatingType> type;
  std::optional<DerangementClass> cls;
  if (o.object == "alternating") {
    type = require_type(o.type);
  } else if (o.object == "derangements") {
    cls = require_class(o.cls.empty() ? "B" : o.cls);
  } else if (o.object != "permutations") {
    throw InvalidArgument("unknown object '" + o.object + "'");
  }
  const int bound = enumeration_bounds().permutations;
  if (o.n > bound) {
    throw PreconditionError("n = " + std::to_string(o.n) +
                            " exceeds the enumeration bound " +
                            std::to_string(bound) +
                            " (raise it with TABLEAUXB_MAX_N)");
  }
  std::optional<int> k = o.k;
  if (type && o.maximal) k = max_fixed_points(*type, o.n);
  for_each_signed_window(o.n, [&](std::span<const int> w) {
    if (type) {
      if (!alternating_types(w).contains(*type)) return;
      if (k && count_fixed_points(w) != *k) return;
    }
    if (cls && !in_derangement_class(w, *cls)) return;
    if (o.format == "window") {
      out << format_window(w) << '\n';
    } else {
      out << permutation_to_json(SignedPermutation({w.begin(), w.end()})) << '\n';
    }
  });
  return kExitOk;
}

int run_count(const Options& o, std::ostream& out, std::ostream& err) {
  warn_about_bounds(err);
  CountQuery query{o.n, SnakeCount{}};
  if (o.object == "alternating") {
    const AlternatingType type = require_type(o.type);
    if (!o.k && !o.maximal) {
      throw InvalidArgument("count alternating needs --k or --maximal");
    }
    query.object = AlternatingCount{type, o.maximal ? max_fixed_points(type, o.n) : *o.k};
  } else if (o.object == "derangements") {
    query.object = DerangementCount{require_class(o.cls.empty() ? "B" : o.cls)};
  } else if (o.object == "tableaux") {
    query.object = TableauCount{};
  } else if (o.object == "snakes") {
    query.object = SnakeCount{};
  } else if (o.object == "type-a-alternating" || o.object == "type-a-reverse") {
    if (!o.k) throw InvalidArgument("count " + o.object + " needs --k");
    query.object = TypeACount{o.object == "type-a-alternating"
                                  ? TypeAKind::kAlternating
                                  : TypeAKind::kReverseAlternating,
                              *o.k};
  } else if (o.object == "type-a-derangements") {
    query.object = TypeACount{TypeAKind::kDerangement, 0};
  } else {
    throw InvalidArgument("unknown object '" + o.object + "'");
  }
  if (o.threads < 1) throw InvalidArgument("--threads must be positive");
  out << count(query, o.threads) << '\n';
  return kExitOk;
}

void print_traces(const PermutationTableau& t, std::ostream& out) {
  const ShiftedDiagram& d = t.diagram();
  const SignedPermutation sigma = zeta(t);
  for (int i = 1; i <= d.n(); ++i) {
    ZigzagStart start = ZigzagStart::from_row(i);
    std::string how = "row " + std::to_string(i);
    if (d.row_index(i) < 0) {
      const int stair = d.row_index(-i);
      if (t.cell(stair, stair)) {
        start = ZigzagStart::from_row(-i);
        how = "row " + std::to_string(-i) + ", negated";
      } else {
        start = ZigzagStart::from_column(i);
        how = "col " + std::to_string(i);
      }
    }
    out << "sigma(" << i << ") = " << sigma(i) << "  (from " << how << ")\n";
    std::istringstream lines(format_trace(zigzag_path(t, start)));
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
}

int run_zeta(const Options& o, std::istream& in, std::ostream& out) {
  const PermutationTableau t = tableau_from_json(read_input(o.input, in));
  const SignedPermutation sigma = zeta(t);
  if (o.trace) print_traces(t, out);
  out << (o.json ? permutation_to_json(sigma) : format_window(sigma)) << '\n';
  return kExitOk;
}

int run_zeta_inverse(const Options& o, std::istream& in, std::ostream& out) {
  if (o.window.empty() == o.input.empty()) {
    throw InvalidArgument("zeta-inverse needs exactly one of --window or --input");
  }
  const SignedPermutation sigma = o.window.empty()
                                      ? parse_permutation(read_input(o.input, in))
                                      : parse_permutation(o.window);
  const PermutationTableau t = zeta_inverse(sigma, o.max_n);
  out << tableau_to_json(t) << '\n';
  if (o.render) out << render_ascii(t);
  return kExitOk;
}

int run_transform(const Options& o, bool forward, std::istream& in,
                  std::ostream& out) {
  const AlternatingType type = require_type(o.type);
  const Emit what = require_emit(o.emit);
  const PermutationTableau source = tableau_from_json(read_input(o.input, in));
  const PermutationTableau result = forward ? theta(source, type) : psi(source, type);
  emit(result, what, out);
  if (o.render) out << render_ascii(result);
  return kExitOk;
}

int run_render(const Options& o, std::istream& in, std::ostream& out) {
  const PermutationTableau t = tableau_from_json(read_input(o.input, in));
  out << render_ascii(t);
  if (o.trace) print_traces(t, out);
  return kExitOk;
}

bool is_tableau_theorem(Theorem t) {
  switch (t) {
    case Theorem::kZetaBijective:
    case Theorem::kLemBijec:
    case Theorem::kCorRclw:
    case Theorem::kConsecRows:
    case Theorem::kLeftmostOnes:
      return true;
    default:
      return false;
  }
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  warn_about_bounds(err);
  std::vector<Theorem> theorems;
  if (o.theorem == "all") {
    theorems = all_theorems();
  } else if (const auto t = parse_theorem(o.theorem)) {
    theorems.push_back(*t);
  } else {
    std::string names;
    for (Theorem t : all_theorems()) names += " " + std::string(to_string(t));
    throw InvalidArgument("unknown theorem '" + o.theorem + "'; expected all or" + names);
  }
  if (o.n_max && *o.n_max < 1) throw InvalidArgument("--n-max must be positive");
  if (o.threads < 1) throw InvalidArgument("--threads must be positive");
  if (o.samples < 1) throw InvalidArgument("--samples must be positive");
  VerifyOptions options;
  options.threads = o.threads;
  options.round_trip_samples = o.samples;
  options.seed = o.seed;
  const EnumerationBounds bounds = enumeration_bounds();
  bool all_passed = true;
  for (Theorem t : theorems) {
    const int bound = is_tableau_theorem(t) ? bounds.tableaux : bounds.permutations;
    // With "all", one --n-max is clamped to what each theorem can reach.
    int n_max = o.n_max.value_or(bound);
    if (theorems.size() > 1) n_max = std::min(n_max, bound);
    const VerificationReport report = verify(t, n_max, options);
    out << (o.json ? format_report_json(report) + "\n" : format_report_table(report));
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitOk : kExitPrecondition;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation tableaux of type B and alternating signed permutations",
               "tableauxb"};
  app.require_subcommand(1, 1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "Stream objects of length n as JSON lines");
  enumerate->add_option("--object", o.object,
                        "permutations | tableaux | alternating | derangements")
      ->required();
  enumerate->add_option("-n,--n", o.n, "Length")->required();
  enumerate->add_option("--type", o.type, "Alternating type: -DU, -UD, +DU, +UD");
  enumerate->add_option("--k", o.k, "Keep only windows with k fixed points");
  enumerate->add_flag("--maximal", o.maximal, "Keep only the maximal fixed-point count");
  enumerate->add_option("--class", o.cls, "Derangement class: B, minus, minus-d");
  enumerate->add_option("--format", o.format, "jsonl | window (permutations only)");

  auto* count_cmd = app.add_subcommand("count", "Count objects by exhaustive enumeration");
  count_cmd->add_option("--object", o.object,
                        "alternating | derangements | tableaux | snakes | "
                        "type-a-alternating | type-a-reverse | type-a-derangements")
      ->required();
  count_cmd->add_option("-n,--n", o.n, "Length")->required();
  count_cmd->add_option("--type", o.type, "Alternating type");
  count_cmd->add_option("--k", o.k, "Fixed points");
  count_cmd->add_flag("--maximal", o.maximal, "Use the maximal fixed-point count");
  count_cmd->add_option("--class", o.cls, "Derangement class");
  count_cmd->add_option("--threads", o.threads, "Worker threads");

  auto* zeta_cmd = app.add_subcommand("zeta", "Map a tableau to its signed permutation");
  zeta_cmd->add_option("--input", o.input, "Tableau JSON file, - for stdin")->required();
  zeta_cmd->add_flag("--trace", o.trace, "Print every zigzag path");
  zeta_cmd->add_flag("--json", o.json, "Print the permutation as JSON");

  auto* inverse = app.add_subcommand("zeta-inverse", "Find the tableau of a signed permutation");
  inverse->add_option("--window", o.window, "Comma-separated window, e.g. --window=-2,1");
  inverse->add_option("--input", o.input, "Permutation file (JSON or window), - for stdin");
  inverse->add_option("--max-n", o.max_n, "Largest length to search");
  inverse->add_flag("--render", o.render, "Also print the tableau as ASCII");

  auto* theta_cmd = app.add_subcommand("theta", "Insert empty rows into a derangement tableau");
  auto* psi_cmd = app.add_subcommand("psi", "Delete the empty rows of an alternating tableau");
  for (CLI::App* sub : {theta_cmd, psi_cmd}) {
    sub->add_option("--type", o.type, "Alternating type: -DU, -UD, +DU, +UD")->required();
    sub->add_option("--input", o.input, "Tableau JSON file, - for stdin")->required();
    sub->add_option("--emit", o.emit, "tableau | permutation | both");
    sub->add_flag("--render", o.render, "Also print the result as ASCII");
  }

  auto* render = app.add_subcommand("render", "Draw a tableau as ASCII");
  render->add_option("--input", o.input, "Tableau JSON file, - for stdin")->required();
  render->add_flag("--trace", o.trace, "Also print every zigzag path");

  auto* verify_cmd = app.add_subcommand("verify", "Check an identity exhaustively");
  verify_cmd->add_option("--theorem", o.theorem, "Theorem name or all")->required();
  verify_cmd->add_option("--n-max", o.n_max, "Largest length checked");
  verify_cmd->add_flag("--json", o.json, "One JSON report per line");
  verify_cmd->add_option("--threads", o.threads, "Worker threads");
  verify_cmd->add_option("--samples", o.samples, "Round-trip sample size for long windows");
  verify_cmd->add_option("--seed", o.seed, "Round-trip sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(o, out, err);
    if (*count_cmd) return run_count(o, out, err);
    if (*zeta_cmd) return run_zeta(o, in, out);
    if (*inverse) return run_zeta_inverse(o, in, out);
    if (*theta_cmd) return run_transform(o, true, in, out);
    if (*psi_cmd) return run_transform(o, false, in, out);
    if (*render) return run_render(o, in, out);
    if (*verify_cmd) return run_verify(o, out, err);
  } catch (const InvalidArgument& e) {
    err << "tableauxb: invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "tableauxb: precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InternalError& e) {
    err << "tableauxb: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "tableauxb: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace tableauxb::cli
