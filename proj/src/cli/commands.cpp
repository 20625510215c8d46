// Copyright 2026 The Pentaform Authors
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

#include "pentaform/cli/commands.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentaform/cli/dot.hpp"
#include "pentaform/convergence.hpp"
#include "pentaform/errors.hpp"
#include "pentaform/game.hpp"
#include "pentaform/io.hpp"
#include "pentaform/partition.hpp"
#include "pentaform/stationary.hpp"

namespace pentaform::cli {
namespace {

const std::vector<std::string> kProperties = {
    "nash",   "spe",       "admissible", "persistent",
    "authentic", "piecewise-nash", "one-piece"};

bool needs_values(const std::string& property) {
  return property == "admissible" || property == "persistent" ||
         property == "authentic" || property == "piecewise-nash";
}

std::uint64_t profile_cap() {
  const char* env = std::getenv("PENTAFORM_MAX_PROFILES");
  if (env == nullptr || *env == '\0') return kDefaultProfileCap;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(env, &used);
    if (used == std::string(env).size() && cap > 0) return cap;
  } catch (const std::exception&) {
  }
  throw UsageError("PENTAFORM_MAX_PROFILES must be a positive integer, got \"" +
                   std::string(env) + "\"");
}

std::string quoted(const Label& l) { return "\"" + l + "\""; }

std::string label_list(const std::vector<Label>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    out += (i ? ", " : "") + quoted(ls[i]);
  }
  return out + "}";
}

std::string choices_text(const ChoiceMap& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [j, a] : m) {
    out += (first ? "" : ", ") + show(j) + " -> " + show(a);
    first = false;
  }
  return out + "}";
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "  witness:\n"
      << "    subroot: " << show(w.subroot) << "\n";
  if (!w.agent.empty()) out << "    agent: " << w.agent << "\n";
  if (!w.deviation.empty()) {
    out << "    deviation: " << choices_text(w.deviation) << "\n";
  }
  if (!w.current.empty()) out << "    current: " << show(w.current, true) << "\n";
  if (!w.alternative.empty()) {
    out << "    alternative: " << show(w.alternative, true) << "\n";
  }
  if (!w.detail.empty()) out << "    detail: " << w.detail << "\n";
}

int print_verdict(std::ostream& out, const std::string& property,
                  const Verdict& v) {
  out << property << ": " << (v.holds ? "holds" : "FAILS") << "\n";
  if (v.witness) print_witness(out, *v.witness);
  return v.holds ? kHolds : kFails;
}

void print_values(std::ostream& out, const std::map<Label, Profile>& values,
                  const std::string& heading) {
  out << heading << ":\n";
  for (const auto& [t, p] : values) {
    out << "  " << show(t) << ": " << show(p, true) << "\n";
  }
}

void print_convergence(std::ostream& out, const std::string& name,
                       const ConvergenceVerdict& v) {
  out << name << ": " << status_name(v.status) << "\n";
  if (v.fails()) {
    out << "  run: " << v.run << "\n"
        << "  stakeholder: " << v.stakeholder << "\n"
        << "  gap: " << v.gap.pretty() << "\n";
  } else if (!v.certificate.empty()) {
    out << "  " << (v.holds() ? "certificate: " : "missing: ")
        << v.certificate << "\n";
  }
}

int convergence_status(const ConvergenceVerdict& a,
                       const ConvergenceVerdict& b) {
  if (a.fails() || b.fails()) return kFails;
  if (!a.holds() || !b.holds()) return kInconclusive;
  return kHolds;
}

int print_certificate(std::ostream& out, const Certificate& c) {
  out << "certificate: " << kind_name(c.kind) << "\n";
  print_convergence(out, "upper-convergence", c.upper);
  print_convergence(out, "lower-convergence", c.lower);
  if (!c.continuation.empty()) print_values(out, c.continuation, "continuation values");
  out << "piecewise-nash: " << (c.piecewise.holds ? "holds" : "FAILS") << "\n";
  if (!c.failing_property.empty()) {
    out << "refuted property: " << c.failing_property << "\n";
  }
  if (c.witness) print_witness(out, *c.witness);
  if (!c.reason.empty()) out << "reason: " << c.reason << "\n";
  switch (c.kind) {
    case Certificate::Kind::kSPECertified: return kHolds;
    case Certificate::Kind::kRefuted: return kFails;
    case Certificate::Kind::kInconclusive: return kInconclusive;
  }
  return kInconclusive;
}

Game load_game(const std::string& path) {
  const std::string text = io::read_file(path);
  if (io::has_key(text, "classes", path)) {
    throw UsageError(path + ": expected a game file, got a stationary system");
  }
  return io::game_from_text(text, path);
}

StationarySystem load_system(const std::string& path) {
  return io::system_from_text(io::read_file(path), path);
}

// validate ------------------------------------------------------------------

int cmd_validate_system(std::ostream& out, const std::string& text,
                        const std::string& path) {
  const auto sys = io::system_from_text(text, path);
  out << "stationary system: " << sys.classes().size() << " classes, initial "
      << quoted(sys.initial()) << "\n";
  for (const auto& [name, pc] : sys.classes()) {
    out << "  class " << name << ": " << pc.form().size()
        << " quintuples, all axioms pass\n";
  }
  out << "result: valid\n";
  return kHolds;
}

int report_axioms(std::ostream& out, const QuintupleSet& q) {
  const auto checked = validate(q);
  const auto* report = std::get_if<AxiomReport>(&checked);
  for (Axiom axiom : kAllAxioms) {
    out << axiom_name(axiom) << " ";
    if (report == nullptr || !report->violates(axiom)) {
      out << "pass\n";
      continue;
    }
    out << "FAIL\n";
    for (const auto& v : report->violations) {
      if (v.axiom == axiom) out << "  witness: " << v.witness << "\n";
    }
  }
  if (report != nullptr) {
    out << "result: invalid\n";
    return kFails;
  }
  const auto& p = std::get<Pentaform>(checked);
  out << "result: valid, " << p.size() << " quintuples, root "
      << quoted(p.root()) << "\n";
  return kHolds;
}

// inspect -------------------------------------------------------------------

struct InspectOptions {
  bool subroots = false;
  bool pieces = false;
  std::string dot;
};

int cmd_inspect(std::ostream& out, const std::string& path,
                const InspectOptions& opts) {
  const std::string text = io::read_file(path);
  if (io::has_key(text, "classes", path)) {
    throw UsageError(path +
                     ": inspect takes a pentaform or game file; instantiate "
                     "the stationary system first");
  }
  std::optional<Game> game;
  std::optional<Pentaform> form;
  if (io::has_key(text, "utilities", path)) {
    game = io::game_from_text(text, path);
    form = game->form();
  } else {
    auto checked = validate(io::quintuples_from_text(text, path));
    if (std::holds_alternative<AxiomReport>(checked)) {
      out << "not a pentaform; run validate for details\n";
      return kInputError;
    }
    form = std::get<Pentaform>(std::move(checked));
  }
  const Partition part(*form);
  const bool all = !opts.subroots && !opts.pieces;

  out << "quintuples: " << form->size() << "\n"
      << "nodes: " << form->nodes().size() << " (" << form->decision_nodes().size()
      << " decision, " << form->endnodes().size() << " endnodes)\n"
      << "players: " << join(form->players(), ", ") << "\n"
      << "situations: " << form->situations().size() << "\n";
  if (all || opts.subroots) {
    out << "subroots: "
        << label_list({part.subroots().begin(), part.subroots().end()}) << "\n";
  }
  if (all || opts.pieces) {
    out << "pieces:\n";
    std::size_t covered = 0;
    for (const auto& t : part.order()) {
      covered += part.piece(t).size();
      out << "  " << quoted(t) << ": " << part.piece(t).size()
          << " quintuples, " << part.piece_situations(t).size()
          << " situations\n";
    }
    // The piece forms must partition the quintuples, and together with the
    // root their endnodes must partition subroots and final endnodes.
    bool endnodes_ok = true;
    try {
      classify_piece_endnodes(*form);
    } catch (const InternalError&) {
      endnodes_ok = false;
    }
    out << "partition of quintuples: "
        << (covered == form->size() ? "ok" : "BROKEN") << "\n"
        << "partition of subroots and final endnodes: "
        << (endnodes_ok ? "ok" : "BROKEN") << "\n";
  }
  if (!opts.dot.empty()) {
    io::write_file(opts.dot,
                   to_dot(*form, game ? &game->utilities() : nullptr));
    out << "dot: " << opts.dot << "\n";
  }
  return kHolds;
}

// check ---------------------------------------------------------------------

struct CheckOptions {
  std::string game;
  std::string strategy;
  std::string values;
  std::string property;
  bool authentic_value = false;
};

int check_finite(std::ostream& out, const CheckOptions& o) {
  const Game g = load_game(o.game);
  const Strategy s = validate_strategy(
      g.form(), io::strategy_from_text(io::read_file(o.strategy), o.strategy));
  ValueFunction v;
  if (needs_values(o.property)) {
    if (o.authentic_value) {
      v = authentic_value(g, s);
    } else if (!o.values.empty()) {
      v = io::values_from_text(io::read_file(o.values), o.values);
    } else {
      throw UsageError("property " + o.property +
                       " needs a value file or --authentic-value");
    }
  }
  const std::string& p = o.property;
  if (p == "nash") return print_verdict(out, p, nash_check(g, s));
  if (p == "spe") return print_verdict(out, p, spe_check_direct(g, s));
  if (p == "admissible") return print_verdict(out, p, admissible(g, v));
  if (p == "persistent") return print_verdict(out, p, persistent(g, s, v));
  if (p == "authentic") return print_verdict(out, p, authentic(g, s, v));
  if (p == "piecewise-nash") return print_verdict(out, p, piecewise_nash(g, s, v));
  return print_verdict(out, p, one_piece_unimprovable(g, s));
}

int check_stationary(std::ostream& out, const CheckOptions& o) {
  const StationarySystem sys = load_system(o.game);
  const StationaryStrategy sigma = validate_stationary_strategy(
      sys, io::stationary_strategy_from_text(io::read_file(o.strategy),
                                             o.strategy));
  const std::string& p = o.property;
  if (p == "nash") {
    throw UsageError(
        "nash is not checked on stationary systems; use spe or one-piece");
  }
  if (p == "spe") return print_certificate(out, certify_spe(sys, sigma));
  if (p == "one-piece") {
    return print_verdict(
        out, p, stationary_piecewise_nash(sys, sigma, continuation_values(sys, sigma)));
  }
  ClassValues v;
  if (o.authentic_value) {
    v = continuation_values(sys, sigma);
  } else if (!o.values.empty()) {
    v = io::class_values_from_text(io::read_file(o.values), o.values);
  } else {
    throw UsageError("property " + p +
                     " needs a class value file or --authentic-value");
  }
  if (p == "admissible") return print_verdict(out, p, stationary_admissible(sys, v));
  if (p == "persistent") {
    return print_verdict(out, p, stationary_persistent(sys, sigma, v));
  }
  if (p == "authentic") {
    return print_verdict(out, p, stationary_authentic(sys, sigma, v));
  }
  return print_verdict(out, p, stationary_piecewise_nash(sys, sigma, v));
}

int cmd_check(std::ostream& out, const CheckOptions& o) {
  if (io::has_key(io::read_file(o.game), "classes", o.game)) {
    return check_stationary(out, o);
  }
  return check_finite(out, o);
}

// solve ---------------------------------------------------------------------

int cmd_solve(std::ostream& out, const std::string& path) {
  const Game g = load_game(path);
  const auto result = solve_backward(g, profile_cap());
  if (const auto* none = std::get_if<NoPureEquilibrium>(&result)) {
    out << "no pure equilibrium in the piece at " << show(none->subroot) << "\n";
    return kFails;
  }
  const auto& sol = std::get<Solution>(result);
  out << "strategy:\n";
  for (const auto& [j, a] : sol.strategy.choices) {
    out << "  " << show(j) << " -> " << show(a) << "\n";
  }
  print_values(out, sol.values.values, "values");
  return kHolds;
}

// stationary ----------------------------------------------------------------

struct InstantiateOptions {
  std::size_t depth = 1;
  bool bounded = false;
  std::string pricing = "lower";
  std::string values;
  std::string strategy;
  std::string output;
};

int cmd_certify(std::ostream& out, const std::string& path,
                const std::string& strategy) {
  const StationarySystem sys = load_system(path);
  const StationaryStrategy sigma = validate_stationary_strategy(
      sys, io::stationary_strategy_from_text(io::read_file(strategy), strategy));
  return print_certificate(out, certify_spe(sys, sigma));
}

int cmd_stationary_solve(std::ostream& out, const std::string& path) {
  const StationarySystem sys = load_system(path);
  SolveOptions opts;
  opts.cap = profile_cap();
  const auto result = solve_stationary(sys, opts);
  if (const auto* f = std::get_if<StationaryFailure>(&result)) {
    if (f->kind == StationaryFailure::Kind::kNoPureEquilibrium) {
      out << "no pure equilibrium in class " << f->piece_class << "\n";
      if (!f->detail.empty()) out << "  detail: " << f->detail << "\n";
      return kFails;
    }
    out << "value iteration did not converge\n";
    if (!f->detail.empty()) out << "  detail: " << f->detail << "\n";
    return kInconclusive;
  }
  const auto& sol = std::get<StationarySolution>(result);
  out << "strategy:\n";
  for (const auto& [c, m] : sol.strategy.choices) {
    out << "  " << c << ": " << choices_text(m) << "\n";
  }
  print_values(out, sol.values, "class values");
  out << "iterations: " << sol.iterations << "\n";
  return kHolds;
}

int cmd_convergence(std::ostream& out, const std::string& path) {
  const StationarySystem sys = load_system(path);
  const auto upper = upper_convergent(sys);
  const auto lower = lower_convergent(sys);
  print_convergence(out, "upper-convergence", upper);
  print_convergence(out, "lower-convergence", lower);
  return convergence_status(upper, lower);
}

int cmd_instantiate(std::ostream& out, const std::string& path,
                    const InstantiateOptions& o, bool* document) {
  const StationarySystem sys = load_system(path);
  BoundaryPricing pricing;
  if (o.pricing == "upper") {
    pricing = BoundaryPricing::upper();
  } else if (o.pricing == "continuation") {
    if (!o.values.empty()) {
      pricing = BoundaryPricing::continuation(
          io::class_values_from_text(io::read_file(o.values), o.values));
    } else if (!o.strategy.empty()) {
      const auto sigma = validate_stationary_strategy(
          sys, io::stationary_strategy_from_text(io::read_file(o.strategy),
                                                 o.strategy));
      pricing = BoundaryPricing::continuation(continuation_values(sys, sigma));
    } else {
      throw UsageError("continuation pricing needs --values or --strategy");
    }
  }
  const Instantiation inst =
      instantiate(sys, o.depth,
                  o.bounded ? InstantiateMode::kBounded
                            : InstantiateMode::kStructural,
                  pricing);
  const std::string text =
      inst.game ? io::to_text(*inst.game) : io::to_text(inst.form.quintuples());
  if (o.output.empty()) {
    *document = true;
    out << text;
    return kHolds;
  }
  io::write_file(o.output, text);
  out << (inst.game ? "game" : "pentaform") << ": " << inst.form.size()
      << " quintuples, " << inst.class_of.size() << " pieces, written to "
      << o.output << "\n";
  return kHolds;
}

std::string echo(const std::vector<std::string>& args) {
  std::string out = "pentaform";
  for (const auto& a : args) {
    out += " ";
    out += a.find_first_of(" \t\"") == std::string::npos && !a.empty()
               ? a
               : nlohmann::json(a).dump();
  }
  return out;
}

}  // namespace

Report run(const std::vector<std::string>& args) {
  CLI::App app{"Analyse extensive-form games written as pentaforms."};
  app.name("pentaform");
  app.require_subcommand(1);

  std::string path;
  auto* validate_cmd = app.add_subcommand(
      "validate", "Check the eight axioms and report each with witnesses");
  validate_cmd->add_option("file", path, "pentaform, game or system file")
      ->required();

  InspectOptions inspect_opts;
  auto* inspect_cmd =
      app.add_subcommand("inspect", "List subroots and piece forms");
  inspect_cmd->add_option("file", path, "pentaform or game file")->required();
  inspect_cmd->add_flag("--subroots", inspect_opts.subroots, "list subroots");
  inspect_cmd->add_flag("--pieces", inspect_opts.pieces, "list piece forms");
  inspect_cmd->add_option("--dot", inspect_opts.dot, "write a DOT digraph");

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand(
      "check", "Check a property of a strategy and value function");
  check_cmd->add_option("game", check_opts.game, "game or system file")
      ->required();
  check_cmd->add_option("strategy", check_opts.strategy, "strategy file")
      ->required();
  check_cmd->add_option("values", check_opts.values, "value function file");
  check_cmd->add_option("--property", check_opts.property, "property to check")
      ->required()
      ->check(CLI::IsMember(kProperties));
  check_cmd->add_flag("--authentic-value", check_opts.authentic_value,
                      "use the strategy's own value function");

  auto* solve_cmd =
      app.add_subcommand("solve", "Backward induction over piece forms");
  solve_cmd->add_option("game", path, "game file")->required();

  auto* stationary_cmd =
      app.add_subcommand("stationary", "Analyse a stationary piece system");
  stationary_cmd->add_option("system", path, "system file")->required();
  stationary_cmd->require_subcommand(1);
  std::string sigma_path;
  auto* certify_cmd = stationary_cmd->add_subcommand(
      "certify", "Certify or refute subgame perfection of a strategy");
  certify_cmd->add_option("strategy", sigma_path, "stationary strategy file")
      ->required();
  auto* ssolve_cmd = stationary_cmd->add_subcommand(
      "solve", "Value iteration over the piece classes");
  auto* convergence_cmd = stationary_cmd->add_subcommand(
      "convergence", "Decide upper- and lower-convergence");
  InstantiateOptions inst_opts;
  auto* instantiate_cmd = stationary_cmd->add_subcommand(
      "instantiate", "Unroll the system through a number of continue exits");
  instantiate_cmd->add_option("depth", inst_opts.depth, "continue exits")
      ->required();
  instantiate_cmd->add_flag("--bounded", inst_opts.bounded,
                            "emit a finite game with priced boundary endnodes");
  instantiate_cmd
      ->add_option("--pricing", inst_opts.pricing, "boundary pricing")
      ->check(CLI::IsMember({"lower", "upper", "continuation"}));
  instantiate_cmd->add_option("--values", inst_opts.values,
                              "class values for continuation pricing");
  instantiate_cmd->add_option("--strategy", inst_opts.strategy,
                              "strategy whose values price the boundary");
  instantiate_cmd->add_option("-o,--output", inst_opts.output, "output file");

  Report report;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    report.status = app.exit(e, out, err) == 0 ? kHolds : kInputError;
    report.output = out.str();
    report.errors = err.str();
    return report;
  }

  bool document = false;
  std::ostringstream body;
  try {
    if (*validate_cmd) {
      const std::string text = io::read_file(path);
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        report.status = report_axioms(body, {});
      } else if (io::has_key(text, "classes", path)) {
        report.status = cmd_validate_system(body, text, path);
      } else {
        report.status = report_axioms(body, io::quintuples_from_text(text, path));
      }
    } else if (*inspect_cmd) {
      report.status = cmd_inspect(body, path, inspect_opts);
    } else if (*check_cmd) {
      report.status = cmd_check(body, check_opts);
    } else if (*solve_cmd) {
      report.status = cmd_solve(body, path);
    } else if (*certify_cmd) {
      report.status = cmd_certify(body, path, sigma_path);
    } else if (*ssolve_cmd) {
      report.status = cmd_stationary_solve(body, path);
    } else if (*convergence_cmd) {
      report.status = cmd_convergence(body, path);
    } else if (*instantiate_cmd) {
      report.status = cmd_instantiate(body, path, inst_opts, &document);
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    report.status = kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    report.status = kInputError;
  } catch (const std::invalid_argument& e) {
    // DomainError and UsageError.
    err << "error: " << e.what() << "\n";
    report.status = kInputError;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    report.status = kInputError;
  }
  if (!document) out << "# " << echo(args) << "\n";
  out << body.str();
  if (!document && report.status != kHolds && err.str().empty()) {
    out << "exit status: " << report.status << "\n";
  }
  report.output = out.str();
  report.errors = err.str();
  return report;
}

}  // namespace pentaform::cli
