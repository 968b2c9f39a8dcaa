#include "brainswap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brainswap/cycleswap.hpp"
#include "brainswap/errors.hpp"

namespace brainswap::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kOrderNote =
    "Plans are products of cycles: the leftmost factor is applied last, so the\n"
    "machine runs them from right to left.";

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return read_all(file);
}

std::string permutation_text(const std::string& input, std::istream& in) {
  return input == "-" ? read_all(in) : input;
}

json cycle_json(const Cycle& c) { return json(std::vector<Point>(c.points().begin(), c.points().end())); }

json cycles_json(std::span<const Cycle> cycles) {
  json out = json::array();
  for (const Cycle& c : cycles) out.push_back(cycle_json(c));
  return out;
}

std::string join(std::span<const Point> points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(points[i]);
  }
  return out;
}

// Machine spec from config flags, with n defaulting to `default_n`.
MachineSpec machine_from(const CliConfig& config, std::size_t default_n) {
  const std::size_t n = config.n.value_or(default_n);
  switch (config.machine) {
    case MachineKind::swap2:
      return MachineSpec::swap2(n);
    case MachineKind::cycle3:
      return MachineSpec::cycle3(n);
    case MachineKind::pcycle:
      return MachineSpec::pcycle(*config.p, n);
  }
  throw InvalidArgument("unknown machine");
}

json machine_header(const MachineSpec& spec) {
  json out;
  out["machine"] = to_string(spec.kind);
  out["p"] = spec.kind == MachineKind::pcycle ? json(spec.p) : json(nullptr);
  out["n"] = spec.n;
  out["extras"] = spec.extras();
  return out;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "composition_ok: " << yes(report.composition_ok) << '\n'
      << "shape_ok: " << yes(report.shape_ok) << '\n'
      << "freshness_ok: " << yes(report.freshness_ok) << '\n'
      << "distinctness_ok: " << yes(report.distinctness_ok) << '\n'
      << "subgroup_ok: " << yes(report.subgroup_ok) << '\n';
  for (const auto& f : report.failures) out << "failure: " << f << '\n';
  out << "verified: " << yes(report.passed()) << '\n';
}

json report_json(const VerifyReport& report) {
  json out;
  out["composition_ok"] = report.composition_ok;
  out["shape_ok"] = report.shape_ok;
  out["freshness_ok"] = report.freshness_ok;
  out["distinctness_ok"] = report.distinctness_ok;
  out["subgroup_ok"] = report.subgroup_ok;
  out["verified"] = report.passed();
  out["failures"] = report.failures;
  return out;
}

// ------------------------------------------------------------ subcommands

int cmd_decompose(const CliConfig& config, std::istream& in, std::ostream& out) {
  const Permutation p = parse_cycles(permutation_text(config.input, in));
  const auto cycles = cycle_decomposition(p);
  const std::size_t n = config.n.value_or(p.largest_moved());
  if (config.format == OutputFormat::json) {
    json j;
    j["n"] = n;
    j["cycles"] = cycles_json(cycles);
    j["canonical"] = format_cycles(p);
    j["parity"] = to_string(parity(p));
    j["support"] = support(p);
    out << j.dump() << '\n';
  } else {
    out << "canonical: " << format_cycles(p) << '\n'
        << "cycles: " << cycles.size() << '\n'
        << "parity: " << to_string(parity(p)) << '\n'
        << "support: " << join(support(p)) << '\n';
  }
  return kOk;
}

int cmd_solve(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const Permutation target = parse_cycles(permutation_text(config.input, in));
  const MachineSpec spec = machine_from(config, target.largest_moved());
  if (spec.n < target.largest_moved()) {
    throw InvalidArgument("--n " + std::to_string(spec.n) + " is smaller than moved point " +
                          std::to_string(target.largest_moved()));
  }
  const FactorSequence plan = solve(target, spec);
  const VerifyReport report = verify(plan, target, spec);
  if (!report.passed()) {
    err << "internal error: construction failed verification\n";
    print_report(report, err);
    return kInternalFailure;
  }
  if (config.format == OutputFormat::json) {
    json j = machine_header(spec);
    j["target"] = format_cycles(target);
    j["factors"] = cycles_json(plan.factors);
    j["verified"] = true;
    j["factor_count"] = plan.size();
    out << j.dump() << '\n';
  } else {
    out << "machine: " << to_string(spec.kind) << '\n';
    if (spec.kind == MachineKind::pcycle) out << "p: " << spec.p << '\n';
    out << "n: " << spec.n << '\n'
        << "extras: " << join(spec.extras()) << '\n'
        << "target: " << format_cycles(target) << '\n'
        << "factor_count: " << plan.size() << '\n'
        << "factors: " << plan.to_string() << '\n'
        << "verified: yes\n";
  }
  return kOk;
}

struct LoadedPlan {
  FactorSequence plan;
  Permutation target;
  MachineSpec spec;
};

LoadedPlan load_json_plan(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid plan JSON: ") + e.what());
  }
  try {
    LoadedPlan loaded;
    const MachineKind kind = parse_machine_kind(j.at("machine").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    if (kind == MachineKind::pcycle) {
      loaded.spec = MachineSpec::pcycle(j.at("p").get<std::size_t>(), n);
    } else {
      loaded.spec = kind == MachineKind::swap2 ? MachineSpec::swap2(n) : MachineSpec::cycle3(n);
    }
    loaded.target = parse_cycles(j.at("target").get<std::string>());
    for (const auto& f : j.at("factors")) {
      loaded.plan.factors.emplace_back(f.get<std::vector<Point>>());
    }
    loaded.plan.base_degree = n;
    loaded.plan.extras = loaded.spec.extras();
    return loaded;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
}

int cmd_verify(const CliConfig& config, std::istream& in, std::ostream& out) {
  const std::string text = read_source(config.input, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  LoadedPlan loaded;
  if (first != std::string::npos && text[first] == '{') {
    loaded = load_json_plan(text);
  } else {
    if (!config.target) throw InvalidArgument("a plain-text plan needs --target");
    loaded.target = parse_cycles(*config.target);
    loaded.spec = machine_from(config, loaded.target.largest_moved());
    loaded.plan.factors = parse_history(text);
    loaded.plan.base_degree = loaded.spec.n;
    loaded.plan.extras = loaded.spec.extras();
  }
  const VerifyReport report = verify(loaded.plan, loaded.target, loaded.spec);
  if (config.format == OutputFormat::json) {
    json j = machine_header(loaded.spec);
    j["target"] = format_cycles(loaded.target);
    j["factor_count"] = loaded.plan.size();
    j["report"] = report_json(report);
    out << j.dump() << '\n';
  } else {
    out << "machine: " << to_string(loaded.spec.kind) << '\n'
        << "target: " << format_cycles(loaded.target) << '\n'
        << "factor_count: " << loaded.plan.size() << '\n';
    print_report(report, out);
  }
  return report.passed() ? kOk : kConstraint;
}

int cmd_simulate(const CliConfig& config, std::istream& in, std::ostream& out) {
  const auto history = parse_history(read_source(config.input, in));
  std::size_t largest = 0;
  for (const Cycle& c : history) largest = std::max<std::size_t>(largest, c.max_point());
  MachineSpec spec = machine_from(config, largest);
  const SimulationResult sim = simulate(history, spec);
  const auto& minds = sim.state.mind_in_body;
  if (config.format == OutputFormat::json) {
    json j;
    j["machine"] = to_string(spec.kind);
    j["p"] = spec.kind == MachineKind::pcycle ? json(spec.p) : json(nullptr);
    j["runs"] = history.size();
    j["mind_in_body"] = minds;
    j["restored"] = sim.state.is_identity();
    j["legal"] = sim.legal;
    j["violations"] = sim.violations;
    out << j.dump() << '\n';
  } else {
    out << "body mind\n";
    for (std::size_t b = 0; b < minds.size(); ++b) {
      out << b + 1 << ' ' << minds[b] << (minds[b] == b + 1 ? "" : " *") << '\n';
    }
    out << "restored: " << (sim.state.is_identity() ? "yes" : "no") << '\n'
        << "legal: " << (sim.legal ? "yes" : "no") << '\n';
    for (const auto& v : sim.violations) out << "violation: " << v << '\n';
  }
  return sim.legal ? kOk : kConstraint;
}

int cmd_oracle(const CliConfig& config, std::istream& in, std::ostream& out) {
  const Permutation target = parse_cycles(permutation_text(config.input, in));
  const MachineSpec spec = machine_from(config, target.largest_moved());
  const auto found = search_min_sequence(target, spec, config.max_len);
  if (config.format == OutputFormat::json) {
    json j = machine_header(spec);
    j["target"] = format_cycles(target);
    j["max_len"] = config.max_len;
    j["length"] = found ? json(found->length) : json(nullptr);
    j["factors"] = found ? cycles_json(found->sequence.factors) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "machine: " << to_string(spec.kind) << '\n'
        << "target: " << format_cycles(target) << '\n';
    if (found) {
      out << "length: " << found->length << '\n'
          << "factors: " << found->sequence.to_string() << '\n';
    } else {
      out << "length: none within " << config.max_len << '\n';
    }
  }
  return kOk;
}

}  // namespace

std::vector<Cycle> parse_history(std::string_view text) {
  std::vector<Cycle> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    line = line.substr(0, std::min(line.find('#'), line.size()));
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(parse_cycle(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    start = end + 1;
  }
  return out;
}

int execute(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.machine == MachineKind::pcycle) {
      if (!config.p) {
        err << "error: --machine pcycle requires --p\n";
        return kUsage;
      }
      if (*config.p < 5 || !cycleswap::is_prime(*config.p)) {
        err << "error: --p must be a prime >= 5, got " << *config.p << '\n';
        return kConstraint;
      }
    } else if (config.p) {
      err << "error: --p only applies to --machine pcycle\n";
      return kUsage;
    }
    if (config.subcommand == "solve") return cmd_solve(config, in, out, err);
    if (config.subcommand == "verify") return cmd_verify(config, in, out);
    if (config.subcommand == "simulate") return cmd_simulate(config, in, out);
    if (config.subcommand == "oracle") return cmd_oracle(config, in, out);
    if (config.subcommand == "decompose") return cmd_decompose(config, in, out);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kUsage;
  } catch (const ParityError& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Undo brain-swap scrambles with legal machine runs.", "brainswap"};
  app.footer(kOrderNote);
  app.require_subcommand(1);

  CliConfig config;
  std::string machine = "swap2";
  std::string format = "text";

  auto add_machine = [&](CLI::App* sub) {
    sub->add_option("--machine", machine, "Machine: swap2, cycle3 or pcycle")
        ->check(CLI::IsMember({"swap2", "cycle3", "pcycle"}));
    sub->add_option("--p", config.p, "Cycle length of the pcycle machine (prime >= 5)");
    sub->add_option("--n", config.n, "Base degree; labels above it are fresh (default: largest label)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* solve = app.add_subcommand("solve", "Build a verified repair plan for a scramble");
  add_machine(solve);
  add_format(solve);
  solve->add_option("permutation", config.input, "Scramble in cycle notation, or - for stdin")
      ->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check a plan: solve's JSON, or one factor per line (leftmost first) with --target");
  add_machine(verify_cmd);
  add_format(verify_cmd);
  verify_cmd->add_option("--target", config.target, "Scramble the plain-text plan should undo");
  verify_cmd->add_option("plan", config.input, "Plan file, or - for stdin")->required();

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Run a history of machine uses and print the body/mind table");
  add_machine(simulate_cmd);
  add_format(simulate_cmd);
  simulate_cmd->add_option("history", config.input, "History file (one run per line), or - for stdin")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for a shortest legal plan");
  add_machine(oracle);
  add_format(oracle);
  oracle->add_option("--max-len", config.max_len, "Search depth limit (at most 7)");
  oracle->add_option("permutation", config.input, "Scramble in cycle notation, or - for stdin")
      ->required();

  auto* decompose = app.add_subcommand("decompose", "Print canonical cycles and parity");
  add_format(decompose);
  decompose->add_option("--n", config.n, "Base degree");
  decompose->add_option("permutation", config.input, "Permutation in cycle notation, or - for stdin")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  config.machine = parse_machine_kind(machine);
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  return execute(config, in, out, err);
}

}  // namespace brainswap::cli
