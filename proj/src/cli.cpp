#include "lukfre/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lukfre/bnb.hpp"
#include "lukfre/candidates.hpp"
#include "lukfre/errors.hpp"
#include "lukfre/feasibility.hpp"
#include "lukfre/instance.hpp"
#include "lukfre/oracle.hpp"
#include "lukfre/solver.hpp"

namespace lukfre {

namespace {

using nlohmann::json;

enum class OutputMode { human, json };

struct CliConfig {
  std::string command;
  std::string input_path;
  double tol = kDefaultTolerance;
  RowOrder order = RowOrder::given;
  std::string trace;
  OutputMode output = OutputMode::human;
  std::size_t m = 4;
  std::size_t n = 6;
  std::uint64_t seed = 1;
  bool consistent = false;
};

std::string vec(std::span<const double> x) {
  std::ostringstream os;
  os.precision(10);
  os << '[';
  for (std::size_t j = 0; j < x.size(); ++j) os << (j ? ", " : "") << x[j];
  os << ']';
  return os.str();
}

std::string columns(const std::vector<std::size_t>& one_based) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < one_based.size(); ++k) {
    os << (k ? ", " : "") << one_based[k];
  }
  os << ']';
  return os.str();
}

std::string set_text(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? ", " : "") << s[k] + 1;
  os << '}';
  return os.str();
}

void print_sets(std::ostream& out, const char* label,
                const std::vector<IndexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "  " << label << '_' << i + 1 << " = " << set_text(sets[i]) << '\n';
  }
}

std::string violation_message(const Instance& inst,
                              const std::vector<double>& max_point,
                              std::size_t row) {
  const auto image = compose(inst.a(), max_point);
  std::ostringstream os;
  os.precision(10);
  os << "infeasible: equation " << row + 1 << " cannot be satisfied (b_"
     << row + 1 << " = " << inst.b()[row]
     << ", value at the maximum solution = " << image[row] << ")";
  return os.str();
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int run_solve(const CliConfig& cfg, const Instance& inst, std::ostream& out,
              std::ostream& err) {
  SolverConfig config;
  config.tol = cfg.tol;
  config.bnb.order = cfg.order;
  std::ofstream trace;
  if (!cfg.trace.empty()) {
    trace.open(cfg.trace);
    if (!trace) throw Error("cannot write trace file " + cfg.trace);
    config.bnb.trace = [&trace](const TraceRecord& r) {
      trace << trace_line(r) << '\n';
    };
  }
  const auto report = solve(inst, config);

  if (cfg.output == OutputMode::json) {
    emit_json(out, to_json(report));
  } else {
    out << "instance " << (inst.name().empty() ? "(unnamed)" : inst.name())
        << " (" << inst.m() << " equations, " << inst.n() << " variables)\n";
    out << "step 1: maximum solution " << vec(report.max_solution) << '\n';
    if (report.status == Status::infeasible) {
      out << "step 2: inconsistent, no feasible solution\n";
    } else {
      const auto& sets = report.index_sets;
      const auto costs = split_costs(inst.c());
      out << "step 2: consistent\n";
      out << "step 3: index sets\n";
      print_sets(out, "J", sets.potential);
      out << "  |E| = " << sets.e_cardinality << '\n';
      print_sets(out, "tight J", sets.tight);
      out << "  |tight E| = " << sets.tight_cardinality << '\n';
      out << "step 4: c+ = " << vec(costs.plus) << ", c- = " << vec(costs.minus)
          << '\n';
      out << "step 5: e* = " << columns(report.e_star.to_one_based())
          << ", Z1 = " << report.z1 << " (" << report.stats.nodes_visited
          << " nodes, " << report.stats.paths_completed << " paths, "
          << report.stats.nodes_pruned << " pruned)\n";
      out << "step 6: x* = " << vec(report.x_star) << '\n';
      out << "  Z2 = " << report.z2 << ", objective c.x* = " << report.objective
          << '\n';
    }
  }
  if (report.status == Status::infeasible) {
    err << violation_message(inst, report.max_solution, *report.violated_row)
        << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}

int run_check(const CliConfig& cfg, const Instance& inst, std::ostream& out,
              std::ostream& err) {
  const auto feas = analyze(inst, cfg.tol);
  if (cfg.output == OutputMode::json) {
    json doc;
    doc["max_solution"] = feas.max.point;
    doc["consistent"] = feas.consistent;
    doc["violated_row"] =
        feas.violated_row ? json(*feas.violated_row + 1) : json(nullptr);
    doc["index_sets"] = to_json(feas.sets);
    emit_json(out, doc);
  } else {
    out << "maximum solution " << vec(feas.max.point) << '\n';
    out << "consistent: " << (feas.consistent ? "yes" : "no") << '\n';
    print_sets(out, "J", feas.sets.potential);
    out << "|E| = " << feas.sets.e_cardinality << '\n';
    if (feas.consistent) {
      print_sets(out, "tight J", feas.sets.tight);
      out << "|tight E| = " << feas.sets.tight_cardinality << '\n';
    }
  }
  if (!feas.consistent) {
    err << violation_message(inst, feas.max.point, *feas.violated_row) << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}

int run_enumerate(const CliConfig& cfg, const Instance& inst,
                  std::ostream& out, std::ostream& err) {
  const auto feas = analyze(inst, cfg.tol);
  if (!feas.consistent) {
    if (cfg.output == OutputMode::json) {
      emit_json(out, {{"consistent", false}, {"minimal", json::array()}});
    }
    err << violation_message(inst, feas.max.point, *feas.violated_row) << '\n';
    return kExitInfeasible;
  }
  const auto minimal = extract_minimal_solutions(inst, cfg.tol);
  if (cfg.output == OutputMode::json) {
    json points = json::array();
    for (const auto& p : minimal.points) {
      points.push_back({{"point", p.point}, {"e", p.origin.to_one_based()}});
    }
    emit_json(out, {{"consistent", true},
                    {"candidate_count", minimal.candidate_count},
                    {"distinct_count", minimal.distinct_count},
                    {"minimal", std::move(points)}});
  } else {
    out << minimal.candidate_count << " candidates, "
        << minimal.distinct_count << " distinct, " << minimal.points.size()
        << " minimal\n";
    for (const auto& p : minimal.points) {
      out << "  " << vec(p.point) << "  e = "
          << columns(p.origin.to_one_based()) << '\n';
    }
  }
  return kExitOk;
}

int run_verify(const CliConfig& cfg, const Instance& inst, std::ostream& out,
               std::ostream& err) {
  const auto report = property_audit(inst, cfg.tol);
  if (cfg.output == OutputMode::json) {
    emit_json(out, to_json(report));
  } else {
    out << "audit of " << (inst.name().empty() ? "(unnamed)" : inst.name())
        << ": |E| = " << report.e_cardinality
        << ", |tight E| = " << report.tight_cardinality << '\n';
    for (const auto& c : report.checks) {
      out << "  " << (c.passed ? "pass " : "FAIL ") << c.name;
      if (!c.passed) out << "  " << c.witness.dump();
      out << '\n';
    }
    if (report.oracle_z1) out << "  oracle Z1 = " << *report.oracle_z1 << '\n';
    for (const auto& note : report.notes) out << "  note: " << note << '\n';
  }
  if (!report.consistent) {
    err << "infeasible: " << report.notes.front() << '\n';
    return kExitInfeasible;
  }
  if (!report.passed()) {
    err << "audit failed\n";
    return kExitAuditFailure;
  }
  return kExitOk;
}

int run_gen(const CliConfig& cfg, std::ostream& out) {
  const auto inst = generate_random(cfg.m, cfg.n, cfg.seed, cfg.consistent);
  const auto text = serialize_instance(inst);
  if (cfg.input_path.empty() || cfg.input_path == "-") {
    out << text;
  } else {
    std::ofstream file(cfg.input_path, std::ios::binary);
    if (!file) throw Error("cannot write " + cfg.input_path);
    file << text;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Linear optimization over max-Lukasiewicz fuzzy relation "
               "equations",
               "lukfre"};
  app.require_subcommand(1);

  const std::map<std::string, RowOrder> orders{
      {"given", RowOrder::given}, {"ascending-tight", RowOrder::ascending_tight}};
  const std::map<std::string, OutputMode> outputs{
      {"human", OutputMode::human}, {"json", OutputMode::json}};

  auto add_common = [&](CLI::App* sub, bool with_search) {
    sub->add_option("input_path", cfg.input_path, "Instance file (JSON)")
        ->required();
    sub->add_option("--tol", cfg.tol, "Comparison tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "human or json")
        ->transform(CLI::CheckedTransformer(outputs));
    if (with_search) {
      sub->add_option("--order", cfg.order,
                      "Branching row order: given or ascending-tight")
          ->transform(CLI::CheckedTransformer(orders));
      sub->add_option("--trace", cfg.trace,
                      "Write branch-and-bound node records (JSON lines) here");
    }
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve the optimization problem");
  add_common(solve_cmd, true);
  auto* check_cmd =
      app.add_subcommand("check", "Maximum solution, consistency, index sets");
  add_common(check_cmd, false);
  auto* enum_cmd =
      app.add_subcommand("enumerate", "List the minimal candidate solutions");
  add_common(enum_cmd, false);
  auto* verify_cmd =
      app.add_subcommand("verify", "Audit the instance against brute force");
  add_common(verify_cmd, false);

  auto* gen_cmd = app.add_subcommand("gen", "Write a random instance");
  gen_cmd->add_option("input_path", cfg.input_path,
                      "Destination file ('-' or omitted for stdout)");
  gen_cmd->add_option("--m", cfg.m, "Number of equations")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", cfg.n, "Number of variables")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", cfg.seed, "Generator seed");
  gen_cmd->add_flag("--consistent", cfg.consistent,
                    "Derive b from a hidden point so a solution exists");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lukfre: " << e.what() << '\n';
    return kExitInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "gen") return run_gen(cfg, out);
    const auto inst = load_instance(cfg.input_path);
    if (cfg.command == "solve") return run_solve(cfg, inst, out, err);
    if (cfg.command == "check") return run_check(cfg, inst, out, err);
    if (cfg.command == "enumerate") return run_enumerate(cfg, inst, out, err);
    return run_verify(cfg, inst, out, err);
  } catch (const AuditFailure& e) {
    err << "lukfre: audit failure: " << e.what() << '\n';
    return kExitAuditFailure;
  } catch (const Error& e) {
    err << "lukfre: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace lukfre
