#include "mmdc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mmdc/bench.hpp"
#include "mmdc/errors.hpp"
#include "mmdc/generator.hpp"
#include "mmdc/hungarian.hpp"
#include "mmdc/io.hpp"
#include "mmdc/oracle.hpp"

namespace mmdc::cli {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_report(std::ostream& os, const FeasibilityReport& report, const std::string& prefix) {
  for (const auto& c : report.checks) {
    os << prefix << "check=" << c.name << " result=" << (c.passed ? "pass" : "fail");
    if (!c.offenders.empty()) {
      os << " offenders=";
      for (std::size_t k = 0; k < c.offenders.size(); ++k) os << (k ? "," : "") << c.offenders[k];
    }
    os << '\n';
  }
  os << prefix << "verdict=" << (report.passed() ? "pass" : "fail") << '\n';
}

bool trace_from_env() {
  const char* v = std::getenv("MMDC_TRACE");
  return v != nullptr && std::string(v) == "1";
}

struct SolveArgs {
  std::string path;
  std::string semantics = "expanded";
  bool trace = false;
  std::optional<std::uint64_t> seed_order;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(a.path));
  const auto validation = validate_instance(inst);
  if (!validation.passed()) {
    err << "instance rejected\n";
    print_report(err, validation, "");
    return kUsageOrInvalid;
  }
  SolveOptions options;
  if (a.trace || trace_from_env()) {
    options.trace = [&err](const std::string& record) { err << record << '\n'; };
  }
  options.root_order_seed = a.seed_order;

  Solution sol;
  try {
    sol = solve_mmdc(inst, options);
  } catch (const InfeasibleInstance& e) {
    err << e.what() << '\n';
    return kInfeasible;
  }
  const Semantics mode =
      a.semantics == "expanded" ? Semantics::ExpandedSaturating : Semantics::DeclaredMmdc;
  const auto report = verify_solution(inst, sol, mode);
  out << write_solution(sol);
  if (a.semantics == "declared-report") print_report(out, report, "# report: ");
  if (!report.passed()) {
    err << "solution failed verification: " << report.summary() << '\n';
    return kUsageOrInvalid;
  }
  return kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               const std::string& semantics, std::ostream& out) {
  const Instance inst = parse_instance(read_file(instance_path));
  const Solution sol = parse_solution(read_file(solution_path));
  const Semantics mode =
      semantics == "declared" ? Semantics::DeclaredMmdc : Semantics::ExpandedSaturating;
  const auto report = verify_solution(inst, sol, mode);
  print_report(out, report, "");
  return report.passed() ? kOk : kUsageOrInvalid;
}

int cmd_oracle(const std::string& path, const std::string& mode, const std::string& pair_cap,
               std::int64_t budget_states, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(path));
  OracleBudget budget;
  budget.max_states = budget_states;
  OracleResult result;
  if (mode == "expanded") {
    result = oracle_expanded(ExpandedGraph(inst), budget);
  } else {
    std::optional<int> cap;
    if (pair_cap != "inf") cap = std::stoi(pair_cap);
    result = oracle_declared_mmdc(inst, cap, budget);
  }
  if (!result.feasible()) {
    err << "infeasible: no matching satisfies the " << mode << " constraints\n";
    return kInfeasible;
  }
  Solution sol;
  sol.multiplicities = result.witness;
  sol.total_cost = *result.cost;
  out << write_solution(sol, false);
  out << "# oracle: mode=" << mode << " states=" << result.states << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-cost many-to-many matching with demands and capacities", "mmdc"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file and print the solution");
  solve_cmd->add_option("instance", solve.path, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--semantics", solve.semantics, "Verification semantics")
      ->check(CLI::IsMember({"expanded", "declared-report"}));
  solve_cmd->add_flag("--trace", solve.trace, "Stream key=value phase records to stderr");
  solve_cmd->add_option("--seed-order", solve.seed_order,
                        "Shuffle root selection within A and within A' using this seed");

  GeneratorParams gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a seeded random instance");
  gen_cmd->add_option("--s", gen.s, "Points in A")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--t", gen.t, "Points in B")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--wmax", gen.wmax, "Largest weight")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--capmax", gen.capmax, "Largest capacity")->check(CLI::PositiveNumber);

  BenchParams bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solver over growing sizes");
  bench_cmd->add_option("--sizes", bench.sizes, "Sizes n = s + t")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--wmax", bench.wmax, "Largest weight");
  bench_cmd->add_option("--capmax", bench.capmax, "Largest capacity")->check(CLI::PositiveNumber);

  std::string verify_instance, verify_solution_path, verify_semantics = "expanded";
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution_path, "Solution file")->required();
  verify_cmd->add_option("--semantics", verify_semantics, "Verification semantics")
      ->check(CLI::IsMember({"expanded", "declared"}));

  std::string oracle_path, oracle_mode = "expanded", oracle_pair_cap = "3";
  std::int64_t oracle_budget = OracleBudget{}.max_states;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth for small instances");
  oracle_cmd->add_option("instance", oracle_path, "Instance file")->required();
  oracle_cmd->add_option("--mode", oracle_mode, "Which constraint set to enumerate")
      ->check(CLI::IsMember({"expanded", "declared"}));
  oracle_cmd->add_option("--pair-cap", oracle_pair_cap, "Per-pair multiplicity bound or 'inf'");
  oracle_cmd->add_option("--budget", oracle_budget, "Maximum search states")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrInvalid;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*gen_cmd) {
      out << write_instance(generate_instance(gen));
      return kOk;
    }
    if (*bench_cmd) {
      out << run_bench(bench).to_text();
      return kOk;
    }
    if (*verify_cmd) return cmd_verify(verify_instance, verify_solution_path, verify_semantics, out);
    if (*oracle_cmd) {
      return cmd_oracle(oracle_path, oracle_mode, oracle_pair_cap, oracle_budget, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageOrInvalid;
  } catch (const RejectedInstance& e) {
    err << e.what() << '\n';
    return kUsageOrInvalid;
  } catch (const InfeasibleInstance& e) {
    err << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrInvalid;
  }
  return kUsageOrInvalid;
}

}  // namespace mmdc::cli
