// Copyright 2026 The deskrisk Authors
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

#include "deskrisk/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deskrisk/baselines.hpp"
#include "deskrisk/flow.hpp"
#include "deskrisk/generator.hpp"
#include "deskrisk/greedy.hpp"
#include "deskrisk/io.hpp"
#include "deskrisk/oracle.hpp"
#include "deskrisk/relaxation.hpp"
#include "deskrisk/soft.hpp"

namespace deskrisk {
namespace {

// Raised for user-facing input problems; maps to kExitInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveArgs {
  std::string file;
  std::string variant;
  std::string algorithm;
  std::optional<int> limit;
  std::optional<double> lambda;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string dump_network;
  std::string dump_lp;
  std::uint64_t cap = kDefaultEnumerationCap;
};

int exit_code(Status status) {
  switch (status) {
    case Status::kOptimal:
    case Status::kFeasible:
      return kExitOk;
    case Status::kInfeasible:
      return kExitInfeasible;
    case Status::kError:
      return kExitSolverError;
  }
  return kExitSolverError;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text(text, path);
  }
}

Instance load_valid(const std::string& path) {
  Instance instance = load_instance(path);
  const auto violations = validate(instance);
  if (!violations.empty()) {
    std::string msg = path + " is not a valid instance:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw InputError(msg);
  }
  return instance;
}

int resolve_limit(const SolveArgs& args, const Instance& instance) {
  const auto limit = args.limit ? args.limit : instance.limit();
  if (!limit) throw InputError("variant " + args.variant + " needs --b");
  if (*limit < 1) throw InputError("--b must be at least 1");
  return *limit;
}

double resolve_lambda(const SolveArgs& args, const Instance& instance) {
  const auto lambda = args.lambda ? args.lambda : instance.lambda();
  if (!lambda) throw InputError("variant soft needs --lambda");
  if (!(*lambda > 0.0)) throw InputError("--lambda must be positive");
  return *lambda;
}

SolveReport run_oracle(const SolveArgs& args, const Instance& instance) {
  OracleOptions options;
  options.cap = args.cap;
  if (args.variant == "basic") return oracle_basic(instance, options);
  const int limit = resolve_limit(args, instance);
  if (args.variant == "hard") return oracle_hard(instance, limit, options);
  return oracle_soft(instance, limit, resolve_lambda(args, instance), options);
}

SolveReport run_solver(const SolveArgs& args, const Instance& instance) {
  const std::string& algo = args.algorithm;
  if (algo == "oracle") return run_oracle(args, instance);
  if (args.variant == "basic") {
    if (algo == "greedy") return greedy_assign_basic(instance, args.seed);
  } else if (args.variant == "hard") {
    const int limit = resolve_limit(args, instance);
    if (algo == "flow") {
      if (!args.dump_network.empty()) {
        emit(dump(network_to_json(build_hard_network(instance, limit).network)),
             args.dump_network, std::cout);
      }
      return solve_hard(instance, limit);
    }
    if (algo == "lp") {
      if (!args.dump_lp.empty()) {
        emit(dump(lp_to_json(build_hard_lp(instance, limit).program)),
             args.dump_lp, std::cout);
      }
      return solve_hard_relaxed(instance, limit);
    }
    if (algo == "baseline-rand") {
      const std::uint64_t seed = args.seed.value_or(0);
      return baseline_report_hard(instance, limit,
                                  rand_assign_hard(instance, limit, seed),
                                  "baseline-rand", seed);
    }
    if (algo == "baseline-greedy") {
      return baseline_report_hard(instance, limit,
                                  greedy_assign_hard(instance, limit, args.seed),
                                  "baseline-greedy", args.seed);
    }
  } else {
    const int limit = resolve_limit(args, instance);
    const double lambda = resolve_lambda(args, instance);
    if (algo == "lp-round") {
      if (!args.dump_lp.empty()) {
        emit(dump(lp_to_json(build_soft_lp(instance, limit, lambda).program)),
             args.dump_lp, std::cout);
      }
      return solve_soft(instance, limit, lambda);
    }
    if (algo == "exact-flow") {
      if (!args.dump_network.empty()) {
        emit(dump(network_to_json(
                 build_soft_network(instance, limit, lambda).network)),
             args.dump_network, std::cout);
      }
      return solve_soft_exact(instance, limit, lambda);
    }
    if (algo == "baseline-rand") {
      const std::uint64_t seed = args.seed.value_or(0);
      return baseline_report_soft(instance, limit, lambda,
                                  rand_assign_soft(instance, limit, seed),
                                  "baseline-rand", seed);
    }
    if (algo == "baseline-greedy") {
      return baseline_report_soft(
          instance, limit, lambda,
          greedy_assign_soft(instance, limit, lambda, args.seed),
          "baseline-greedy", args.seed);
    }
  }
  throw InputError("algorithm " + algo + " does not apply to variant " +
                   args.variant);
}

int solve_command(const SolveArgs& args, std::ostream& out) {
  const Instance instance = load_valid(args.file);
  const SolveReport report = run_solver(args, instance);
  emit(dump(report_to_json(instance, report)), args.output, out);
  return exit_code(report.status);
}

void add_solve_options(CLI::App& cmd, SolveArgs& args, bool with_algorithm) {
  cmd.add_option("file", args.file, "Instance JSON")->required();
  cmd.add_option("--variant", args.variant, "Problem variant")
      ->required()
      ->check(CLI::IsMember({"basic", "hard", "soft"}));
  if (with_algorithm) {
    cmd.add_option("--algorithm", args.algorithm, "Solver")
        ->required()
        ->check(CLI::IsMember({"greedy", "flow", "lp", "lp-round", "exact-flow",
                               "baseline-rand", "baseline-greedy", "oracle"}));
    cmd.add_option("--seed", args.seed, "Seed for randomized choices");
    cmd.add_option("--dump-network", args.dump_network,
                   "Write the flow network as JSON");
    cmd.add_option("--dump-lp", args.dump_lp, "Write the LP as JSON");
  }
  cmd.add_option("--b", args.limit, "Nomination limit (overrides the file)");
  cmd.add_option("--lambda", args.lambda, "Penalty weight (overrides the file)");
  cmd.add_option("--cap", args.cap, "Oracle enumeration cap");
  cmd.add_option("-o,--output", args.output, "Report path (default stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Reciprocal-reviewer nomination solver", "deskrisk"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("file", validate_file, "Instance JSON")->required();

  GeneratorSpec spec;
  std::optional<int> gen_limit;
  std::optional<double> gen_lambda;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--n", spec.num_papers, "Papers")->required();
  gen_cmd->add_option("--m", spec.num_authors, "Authors")->required();
  gen_cmd->add_option("--amin", spec.min_authors, "Min authors per paper");
  gen_cmd->add_option("--amax", spec.max_authors, "Max authors per paper");
  gen_cmd->add_option("--plo", spec.p_low, "Lowest probability");
  gen_cmd->add_option("--phi", spec.p_high, "Highest probability");
  gen_cmd->add_option("--seed", spec.seed, "Seed");
  gen_cmd->add_option("--b", gen_limit, "Store a nomination limit");
  gen_cmd->add_option("--lambda", gen_lambda, "Store a penalty weight");
  gen_cmd->add_option("-o,--output", gen_output, "Output path (default stdout)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  add_solve_options(*solve_cmd, solve_args, true);

  SolveArgs oracle_args;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force optimum (small instances)");
  add_solve_options(*oracle_cmd, oracle_args, false);

  std::string csv_pairs;
  std::string csv_p;
  std::string csv_output;
  auto* csv_cmd = app.add_subcommand("import-csv", "Convert CSV pairs to JSON");
  csv_cmd->add_option("--pairs", csv_pairs, "paper_id,author_id rows")->required();
  csv_cmd->add_option("--p", csv_p, "author_id,p rows")->required();
  csv_cmd->add_option("-o,--output", csv_output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate_cmd) {
      const Instance instance = load_instance(validate_file);
      const auto violations = validate(instance);
      for (const auto& v : violations) err << v.message << '\n';
      if (!violations.empty()) return kExitInputError;
      out << "ok\n";
      return kExitOk;
    }
    if (*gen_cmd) {
      Instance instance =
          generate(spec).with_limit(gen_limit).with_lambda(gen_lambda);
      require_valid(instance);
      emit(dump(instance_to_json(instance)), gen_output, out);
      return kExitOk;
    }
    if (*solve_cmd) return solve_command(solve_args, out);
    if (*oracle_cmd) {
      oracle_args.algorithm = "oracle";
      return solve_command(oracle_args, out);
    }
    if (*csv_cmd) {
      std::ifstream pairs(csv_pairs);
      std::ifstream probs(csv_p);
      if (!pairs) throw InputError("cannot open " + csv_pairs);
      if (!probs) throw InputError("cannot open " + csv_p);
      const Instance instance = import_csv(pairs, probs);
      require_valid(instance);
      emit(dump(instance_to_json(instance)), csv_output, out);
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitSolverError;
  }
  return kExitInputError;
}

}  // namespace deskrisk
