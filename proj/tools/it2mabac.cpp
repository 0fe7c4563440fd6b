// Command-line front end: solve / trace / validate a group decision problem.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "it2mabac/error.hpp"
#include "it2mabac/problem.hpp"
#include "it2mabac/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

struct Overrides {
  std::optional<double> lambda;
  std::optional<double> r;
  std::optional<double> s;
  std::optional<std::string> baa;
  std::string format = "text";
};

void add_param_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--lambda", o.lambda, "Attitude weight of the rank-based distance, in [0,1]");
  cmd->add_option("--r", o.r, "First Bonferroni exponent (>= 0)");
  cmd->add_option("--s", o.s, "Second Bonferroni exponent (>= 0)");
  cmd->add_option("--baa", o.baa, "Border approximation operator")
      ->check(CLI::IsMember({"bonferroni", "geomean"}));
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
}

it2mabac::DecisionProblem load(const std::string& path, const Overrides& o) {
  auto problem = it2mabac::load_problem(path);
  auto& params = problem.params;
  if (o.lambda) params.rank.lambda = *o.lambda;
  if (o.r) params.bonferroni.r = *o.r;
  if (o.s) params.bonferroni.s = *o.s;
  if (o.baa) params.baa = it2mabac::parse_baa_operator(*o.baa);
  params.validate();
  return problem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval type-2 fuzzy MABAC group decision solver"};
  app.require_subcommand(1);

  Overrides overrides;
  std::string path;
  std::string table;

  auto* solve = app.add_subcommand("solve", "Run the full method and print every table");
  solve->add_option("problem", path, "Problem file")->required();
  add_param_flags(solve, overrides);

  auto* trace = app.add_subcommand("trace", "Run the method and print one intermediate table");
  trace->add_option("problem", path, "Problem file")->required();
  trace->add_option("table", table, "Table name")
      ->required()
      ->check(CLI::IsMember(it2mabac::table_names()));
  add_param_flags(trace, overrides);

  auto* validate = app.add_subcommand("validate", "Parse and validate a problem file");
  validate->add_option("problem", path, "Problem file")->required();
  add_param_flags(validate, overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  it2mabac::DecisionProblem problem;
  try {
    problem = load(path, overrides);
  } catch (const it2mabac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return it2mabac::is_validation_error(e.code()) ? kExitValidation : kExitComputation;
  }

  if (validate->parsed()) {
    std::cout << "ok: " << problem.alternatives.size() << " alternatives, "
              << problem.criteria.size() << " criteria, " << problem.experts.size()
              << " experts\n";
    return kExitOk;
  }

  try {
    const auto result = it2mabac::run(problem);
    const auto format = it2mabac::parse_format(overrides.format);
    if (solve->parsed()) {
      std::cout << it2mabac::render(problem, result, format);
    } else {
      std::cout << it2mabac::render_table(problem, result, table, format);
    }
  } catch (const it2mabac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}
