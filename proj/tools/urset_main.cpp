#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "urset/checker.hpp"
#include "urset/repl.hpp"

namespace {

int run_eval(const std::string& expr, bool raw) {
  urset::dsl::Session session = urset::dsl::Session::make_default();
  if (raw) session.mode = urset::dsl::RenderMode::raw;
  try {
    auto tokens = urset::dsl::tokenize(expr);
    auto tree = urset::dsl::parse(tokens, session.atoms);
    auto value = urset::dsl::eval(tree, session.env, session.alpha);
    std::cout << urset::dsl::render(value, session.mode, session.alpha) << "\n";
    return 0;
  } catch (const urset::dsl::dsl_error& de) {
    std::cerr << "error: " << de.what() << "\n";
    return 1;
  } catch (const urset::kernel_error& ke) {
    std::cerr << "error: " << urset::errc_name(ke.code()) << ": " << ke.what() << "\n";
    return 1;
  }
}

int run_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  urset::dsl::Session session = urset::dsl::Session::make_default();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    urset::dsl::StepResult step = urset::dsl::repl_step(session, line);
    if (!step.output.empty()) std::cout << step.output << "\n";
    if (step.output.rfind("error:", 0) == 0) {
      std::cerr << path << ":" << lineno << ": statement failed\n";
      return 1;
    }
    if (step.quit) break;
  }
  return 0;
}

int run_repl() {
  urset::dsl::Session session = urset::dsl::Session::make_default();
  std::cout << "urset — a kernel for sets with self-membered individuals\n";
  std::cout << "type :quit to leave, :check <suite> to verify the theory\n";
  std::string line;
  for (;;) {
    std::cout << "urset> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    urset::dsl::StepResult step = urset::dsl::repl_step(session, line);
    if (!step.output.empty()) std::cout << step.output << "\n";
    if (step.quit) break;
  }
  return 0;
}

int run_check(const std::string& suite_name, int max_n, bool json, std::uint64_t seed) {
  auto suite = urset::check::suite_from_name(suite_name);
  if (!suite) {
    std::cerr << "error: unknown suite '" << suite_name << "'\n";
    return 1;
  }
  try {
    urset::check::UniverseSpec spec;
    urset::check::Report report =
        urset::check::run_suite(*suite, spec, max_n, urset::check::KernelHooks::standard(), seed);
    if (json)
      std::cout << urset::check::to_json_string(report, 2) << "\n";
    else
      std::cout << urset::check::format_report(report) << "\n";
    return report.all_passed() ? 0 : 2;
  } catch (const urset::kernel_error& ke) {
    std::cerr << "error: " << urset::errc_name(ke.code()) << ": " << ke.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"urset — hereditarily finite sets with individuals, their numbers, "
               "symbolic ordinals, and an exhaustive bounded checker"};
  app.require_subcommand(1);

  std::string expr;
  bool raw = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression and print it");
  eval_cmd->add_option("-e,--expr", expr, "expression to evaluate")->required();
  eval_cmd->add_flag("--raw", raw, "print full canonical set notation");

  std::string script;
  CLI::App* run_cmd = app.add_subcommand("run", "run a file, one statement per line");
  run_cmd->add_option("file", script, "script file ('#' starts a comment)")->required();

  CLI::App* repl_cmd = app.add_subcommand("repl", "interactive session");

  std::string suite = "all";
  int max_n = 10;
  bool json = false;
  std::uint64_t seed = 0;
  CLI::App* check_cmd = app.add_subcommand("check", "verify the axioms and theorems");
  check_cmd->add_option("--suite", suite, "all|peano|theorems|arith|ordinal")
      ->default_val("all");
  check_cmd->add_option("--max-n", max_n, "bound for number-valued quantifiers (1..14)")
      ->default_val(10);
  check_cmd->add_flag("--json", json, "emit the JSON report");
  check_cmd->add_option("--seed", seed, "shuffle the instance visit order (0 = canonical)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (eval_cmd->parsed()) return run_eval(expr, raw);
  if (run_cmd->parsed()) return run_file(script);
  if (repl_cmd->parsed()) return run_repl();
  if (check_cmd->parsed()) return run_check(suite, max_n, json, seed);
  return 1;
}
