#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "dmloc/config.hpp"
#include "dmloc/error.hpp"
#include "dmloc/report.hpp"
#include "dmloc/verify.hpp"

namespace {

enum Exit { kOk = 0, kComputation = 1, kParse = 2, kVerify = 3 };

void emit(const nlohmann::json& j, bool compact) { std::cout << (compact ? j.dump() : j.dump(2)) << '\n'; }

void emit_error(const nlohmann::json& j, bool compact) { std::cerr << (compact ? j.dump() : j.dump(2)) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local invariants of Drinfeld modules over F_q((pi))"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  uint64_t seed = 1;
  bool compact = false;
  std::string suite;
  std::optional<unsigned> cap_degree, cap_ext;

  app.add_flag("--json", compact, "single-line JSON output");
  app.add_option("--cap-degree", cap_degree, "coefficient degree cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-ext", cap_ext, "torsion extension degree cap")->check(CLI::PositiveNumber);

  const std::vector<std::pair<std::string, nlohmann::json (*)(const dmloc::Problem&)>> commands{
      {"height", dmloc::cmd_height},       {"volume", dmloc::cmd_volume}, {"reduce", dmloc::cmd_reduce},
      {"conductor", dmloc::cmd_conductor}, {"as-break", dmloc::cmd_as_break}, {"kummer", dmloc::cmd_kummer},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, "run the " + name + " computation on a problem file");
    sub->add_option("--config", config_path, "problem description")->required();
    subs.push_back(sub);
  }
  auto* verify = app.add_subcommand("verify", "run brute-force verification suites");
  verify->add_option("--suite", suite, "suite name (default: all)");
  verify->add_option("--seed", seed, "random seed");
  auto* print = app.add_subcommand("print-config", "parse a problem file and print its canonical form");
  print->add_option("--config", config_path, "problem description")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (verify->parsed()) {
      dmloc::VerifyOptions opts;
      opts.seed = seed;
      if (cap_degree) opts.cap_degree = *cap_degree;
      if (cap_ext) opts.cap_ext = *cap_ext;
      std::vector<std::string> names = suite.empty() || suite == "all" ? dmloc::suite_names()
                                                                       : std::vector<std::string>{suite};
      bool ok = true;
      nlohmann::json results = nlohmann::json::array();
      for (const auto& n : names) {
        dmloc::SuiteResult r;
        try {
          r = dmloc::run_suite(n, opts);
        } catch (const std::invalid_argument& e) {
          emit_error({{"error", "unknown_suite"}, {"message", e.what()}}, compact);
          return kVerify;
        }
        ok = ok && r.passed;
        results.push_back(dmloc::to_json(r));
      }
      emit({{"command", "verify"}, {"seed", std::to_string(seed)}, {"passed", ok}, {"suites", results}}, compact);
      return ok ? kOk : kVerify;
    }

    dmloc::ProblemConfig cfg = dmloc::load_config(config_path);
    if (cap_degree) cfg.cap_degree = *cap_degree;
    if (cap_ext) cfg.cap_ext = *cap_ext;
    if (print->parsed()) {
      std::cout << dmloc::print_config(cfg);
      return kOk;
    }
    const dmloc::Problem problem(cfg);
    for (size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) {
        emit(commands[i].second(problem), compact);
        return kOk;
      }
    }
  } catch (const dmloc::ParseError& e) {
    emit_error({{"error", "parse_error"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}}, compact);
    return kParse;
  } catch (const dmloc::ComputationError& e) {
    emit_error({{"error", e.code()}, {"message", e.what()}}, compact);
    return kComputation;
  }
  return kOk;
}
