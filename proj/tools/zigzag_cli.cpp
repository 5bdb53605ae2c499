#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zigzag/errors.hpp"
#include "zigzag/report.hpp"

namespace {

void add_common(CLI::App* sub, zigzag::RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format: json, csv, or human");
  sub->add_option("--output", cfg.output_path, "write the report to this file");
  sub->add_flag("--check", cfg.check, "compare against frozen expectations");
}

int emit(const zigzag::RunConfig& cfg, const zigzag::CommandOutcome& out) {
  if (cfg.output_path.empty()) {
    std::cout << out.rendered;
  } else {
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) {
      throw zigzag::ContractError("io-error",
                                  "could not open '" + cfg.output_path + "' for writing");
    }
    f << out.rendered;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for alternating permutation counts A_n"};
  app.require_subcommand(1);
  zigzag::RunConfig cfg;

  CLI::App* compute = app.add_subcommand("compute", "exact A_0..A_N from an oracle");
  compute->add_option("-n,--max-index", cfg.max_index, "largest index N (default 10)");
  compute->add_option("--oracle", cfg.oracle, "entringer or egf_series");
  add_common(compute, cfg);

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute the status of every claimed formula");
  verify->add_option("-n,--max-index", cfg.max_index,
                     "detail-table width (default 10; grids are fixed)");
  add_common(verify, cfg);

  CLI::App* congruence =
      app.add_subcommand("congruence", "congruence claims modulo small primes");
  congruence->add_option("--primes", cfg.primes, "comma-separated primes")
      ->delimiter(',');
  congruence->add_option("-n,--max-index", cfg.max_index,
                         "largest shift index (default 30)");
  add_common(congruence, cfg);

  CLI::App* period =
      app.add_subcommand("period", "eventual periods of A_n mod m");
  period->add_option("--modulus", cfg.moduli, "comma-separated moduli")
      ->delimiter(',');
  period->add_option("-n,--max-index", cfg.max_index,
                     "scan depth (default 200)");
  add_common(period, cfg);

  CLI::App* quadrature =
      app.add_subcommand("quadrature", "numeric integral and series evaluators");
  quadrature->add_option("op", cfg.quad_op, "operation name")->required();
  quadrature->add_option("arg1", cfg.quad_arg1, "first operation argument");
  quadrature->add_option("arg2", cfg.quad_arg2, "second operation argument");
  quadrature->add_option("--rel-tol", cfg.rel_tol, "relative tolerance");
  quadrature->add_option("--nodes", cfg.nodes, "trapezoid node count");
  quadrature->add_option("--radius", cfg.radius, "contour radius");
  add_common(quadrature, cfg);

  CLI::App* asymptotics =
      app.add_subcommand("asymptotics", "leading-order estimate error table");
  asymptotics->add_option("-n,--max-index", cfg.max_index,
                          "largest index N (default 20)");
  add_common(asymptotics, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (CLI::App* sub : {compute, verify, congruence, period, quadrature, asymptotics}) {
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      break;
    }
  }

  try {
    zigzag::CommandOutcome out = zigzag::run_command(cfg);
    return emit(cfg, out);
  } catch (const zigzag::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";  // what() carries the code slug
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
