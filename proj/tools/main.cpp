// dimcert: certified lower bounds on correlation and Frostman dimensions
// of stationary measures of affine iterated function schemes.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dimcert/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Certified lower bounds for dimensions of self-similar measures"};
  app.footer(
      "Overrides are key=value pairs; keys: command, translations,\n"
      "probabilities, lambda_lo, lambda_hi, alpha, d1, d2, epsilon, cells,\n"
      "max_iters, theta, threshold, margin, overlap, intervals, workers,\n"
      "poly_file, poly_palindromic_half, delta, depth, out.\n"
      "DIMCERT_WORKERS overrides the worker count.");

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("overrides", overrides,
                 "command name and/or key=value overrides");

  CLI11_PARSE(app, argc, argv);

  dimcert::RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read " << config_path << '\n';
        return 3;
      }
      cfg = dimcert::parse_config(in);
    }
    for (const std::string& ov : overrides) {
      const auto eq = ov.find('=');
      if (eq == std::string::npos)
        cfg.command = ov;  // bare word selects the command
      else
        cfg.assign(ov.substr(0, eq), ov.substr(eq + 1));
    }
    if (cfg.command.empty())
      throw std::invalid_argument("no command given");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return dimcert::run(cfg, std::cerr);
}
