#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "onerel/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "onerel: outer automorphism groups of two-generator one-relator "
      "groups with torsion"};
  app.require_subcommand(1);

  onerel::CliRequest req;
  std::string presentation_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", req.json, "emit a JSON report");
    cmd->add_flag("--trace", req.trace, "include the algorithm trace");
  };

  auto* classify = app.add_subcommand(
      "classify", "classify Out(G) for G = <a, b; R^n> and emit "
                  "presentations of Out(G) and Aut(G)");
  classify->add_option("-r,--relator", req.relator_text, "relator R")
      ->required();
  classify->add_option("-n", req.n, "torsion exponent n > 1")->required();
  add_common(classify);

  auto* check = app.add_subcommand(
      "check-map", "decide whether a Nielsen transformation defines an "
                   "automorphism of G");
  check->add_option("-r,--relator", req.relator_text, "relator R")
      ->required();
  check->add_option("-n", req.n, "torsion exponent n > 1")->required();
  check
      ->add_option("-m,--map", req.map_text,
                   "map: alpha(k), beta(k), zeta(k), delta(k), psi(k) or "
                   "`a -> <word>; b -> <word>`")
      ->required();
  add_common(check);

  auto* balance = app.add_subcommand(
      "balance", "rewrite the relator so that a has exponent sum zero");
  balance->add_option("-r,--relator", req.relator_text, "relator R")
      ->required();
  balance->add_option("-n", req.n, "torsion exponent (default 2)");
  add_common(balance);

  auto* oracle = app.add_subcommand(
      "oracle", "direct family enumeration and consistency crosschecks");
  oracle->add_option("-r,--relator", req.relator_text, "relator R")
      ->required();
  oracle->add_option("-n", req.n, "torsion exponent (default 2)");
  oracle->add_option("--widen", req.widen,
                     "extra candidate-range width to audit (default 10)");
  oracle->add_option("--seed", req.seed, "sampler seed (default 1)");
  add_common(oracle);

  auto* sc = app.add_subcommand(
      "sc-check", "metric condition checks and the small-cancellation "
                  "classification");
  sc->add_option("-f,--file", presentation_path,
                 "presentation file (one relator per line, optional "
                 "`b_order = <n|infinite>` header); use - for stdin")
      ->required();
  add_common(sc);

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) req.command = onerel::CliRequest::Command::Classify;
  if (check->parsed()) req.command = onerel::CliRequest::Command::CheckMap;
  if (balance->parsed()) req.command = onerel::CliRequest::Command::Balance;
  if (oracle->parsed()) req.command = onerel::CliRequest::Command::Oracle;
  if (sc->parsed()) {
    req.command = onerel::CliRequest::Command::ScCheck;
    try {
      req.presentation_text = slurp(presentation_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  const auto result = onerel::run(req);
  std::cout << result.output;
  return result.exit_code;
}
