#include <iostream>

#include "modcurve/cli.hpp"

int main(int argc, char** argv) {
  using namespace modcurve::cli;
  CliConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const UsageError& e) {
    (e.exit_code() == 0 ? std::cout : std::cerr) << e.what() << '\n';
    return e.exit_code();
  }
  return run(config, std::cout, std::cerr);
}
