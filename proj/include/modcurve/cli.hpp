#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modcurve/errors.hpp"
#include "modcurve/pipelines.hpp"

namespace modcurve::cli {

// Raised by parse_args. exit_code is 0 for --help, where message holds the help text.
class UsageError : public Error {
 public:
  UsageError(std::string message, int exit_code) : Error(std::move(message)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

enum class Subcommand { X13Verify, X37Verify, X37Table };

struct CliConfig {
  Subcommand subcommand = Subcommand::X13Verify;
  unsigned precision_bits = 256;
  std::uint64_t rng_seed = 0;
  std::vector<std::string> only;
  std::vector<std::string> skip;
  std::optional<std::string> jmap_path;
  std::optional<std::string> json_path;
  std::optional<std::string> out_path;
  std::optional<TableFormat> format;
  long max_k = 15;
  // Model replacements for negative controls; not reachable from the command line.
  std::optional<UniPoly<Rational>> x13_f;
  std::optional<UniPoly<Rational>> x37_g;
};

CliConfig parse_args(const std::vector<std::string>& args);  // args exclude the program name
CliConfig parse_args(int argc, const char* const* argv);

// 0 when nothing failed, 1 when a check failed, 2 on an operational error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace modcurve::cli
