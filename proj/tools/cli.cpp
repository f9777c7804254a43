#include "modcurve/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace modcurve::cli {

namespace {

struct Flags {
  unsigned precision = 256;
  std::uint64_t seed = 0;
  std::vector<std::string> only, skip;
  std::string jmap, json, out, format;
  long max_k = 15;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--precision", f.precision, "Starting bit precision for square roots in K")
      ->check(CLI::Range(64u, 1u << 16));
  sub->add_option("--rng-seed", f.seed, "Seed for randomized polynomial factorization");
}

void add_filters(CLI::App* sub, Flags& f, const std::vector<std::string>& ids) {
  auto* only = sub->add_option("--only", f.only, "Run only these checks")->delimiter(',')->check(CLI::IsMember(ids));
  auto* skip = sub->add_option("--skip", f.skip, "Skip these checks")->delimiter(',')->check(CLI::IsMember(ids));
  only->excludes(skip);
  sub->add_option("--json", f.json, "Write the JSON report here");
}

bool any_failed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

void print_checks(const std::string& name, const std::vector<CheckResult>& checks, std::ostream& out) {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) {
    ++counts[static_cast<int>(c.status)];
    out << std::left << std::setw(5) << to_string(c.status) << ' ' << std::setw(20) << c.check_id << ' '
        << std::fixed << std::setprecision(3) << c.seconds << "s  " << c.actual << '\n';
    if (c.status == CheckStatus::Fail) out << "      expected: " << c.expected << '\n';
  }
  out << name << ": " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skip\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << text;
  if (!os.flush()) throw Error("failed writing " + path);
}

const char* name_of(Subcommand s) {
  switch (s) {
    case Subcommand::X13Verify:
      return "x13-verify";
    case Subcommand::X37Verify:
      return "x37-verify";
    case Subcommand::X37Table:
      return "x37-table";
  }
  return "?";
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"modcurve"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

CliConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Exact verification of the X1(13) and X0(37) computations", "modcurve"};
  app.require_subcommand(1);
  Flags f13, f37, ft;

  auto* x13 = app.add_subcommand("x13-verify", "Run the X1(13) checks over K");
  add_common(x13, f13);
  add_filters(x13, f13, x13_check_ids());

  auto* x37 = app.add_subcommand("x37-verify", "Run the X0(37) checks");
  add_common(x37, f37);
  add_filters(x37, f37, x37_check_ids());
  x37->add_option("--jmap", f37.jmap, "j-map data file");
  x37->add_option("--max-k", f37.max_k, "Largest multiple of the generator to scan")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("x37-table", "Generate quadratic points on X0(37)");
  add_common(table, ft);
  table->add_option("--jmap", ft.jmap, "j-map data file");
  table->add_option("--max-k", ft.max_k, "Largest multiple of the generator to scan")->check(CLI::PositiveNumber);
  auto* format = table->add_option("--format", ft.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", ft.out, "Write the table here");

  try {
    app.parse(argc, argv);
    if (ft.format == "csv" && ft.out.empty() && format->count() > 0) {
      throw CLI::ValidationError("--format csv requires --out");
    }
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), 0);
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (auto* sub : {x13, x37, table})
      if (sub->parsed()) help = sub->help();
    throw UsageError(std::string(e.what()) + (help.empty() ? "\n" + app.help() : "\n" + help), 2);
  }

  CliConfig c;
  const Flags* f = nullptr;
  if (x13->parsed()) {
    c.subcommand = Subcommand::X13Verify;
    f = &f13;
  } else if (x37->parsed()) {
    c.subcommand = Subcommand::X37Verify;
    f = &f37;
  } else {
    c.subcommand = Subcommand::X37Table;
    f = &ft;
  }
  c.precision_bits = f->precision;
  c.rng_seed = f->seed;
  c.only = f->only;
  c.skip = f->skip;
  c.max_k = f->max_k;
  if (!f->jmap.empty()) c.jmap_path = f->jmap;
  if (!f->json.empty()) c.json_path = f->json;
  if (!f->out.empty()) c.out_path = f->out;
  if (f->format == "csv") c.format = TableFormat::Csv;
  if (f->format == "json") c.format = TableFormat::Json;
  return c;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::string name = name_of(config.subcommand);
  try {
    SuiteConfig sc;
    sc.only = config.only;
    sc.skip = config.skip;
    sc.rng_seed = config.rng_seed;
    sc.precision_bits = config.precision_bits;
    sc.max_k = config.max_k;
    sc.x13_f = config.x13_f;
    sc.x37_g = config.x37_g;
    if (config.jmap_path) sc.jmap = load_jmap(*config.jmap_path);

    if (config.subcommand == Subcommand::X37Table) {
      const auto records = generate_table(config.max_k, sc.jmap ? &*sc.jmap : nullptr);
      const TableFormat fmt = config.format.value_or(TableFormat::Csv);
      if (config.out_path) {
        export_table(records, fmt, *config.out_path);
        out << name << ": " << records.size() << " records for k <= " << config.max_k << " written to "
            << *config.out_path << '\n';
      } else if (config.format) {
        out << table_json(records).dump(2) << '\n';
      } else {
        for (const auto& r : records) out << "k = " << r.k << "  D = " << r.D.get_str() << "  x = " << r.x.to_string()
                                          << "  y = " << r.y.to_string() << '\n';
        out << name << ": " << records.size() << " records for k <= " << config.max_k << '\n';
      }
      return 0;
    }

    const auto checks = config.subcommand == Subcommand::X13Verify ? run_x1_13(sc) : run_x0_37(sc);
    print_checks(name, checks, out);
    if (config.json_path) write_file(*config.json_path, report_json(name, config.rng_seed, checks).dump(2) + "\n");
    return any_failed(checks) ? 1 : 0;
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace modcurve::cli
