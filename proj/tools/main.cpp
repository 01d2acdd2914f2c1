#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hultman;
  using namespace hultman::cli;

  CLI::App app{"Exact breakpoint-graph cycle distributions and rearrangement distances"};
  app.require_subcommand(1);

  bool is_signed = false, force = false, dense = false;
  int n = 0;
  unsigned jobs = 1;
  std::string format = "csv", out, statistic = "cycles", metric, suite;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--out", out, "write to a file instead of stdout");
  };

  auto* table = app.add_subcommand("table", "closed-form Hultman numbers for 1 <= n <= N");
  table->add_flag("--signed", is_signed);
  table->add_option("--n,--max-n", n, "largest n")->required();
  table->add_flag("--dense", dense, "include zero entries");
  add_format(table);

  auto* census = app.add_subcommand("census", "exhaustive cycle-count census");
  census->add_flag("--signed", is_signed);
  census->add_option("--n", n)->required();
  census->add_option("--statistic", statistic)->check(CLI::IsMember({"cycles", "odd"}));
  census->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  census->add_flag("--force", force, "lift the size guard");
  census->add_flag("--dense", dense, "include zero entries");
  add_format(census);

  auto* moments = app.add_subcommand("moments", "exact mean and variance for 1 <= n <= N");
  moments->add_flag("--signed", is_signed);
  moments->add_option("--n,--max-n", n, "largest n")->required();
  add_format(moments);

  auto* dist = app.add_subcommand("dist", "distribution of a distance or lower bound");
  dist->add_option("--metric", metric)->required();
  dist->add_option("--n", n)->required();
  dist->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  dist->add_flag("--force", force);
  add_format(dist);

  auto* compare = app.add_subcommand("compare", "fit a distance distribution to a shifted Hultman row");
  compare->add_option("--metric", metric)->required();
  compare->add_option("--n", n)->required();
  compare->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  compare->add_flag("--force", force);
  add_format(compare);

  int max_n = 8;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"table1", "formulas", "lemmas", "bounds", "moments"}));
  verify->add_option("--max-n", max_n);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const Format fmt = parse_format(format);
    const CensusOptions opt{jobs, force};
    if (*table) return emit(cmd_table(is_signed, n, fmt, dense), out);
    if (*census) return emit(cmd_census(is_signed, n, statistic, opt, fmt, dense), out);
    if (*moments) return emit(cmd_moments(is_signed, n, fmt), out);
    if (*dist) return emit(cmd_dist(metric, n, opt, fmt), out);
    if (*compare) return emit(cmd_compare(metric, n, opt, fmt), out);
    if (*verify) {
      const auto report = cmd_verify(suite, max_n, jobs);
      std::cout << report.str();
      return report.passed() ? 0 : 1;
    }
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << " (pass --force to run anyway)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
