#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galgebra/report.hpp"

namespace {

std::vector<std::int64_t> parse_q_list(const std::vector<std::string>& raw) {
  std::vector<std::int64_t> qs;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      qs.push_back(std::stoll(tok));
    }
  }
  return qs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-group structure of group algebras F_q[QD_16] and F_q[QD_32]"};
  app.require_subcommand(1);

  galg::ReportOptions opt;
  std::vector<std::string> q_raw;

  auto add_common = [&](CLI::App* cmd, bool with_group) {
    cmd->add_option("--p", opt.p, "field characteristic (prime)");
    cmd->add_option("--n", opt.n, "extension degree, q = p^n");
    cmd->add_option("--k", opt.k, "quasidihedral parameter: group order 2^k, k in {4,5}");
    cmd->add_option("--format", opt.format, "output format: text, json (table also: csv)");
    cmd->add_option("--seed", opt.seed, "seed for the randomized factorization");
    if (with_group)
      cmd->add_option("--any-group", opt.group_file, "multiplication-table file replacing the built-in groups");
  };

  CLI::App* report = app.add_subcommand("report", "print the structure report for F_q[QD_2^k]");
  add_common(report, true);
  CLI::App* verify = app.add_subcommand("verify", "run the full check matrix; exit 1 on any failing row");
  add_common(verify, true);
  CLI::App* table = app.add_subcommand("table", "residue-class table over a list of odd prime powers q");
  add_common(table, false);
  table->add_option("--q", q_raw, "comma-separated list of odd prime powers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  galg::CommandResult res;
  if (report->parsed())
    res = galg::cmd_report(opt);
  else if (verify->parsed())
    res = galg::cmd_verify(opt);
  else
    res = galg::cmd_table(opt.k, parse_q_list(q_raw), opt.format, opt.seed);

  (res.exit_code == 2 ? std::cerr : std::cout) << res.output;
  return res.exit_code;
}
