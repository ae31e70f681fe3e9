// prdim: command-line front end for building p-groups, computing character
// tables, and checking the largest rdim per (p, n) against its witness groups.

#include <algorithm>
#include <iomanip>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prdim/catalog.hpp"
#include "prdim/errors.hpp"
#include "prdim/rdim.hpp"
#include "prdim/report.hpp"
#include "prdim/reptheory.hpp"

namespace {

using nlohmann::json;

int run_fp_table(std::uint32_t p, unsigned n_max, const std::string& format) {
  json rows = json::array();
  for (unsigned n = 1; n <= n_max; ++n) {
    std::uint64_t eq2_max = 0;
    for (unsigned r = 1; r <= n; ++r) eq2_max = std::max(eq2_max, prdim::rdim_upper_bound(n, r, p));
    rows.push_back({{"n", n}, {"fp", prdim::f_p(n, p)}, {"eq2_max", eq2_max}});
  }
  if (format == "json") {
    std::cout << json{{"p", p}, {"rows", rows}}.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "p,n,fp,eq2_max\n";
    for (const auto& r : rows) std::cout << p << ',' << r["n"] << ',' << r["fp"] << ',' << r["eq2_max"] << '\n';
  } else {
    std::cout << "p = " << p << "\n n   f_p(n)   max_r r*p^floor((n-r)/2)\n";
    for (const auto& r : rows) {
      std::cout << ' ' << std::setw(2) << r["n"].get<unsigned>() << "  " << std::setw(7) << r["fp"].get<std::uint64_t>()
                << "   " << r["eq2_max"].get<std::uint64_t>() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact representation dimension of finite p-groups"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for sampled associativity checks")->capture_default_str();

  std::uint32_t p = 2;
  unsigned n_max = 1;
  std::string format;
  std::string spec;
  std::string beta;
  bool brute_force = false;

  auto* fp_cmd = app.add_subcommand("fp-table", "f_p(n) and the maximum of r p^floor((n-r)/2)");
  fp_cmd->add_option("--p", p, "Prime")->required();
  fp_cmd->add_option("--nmax", n_max, "Largest n")->required()->check(CLI::Range(1U, 64U));
  fp_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->default_val("text");

  auto* build_cmd = app.add_subcommand("build", "Group summary as JSON");
  build_cmd->add_option("--spec", spec, "Group spec expression")->required();
  build_cmd->add_option("--beta", beta, "Beta table file for the heisenberg node");

  auto* chartab_cmd = app.add_subcommand("chartab", "Character table export");
  chartab_cmd->add_option("--spec", spec, "Group spec expression")->required();
  chartab_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  chartab_cmd->add_option("--beta", beta, "Beta table file for the heisenberg node");

  auto* rdim_cmd = app.add_subcommand("rdim", "Minimal faithful representation dimension as JSON");
  rdim_cmd->add_option("--spec", spec, "Group spec expression")->required();
  rdim_cmd->add_flag("--brute-force", brute_force, "Use the exhaustive solver");
  rdim_cmd->add_option("--beta", beta, "Beta table file for the heisenberg node");

  auto* verify_cmd = app.add_subcommand("verify", "Reproduce the maximal rdim table; nonzero exit on failure");
  verify_cmd->add_option("--p", p, "Prime")->required();
  verify_cmd->add_option("--nmax", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("text");

  CLI11_PARSE(app, argc, argv);

  try {
    prdim::BuildOptions options;
    options.seed = seed;
    if (!beta.empty()) options.beta_file = beta;

    if (fp_cmd->parsed()) {
      if (!prdim::is_prime(p)) throw prdim::DomainError("--p must be prime");
      return run_fp_table(p, n_max, format);
    }
    if (build_cmd->parsed()) {
      const auto built = prdim::build_group(spec, options);
      auto j = prdim::group_summary_json(built.group);
      j["spec"] = spec;
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (chartab_cmd->parsed()) {
      const auto built = prdim::build_group(spec, options);
      const auto table = prdim::character_table(built.group);
      if (format == "csv") {
        prdim::write_character_table_csv(std::cout, table);
      } else {
        std::cout << prdim::character_table_json(table).dump(2) << '\n';
      }
      return 0;
    }
    if (rdim_cmd->parsed()) {
      const auto built = prdim::build_group(spec, options);
      const auto prime = prdim::group_prime(built.group);
      const auto table = prdim::character_table(built.group);
      const auto result = brute_force ? prdim::min_faithful_dim_bruteforce(built.group, prime, table)
                                      : prdim::min_faithful_dim(built.group, prime, table);
      std::cout << prdim::rdim_json(result).dump(2) << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) {
      const auto rows = prdim::theorem_table(p, n_max, options);
      if (format == "json") {
        json out = json::array();
        for (const auto& r : rows) out.push_back(prdim::theorem_report_json(r));
        std::cout << out.dump(2) << '\n';
        std::cerr << prdim::kMaximalityNote << '\n';
      } else {
        prdim::write_theorem_reports_text(std::cout, rows);
      }
      const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
