// Command-line front end: census tables across the classification, per-type
// detail, and the verification suite.
//
// Exit codes: 0 success, 1 mathematical disagreement detected, 2 usage error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootcensus/cartan.hpp"
#include "rootcensus/errors.hpp"
#include "rootcensus/report.hpp"
#include "rootcensus/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

int cmd_info(const std::string& type_string) {
  const rootcensus::CartanType type = rootcensus::CartanType::parse(type_string);
  const rootcensus::CensusRow row = rootcensus::census_row(type);
  std::cout << rootcensus::render_info(row);
  return row.report.agree ? kExitOk : kExitDisagreement;
}

int cmd_table(int max_rank, const std::string& format_string) {
  const rootcensus::OutputFormat format = rootcensus::parse_format(format_string);
  std::vector<rootcensus::CensusRow> rows;
  for (rootcensus::CartanType type : rootcensus::admissible_types(max_rank))
    rows.push_back(rootcensus::census_row(type));
  std::cout << rootcensus::render_table(rows, format);
  for (const rootcensus::CensusRow& row : rows)
    if (!row.report.agree) return kExitDisagreement;
  return kExitOk;
}

int cmd_verify(int max_rank, bool deep) {
  const auto results = rootcensus::run_verification(max_rank, deep);
  int passed = 0, failed = 0, skipped = 0;
  for (const rootcensus::CheckResult& r : results) {
    switch (r.status) {
      case rootcensus::CheckStatus::Pass:
        ++passed;
        std::cout << "[PASS] " << r.name << "\n";
        break;
      case rootcensus::CheckStatus::Fail:
        ++failed;
        std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
        break;
      case rootcensus::CheckStatus::Skip:
        ++skipped;
        std::cout << "[SKIP] " << r.name << ": " << r.detail << "\n";
        break;
    }
  }
  std::cout << results.size() << " checks: " << passed << " passed, " << failed
            << " failed, " << skipped << " skipped\n";
  return failed == 0 ? kExitOk : kExitDisagreement;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact census of positive roots with full support"};
  app.require_subcommand(1);

  std::string type_string;
  auto* info = app.add_subcommand("info", "census and invariants for one type");
  info->add_option("type", type_string, "Cartan type, e.g. B4 or e8")->required();

  int table_max_rank = 8;
  std::string format_string = "markdown";
  auto* table = app.add_subcommand("table", "census table over all admissible types");
  table->add_option("--max-rank", table_max_rank, "largest rank to include (1..8)");
  table->add_option("--format", format_string, "markdown|csv|json");

  int verify_max_rank = 8;
  bool deep = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-rank", verify_max_rank, "largest rank to verify (1..8)");
  verify->add_flag("--deep", deep,
                   "also cross-check group orders, normalizer indices, restricted "
                   "characteristic polynomials and the ideal bijection (rank <= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(type_string);
    if (table->parsed()) {
      if (table_max_rank < 1 || table_max_rank > 8) {
        std::cerr << "--max-rank must be between 1 and 8\n";
        return kExitUsage;
      }
      return cmd_table(table_max_rank, format_string);
    }
    if (verify->parsed()) {
      if (verify_max_rank < 1 || verify_max_rank > 8) {
        std::cerr << "--max-rank must be between 1 and 8\n";
        return kExitUsage;
      }
      return cmd_verify(verify_max_rank, deep);
    }
  } catch (const rootcensus::InvalidTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  }
  return kExitUsage;
}
