#ifndef GALGEBRA_REPORT_HPP
#define GALGEBRA_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace galg {

/// One verification row: a named quantity with its reference and computed
/// values; pass iff they are equal as strings.
struct CheckRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

struct ReportOptions {
  std::int64_t p = 2;
  int n = 1;
  int k = 4;
  std::string format = "text";  // text | json
  std::uint64_t seed = 0;
  std::string group_file;  // when set, the group comes from a table file
};

struct CommandResult {
  int exit_code;       // 0 ok, 1 verification failure, 2 usage error
  std::string output;  // rendered report/table
};

/// Structure report for F_q[QD_2^k] (or a group loaded from a file): modular
/// regime for p = 2, semisimple regime for odd p. Exit 0 unless the input is
/// invalid.
CommandResult cmd_report(const ReportOptions& opt);

/// Same computation as cmd_report, with exit 1 when any check row fails.
CommandResult cmd_verify(const ReportOptions& opt);

/// Residue-class table for k in {4, 5}: one row per q with q mod m, T, l, c,
/// the S-multiset and the unit-group structure string.
/// Formats: text, csv, json.
CommandResult cmd_table(int k, const std::vector<std::int64_t>& qs, const std::string& format,
                        std::uint64_t seed = 0);

}  // namespace galg

#endif
