#pragma once

// Command-line front end: argument parsing, tsv/jsonl reporting and the
// golden-table comparison harness. run() is the whole program minus main.

#include <iosfwd>
#include <string>
#include <vector>

#include "neumaier/feasibility.hpp"
#include "neumaier/search.hpp"

namespace neumaier::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Thread count from NEUMAIER_THREADS, else the hardware concurrency.
unsigned default_threads();

struct GoldenDiff {
  std::vector<std::string> lines;
  bool empty() const { return lines.empty(); }
};

/// Row-level diff of enumerate_feasible output against a table1-style file.
/// Throws InputError when the file cannot be read or parsed.
GoldenDiff compare_table1(const std::vector<feasibility::FeasibleRow>& rows, const std::string& golden_path);

/// Row-level diff of search rows for q against the rows of a table2-style
/// file with the same q, a-values compared by subgroup.
GoldenDiff compare_search(const std::vector<search::SearchRow>& rows, std::uint64_t q, const std::string& golden_path);

struct GoldenSearchRow {
  std::uint64_t q, p, a, t, v, k, lambda, s;
  std::string source;
};

std::vector<GoldenSearchRow> read_search_golden(const std::string& golden_path);

/// "yes", "no" or "unknown" as reported for a feasible row.
std::string exists_column(const feasibility::FeasibleRow& row);
/// First reason family (COR32, THM33) or "-".
std::string flag_column(const feasibility::FeasibleRow& row);

}  // namespace neumaier::cli
