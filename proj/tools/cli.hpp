#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "farey/franel.hpp"
#include "farey/totient.hpp"

namespace farey::cli {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,  // overflow or budget exceeded
  kFalsified = 3,    // an identity check failed
};

struct Config {
  std::int64_t table_limit = kDefaultTableLimit;
  std::int64_t term_budget = kDefaultTermBudget;
  std::string output_format = "csv";  // csv | json
  int precision_digits = 12;
};

// Runs one command. argv[0] is the program name. Output goes to out,
// diagnostics to err. Config defaults may be overridden by FAREY_* variables,
// which command-line flags override in turn.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
