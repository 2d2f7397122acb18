#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrlab::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kInvalidInput = 1, kBudgetExceeded = 2 };

/// Runs one subcommand. `args` excludes the program name. The JSON report
/// goes to `out`, the human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace irrlab::cli
