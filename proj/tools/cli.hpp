#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "negacode/family.hpp"
#include "negacode/gf_oracle.hpp"

namespace negacode::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kMismatch = 2,
  kBudgetExceeded = 3,
};

enum class Format { table, json, csv };

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kBudgetEnvVar = "NEGACODE_BUDGET";
inline constexpr const char* kCsvHeader = "m,a,xi,alpha,case,branch,q,n,k,d,c,eaqmds,match";

nlohmann::json to_json(const FamilyReport& report);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
FamilyReport report_from_json(const nlohmann::json& j);

std::string csv_row(const FamilyReport& report);

/// NEGACODE_BUDGET when set to a positive integer, otherwise `fallback`.
u64 budget_from_env(u64 fallback = kDefaultBruteForceBudget);

int cmd_construct(const FamilyInput& input, Format format, std::ostream& out, std::ostream& err);

int cmd_table(u64 m_max, u64 xi_max, bool published_only, Format format, std::ostream& out,
              std::ostream& err);

int cmd_decompose(u64 n, u64 q, std::span<const Residue> reps, Format format,
                  std::ostream& out, std::ostream& err);

int cmd_oracle(u64 n, u64 q, std::span<const Residue> reps, u64 budget, Format format,
               std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negacode::cli
