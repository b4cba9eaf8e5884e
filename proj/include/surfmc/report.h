#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "surfmc/dehn.h"
#include "surfmc/homology.h"

namespace surfmc {

inline constexpr char const *kVersion = "0.1.0";

struct CheckConfig {
  std::vector<int> genus_list;
  std::vector<std::string> checks;  // empty selects every check
  SearchCaps caps;
  std::uint64_t seed = 20240601;
  int word_order_max_genus = 4;
  bool record_timing = true;
};

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

/// A replayable conjugacy statement: v == witness * u * witness^-1, either
/// in the surface group or letter for letter in the free group.
struct Claim {
  std::string u;
  std::string v;
  bool free_group = false;
};

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::optional<std::string> witness;
  std::optional<IntMatrix> matrix;
  std::int64_t ms = 0;
  std::string detail;
  std::vector<Claim> claims;
};

struct GenusReport {
  int genus = 0;
  std::vector<CheckRecord> checks;
};

struct VerificationReport {
  std::string version = kVersion;
  CheckConfig config;
  std::vector<GenusReport> genera;
};

/// Throws std::invalid_argument on an empty genus list or a genus < 1.
void validate(CheckConfig const &config);

/// True if `name` is selected by the filter list (exact match or a dotted
/// prefix such as "sign" for "sign.eps1").
bool check_selected(std::vector<std::string> const &filter, std::string const &name);

/// Every check name run for a genus.
std::vector<std::string> check_names(int genus, int word_order_max_genus = 4);

GenusReport run_genus(int genus, CheckConfig const &config);

/// Runs every selected check for every genus; genera run concurrently and
/// the result is ordered by (genus, check name).
VerificationReport run_checks(CheckConfig const &config);

std::string report_json(VerificationReport const &report);
std::string format_table(VerificationReport const &report);

/// Writes the JSON document to `path` and the table to `table_out`.
void emit_report(VerificationReport const &report, std::filesystem::path const &path,
                 std::ostream &table_out);

/// 0 if every check passed, 1 if any failed, else 2 if any is inconclusive.
int exit_code(VerificationReport const &report);

}  // namespace surfmc
