#pragma once

#include "horadam/checks.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace horadam {

enum class ReportFormat { Jsonl, SummaryText };

/// Outcomes of every check run under one id. All rows share the block's
/// symbol schema; assignments are stored flat, one row of
/// symbols.size() values per check.
struct SuiteBlock {
  std::string id;
  std::vector<std::string> symbols;
  std::vector<int64_t> values;
  std::vector<int8_t> kinds;   // 0 Holds, 1 Fails, 2 Skipped
  std::vector<int8_t> reasons; // parallel; -1 unless skipped
  std::map<size_t, std::pair<std::string, std::string>> fail_sides;

  size_t rows() const { return kinds.size(); }
};

struct FailureRecord {
  std::string id;
  std::vector<std::pair<std::string, long long>> assignment;
  std::string lhs;
  std::string rhs;
};

/// Aggregated outcomes of a grid or fuzz run. The totals always sum to the
/// number of checks executed; a suite passes iff fails == 0.
struct VerificationReport {
  std::string suite_id;
  long long holds = 0;
  long long fails = 0;
  long long skipped = 0;
  std::map<std::string, long long> skipped_by_reason;
  std::vector<FailureRecord> failures;
  std::optional<uint64_t> seed;
  double elapsed_seconds = 0.0;
  std::vector<SuiteBlock> blocks;

  long long checks() const { return holds + fails + skipped; }
  bool passed() const { return fails == 0; }

  /// Appends one outcome to a block and updates the totals.
  void record(SuiteBlock& block, const std::vector<int64_t>& values,
              const CheckOutcome& outcome);
};

/// Serializes a report.
///
/// Jsonl: one record per check — {"id", "assignment", "outcome", "lhs"?,
/// "rhs"?, "reason"?} — sorted by (id, assignment), plus a trailing totals
/// record. Identical runs produce byte-identical output; elapsed wall time
/// is deliberately not serialized. lhs/rhs are normalized "n/d" strings.
///
/// SummaryText: one line per id with Holds/Skipped/Fails tallies, then
/// totals, elapsed and the verdict.
void emit_report(const VerificationReport& report, ReportFormat format,
                 std::ostream& out);
std::string emit_report_string(const VerificationReport& report,
                               ReportFormat format);

} // namespace horadam
