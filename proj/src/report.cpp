#include "horadam/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace horadam {

namespace {

const char* kind_name(int8_t kind) {
  switch (kind) {
  case 0: return "Holds";
  case 1: return "Fails";
  default: return "Skipped";
  }
}

int8_t kind_code(const CheckOutcome& outcome) {
  switch (outcome.kind()) {
  case CheckOutcome::Kind::Holds: return 0;
  case CheckOutcome::Kind::Fails: return 1;
  default: return 2;
  }
}

} // namespace

void VerificationReport::record(SuiteBlock& block,
                                const std::vector<int64_t>& values,
                                const CheckOutcome& outcome) {
  const size_t row = block.rows();
  block.values.insert(block.values.end(), values.begin(), values.end());
  block.kinds.push_back(kind_code(outcome));
  int8_t reason = -1;
  switch (outcome.kind()) {
  case CheckOutcome::Kind::Holds:
    ++holds;
    break;
  case CheckOutcome::Kind::Fails: {
    ++fails;
    block.fail_sides[row] = {outcome.lhs().str(), outcome.rhs().str()};
    FailureRecord fr;
    fr.id = block.id;
    for (size_t i = 0; i < block.symbols.size(); ++i)
      fr.assignment.emplace_back(block.symbols[i], values[i]);
    fr.lhs = outcome.lhs().str();
    fr.rhs = outcome.rhs().str();
    failures.push_back(std::move(fr));
    break;
  }
  case CheckOutcome::Kind::Skipped:
    ++skipped;
    reason = outcome.reason() == SkipReason::ZeroDenominator ? 0 : 1;
    ++skipped_by_reason[std::string(to_string(outcome.reason()))];
    break;
  }
  block.reasons.push_back(reason);
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<size_t> sorted_rows(const SuiteBlock& block) {
  const size_t nsym = block.symbols.size();
  std::vector<size_t> order(block.rows());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    for (size_t i = 0; i < nsym; ++i) {
      const int64_t vx = block.values[x * nsym + i];
      const int64_t vy = block.values[y * nsym + i];
      if (vx != vy)
        return vx < vy;
    }
    return x < y;
  });
  return order;
}

std::vector<const SuiteBlock*> sorted_blocks(const VerificationReport& report) {
  std::vector<const SuiteBlock*> out;
  out.reserve(report.blocks.size());
  for (const auto& b : report.blocks)
    out.push_back(&b);
  std::sort(out.begin(), out.end(),
            [](const SuiteBlock* x, const SuiteBlock* y) { return x->id < y->id; });
  return out;
}

void emit_jsonl(const VerificationReport& report, std::ostream& out) {
  for (const SuiteBlock* block : sorted_blocks(report)) {
    const size_t nsym = block->symbols.size();
    for (const size_t row : sorted_rows(*block)) {
      ordered_json rec;
      rec["id"] = block->id;
      ordered_json asg = ordered_json::object();
      for (size_t i = 0; i < nsym; ++i)
        asg[block->symbols[i]] = block->values[row * nsym + i];
      rec["assignment"] = std::move(asg);
      rec["outcome"] = kind_name(block->kinds[row]);
      if (block->kinds[row] == 1) {
        const auto& sides = block->fail_sides.at(row);
        rec["lhs"] = sides.first;
        rec["rhs"] = sides.second;
      } else if (block->kinds[row] == 2) {
        rec["reason"] = block->reasons[row] == 0
                            ? to_string(SkipReason::ZeroDenominator)
                            : to_string(SkipReason::PreconditionUnmet);
      }
      out << rec.dump() << '\n';
    }
  }
  ordered_json totals;
  totals["suite"] = report.suite_id;
  totals["totals"] = {{"Holds", report.holds},
                      {"Fails", report.fails},
                      {"Skipped", report.skipped}};
  ordered_json by_reason = ordered_json::object();
  for (const auto& [reason, count] : report.skipped_by_reason)
    by_reason[reason] = count;
  totals["skippedByReason"] = std::move(by_reason);
  totals["checks"] = report.checks();
  if (report.seed)
    totals["seed"] = *report.seed;
  out << totals.dump() << '\n';
}

void emit_summary(const VerificationReport& report, std::ostream& out) {
  for (const SuiteBlock* block : sorted_blocks(report)) {
    long long h = 0, f = 0, s = 0, zero_den = 0;
    for (size_t row = 0; row < block->rows(); ++row) {
      switch (block->kinds[row]) {
      case 0: ++h; break;
      case 1: ++f; break;
      default:
        ++s;
        if (block->reasons[row] == 0)
          ++zero_den;
        break;
      }
    }
    out << block->id << ": Holds=" << h << " Skipped=" << s;
    if (s > 0)
      out << " (ZeroDenominator=" << zero_den
          << " PreconditionUnmet=" << (s - zero_den) << ")";
    out << " Fails=" << f << '\n';
  }
  for (const auto& fr : report.failures) {
    out << "FAIL " << fr.id << " at {";
    for (size_t i = 0; i < fr.assignment.size(); ++i)
      out << (i ? ", " : "") << fr.assignment[i].first << "="
          << fr.assignment[i].second;
    out << "}: lhs=" << fr.lhs << " rhs=" << fr.rhs << '\n';
  }
  out << "totals: checks=" << report.checks() << " Holds=" << report.holds
      << " Fails=" << report.fails << " Skipped=" << report.skipped << '\n';
  if (report.seed)
    out << "seed: " << *report.seed << '\n';
  out << "elapsed: " << report.elapsed_seconds << "s\n";
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
}

} // namespace

void emit_report(const VerificationReport& report, ReportFormat format,
                 std::ostream& out) {
  if (format == ReportFormat::Jsonl)
    emit_jsonl(report, out);
  else
    emit_summary(report, out);
}

std::string emit_report_string(const VerificationReport& report,
                               ReportFormat format) {
  std::ostringstream os;
  emit_report(report, format, os);
  return os.str();
}

} // namespace horadam
