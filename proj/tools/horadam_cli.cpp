// Command-line driver: exact term queries, grid verification of the
// identity catalog, seeded fuzzing of the general checkers, and the
// catalog manifest. Exit code 0 on pass, 1 when any check Fails, 2 on
// usage errors.

#include "horadam/catalog.hpp"
#include "horadam/fuzz.hpp"
#include "horadam/grid.hpp"
#include "horadam/report.hpp"
#include "horadam/sequence.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace horadam;

std::optional<Interval> parse_interval(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    return std::nullopt;
  try {
    Interval iv;
    iv.lo = std::stoll(text.substr(0, dots));
    iv.hi = std::stoll(text.substr(dots + 2));
    if (iv.empty())
      return std::nullopt;
    return iv;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SequenceSpec parse_sequence(const std::string& text) {
  if (is_builtin_name(text))
    return builtin(text);
  std::vector<std::string> parts;
  std::string cur;
  for (const char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw std::invalid_argument(
        "sequence must be a builtin label (F L J j P Q) or p,q,w0,w1");
  const auto w0 = Rational::parse(parts[2]);
  const auto w1 = Rational::parse(parts[3]);
  if (!w0 || !w1)
    throw std::invalid_argument("unparsable seed in '" + text + "'");
  return SequenceSpec(RecurrencePair(BigInt(parts[0]), BigInt(parts[1])), *w0,
                      *w1);
}

int write_report(const VerificationReport& report, const std::string& format,
                 const std::string& out_path) {
  const ReportFormat fmt =
      format == "jsonl" ? ReportFormat::Jsonl : ReportFormat::SummaryText;
  if (out_path.empty()) {
    emit_report(report, fmt, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot open output file: " + out_path);
    emit_report(report, fmt, out);
    if (!out.good())
      throw std::runtime_error("write failed: " + out_path);
  }
  return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of second-order recurrence identities"};
  app.require_subcommand(1);

  auto* term_cmd =
      app.add_subcommand("term", "print one sequence term exactly");
  std::string seq_text;
  long long term_index = 0;
  term_cmd->add_option("sequence", seq_text,
                       "builtin label (F L J j P Q) or p,q,w0,w1")
      ->required();
  term_cmd->add_option("n", term_index, "term index (any integer)")
      ->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "check catalog identities over a grid");
  std::string ids_csv = "all";
  std::vector<std::string> range_args;
  std::string k_arg;
  long long max_tuples = 20000;
  std::string format = "summary";
  std::string out_path;
  verify_cmd->add_option("--ids", ids_csv,
                         "comma-separated identity ids, or 'all'");
  verify_cmd->add_option("--range", range_args,
                         "symbol range as sym=lo..hi (repeatable)");
  verify_cmd->add_option("--k", k_arg, "sum-limit range as lo..hi");
  verify_cmd->add_option("--max-tuples", max_tuples,
                         "cap on enumerated tuples per identity");
  verify_cmd->add_option("--format", format, "jsonl or summary")
      ->check(CLI::IsMember({"jsonl", "summary"}));
  verify_cmd->add_option("--out", out_path, "write the report to a file");

  auto* fuzz_cmd =
      app.add_subcommand("fuzz", "fuzz the general checkers, seeded");
  uint64_t seed = 0;
  long long count = 0;
  long long coeff_bound = 5;
  long long index_bound = 8;
  std::string fuzz_format = "summary";
  std::string fuzz_out;
  fuzz_cmd->add_option("--seed", seed, "PRNG seed")->required();
  fuzz_cmd->add_option("--count", count, "number of draws")->required();
  fuzz_cmd->add_option("--coeff-bound", coeff_bound,
                       "bound on |p|, |q| and seed magnitudes");
  fuzz_cmd->add_option("--index-bound", index_bound,
                       "bound on offset magnitudes");
  fuzz_cmd->add_option("--format", fuzz_format, "jsonl or summary")
      ->check(CLI::IsMember({"jsonl", "summary"}));
  fuzz_cmd->add_option("--out", fuzz_out, "write the report to a file");

  auto* catalog_cmd =
      app.add_subcommand("catalog", "list the identity catalog");
  bool manifest = false;
  catalog_cmd->add_flag("--manifest", manifest,
                        "print the full manifest table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (term_cmd->parsed()) {
      const SequenceSpec spec = parse_sequence(seq_text);
      // The memoized path fills a contiguous window; the matrix power is
      // the better tool for one far-away index.
      const bool far = term_index > 256 || term_index < -256;
      std::cout << (far ? term_fast(spec, term_index)
                        : term(spec, term_index))
                       .str()
                << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      GridSpec grid;
      grid.max_tuples = max_tuples;
      for (const auto& arg : range_args) {
        const auto eq = arg.find('=');
        const auto iv =
            eq == std::string::npos
                ? std::nullopt
                : parse_interval(arg.substr(eq + 1));
        if (eq != 1 || !iv)
          throw std::invalid_argument("bad --range '" + arg +
                                      "', expected sym=lo..hi");
        grid.per_symbol[arg[0]] = *iv;
      }
      if (!k_arg.empty()) {
        const auto iv = parse_interval(k_arg);
        if (!iv)
          throw std::invalid_argument("bad --k '" + k_arg +
                                      "', expected lo..hi");
        grid.k_geometric = *iv;
        grid.k_binomial = *iv; // clamped to >= 0 per identity
      }
      std::vector<std::string> ids;
      std::string cur;
      for (const char ch : ids_csv) {
        if (ch == ',') {
          ids.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      ids.push_back(cur);
      return write_report(run_grid(ids, grid), format, out_path);
    }

    if (fuzz_cmd->parsed())
      return write_report(fuzz_general(seed, count, coeff_bound, index_bound),
                          fuzz_format, fuzz_out);

    // catalog
    if (manifest) {
      std::cout << catalog().manifest();
    } else {
      for (const auto& id : catalog().ids())
        std::cout << id << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
