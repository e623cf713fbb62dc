#pragma once

#include "horadam/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace horadam {

struct Interval {
  long long lo = 0;
  long long hi = 0;

  long long size() const { return hi - lo + 1; }
  bool empty() const { return hi < lo; }
};

/// Ranges for grid verification. per_symbol overrides win; otherwise sum
/// identities range their offsets over sum_offset_range and their limit k
/// over k_geometric / k_binomial, everything else uses default_range. When
/// a template's constrained tuple space exceeds max_tuples, a deterministic
/// subset — a pure function of (identity id, grid, max_tuples) — is
/// checked instead.
struct GridSpec {
  std::map<char, Interval> per_symbol;
  Interval default_range{-6, 6};
  Interval sum_offset_range{-4, 4};
  Interval k_geometric{-5, 10};
  Interval k_binomial{0, 10};
  long long max_tuples = 20000;
};

/// Checks the named catalog entries (or all of them for ids == {"all"})
/// over the grid. Deterministic for identical inputs. Unknown ids are
/// rejected, all of them named in the exception.
VerificationReport run_grid(const std::vector<std::string>& ids,
                            const GridSpec& grid);

} // namespace horadam
