#include "horadam/grid.hpp"

#include "horadam/catalog.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

namespace horadam {

namespace {

using u128 = unsigned __int128;

uint64_t fnv1a(uint64_t h, std::string_view data) {
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t fnv1a(uint64_t h, long long v) {
  for (int i = 0; i < 8; ++i) {
    h ^= static_cast<unsigned char>(v >> (8 * i));
    h *= 1099511628211ull;
  }
  return h;
}

Interval symbol_interval(const IdentityTemplate& tmpl, char sym,
                         const GridSpec& grid) {
  const auto it = grid.per_symbol.find(sym);
  Interval iv;
  if (it != grid.per_symbol.end()) {
    iv = it->second;
  } else if (tmpl.k_role && tmpl.k_role->symbol == sym) {
    iv = tmpl.k_role->non_negative ? grid.k_binomial : grid.k_geometric;
  } else if (tmpl.is_sum()) {
    iv = grid.sum_offset_range;
  } else {
    iv = grid.default_range;
  }
  // The admissible sign of a summation limit wins over any range.
  if (tmpl.k_role && tmpl.k_role->symbol == sym && tmpl.k_role->non_negative)
    iv.lo = std::max(iv.lo, 0ll);
  return iv;
}

void validate(const GridSpec& grid) {
  if (grid.max_tuples < 1)
    throw std::invalid_argument("grid: max_tuples must be >= 1");
  for (const auto& [sym, iv] : grid.per_symbol) {
    if (iv.empty())
      throw std::invalid_argument(std::string("grid: empty interval for '") +
                                  sym + "'");
  }
  if (grid.default_range.empty() || grid.sum_offset_range.empty() ||
      grid.k_geometric.empty() || grid.k_binomial.empty())
    throw std::invalid_argument("grid: empty interval");
}

uint64_t downsample_salt(const IdentityTemplate& tmpl, const GridSpec& grid) {
  uint64_t h = 14695981039346656037ull;
  h = fnv1a(h, tmpl.id);
  for (const auto& [sym, iv] : grid.per_symbol) {
    h = fnv1a(h, std::string_view(&sym, 1));
    h = fnv1a(h, iv.lo);
    h = fnv1a(h, iv.hi);
  }
  for (const Interval& iv : {grid.default_range, grid.sum_offset_range,
                             grid.k_geometric, grid.k_binomial}) {
    h = fnv1a(h, iv.lo);
    h = fnv1a(h, iv.hi);
  }
  h = fnv1a(h, grid.max_tuples);
  return h;
}

void run_template(const IdentityTemplate& tmpl, const GridSpec& grid,
                  VerificationReport& report) {
  SuiteBlock block;
  block.id = tmpl.id;
  for (const char p : tmpl.parameters)
    block.symbols.emplace_back(1, p);

  const std::vector<char> free_syms = free_parameters(tmpl);
  std::vector<Interval> ivs;
  u128 total = 1;
  constexpr u128 kMaxSpace = u128(1) << 100;
  for (const char sym : free_syms) {
    const Interval iv = symbol_interval(tmpl, sym, grid);
    if (iv.empty()) {
      total = 0;
    } else {
      const auto size = static_cast<u128>(iv.size());
      if (total > kMaxSpace / size)
        throw std::invalid_argument("grid: tuple space too large for '" +
                                    tmpl.id + "'");
      total *= size;
    }
    ivs.push_back(iv);
  }

  const u128 cap = static_cast<u128>(grid.max_tuples);
  const bool sampled = total > cap;
  const u128 count = sampled ? cap : total;
  const u128 rotation =
      sampled ? static_cast<u128>(downsample_salt(tmpl, grid)) % total : 0;
  // floor(i*total/cap) without overflowing the 128-bit intermediate:
  // i*total = i*(cap*quot + rem).
  const u128 quot = sampled ? total / cap : 0;
  const u128 rem = sampled ? total % cap : 0;

  Assignment assignment;
  std::vector<int64_t> values(tmpl.parameters.size());
  for (u128 i = 0; i < count; ++i) {
    u128 idx = sampled ? (i * quot + (i * rem) / cap + rotation) % total : i;
    // Mixed-radix decode, first free symbol most significant.
    for (size_t s = free_syms.size(); s-- > 0;) {
      const u128 size = static_cast<u128>(ivs[s].size());
      assignment[free_syms[s]] =
          ivs[s].lo + static_cast<long long>(idx % size);
      idx /= size;
    }
    for (const auto& constraint : tmpl.constraints)
      assignment[constraint.defined] = constraint.expr.eval(assignment);

    const CheckOutcome outcome = check_instance(tmpl, assignment);
    for (size_t p = 0; p < tmpl.parameters.size(); ++p)
      values[p] = assignment.at(tmpl.parameters[p]);
    report.record(block, values, outcome);
  }
  report.blocks.push_back(std::move(block));
}

} // namespace

VerificationReport run_grid(const std::vector<std::string>& ids,
                            const GridSpec& grid) {
  validate(grid);

  const Catalog& cat = catalog();
  std::vector<const IdentityTemplate*> selected;
  if (ids.size() == 1 && ids[0] == "all") {
    for (const auto& t : cat.entries())
      selected.push_back(&t);
  } else {
    std::string unknown;
    std::set<const IdentityTemplate*> seen;
    for (const auto& id : ids) {
      const IdentityTemplate* t = cat.find(id);
      if (t == nullptr)
        unknown += (unknown.empty() ? "" : ", ") + id;
      else if (seen.insert(t).second)
        selected.push_back(t);
    }
    if (!unknown.empty())
      throw std::invalid_argument("unknown identity ids: " + unknown);
  }

  VerificationReport report;
  report.suite_id = "verify";
  const auto start = std::chrono::steady_clock::now();
  for (const IdentityTemplate* tmpl : selected)
    run_template(*tmpl, grid, report);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

} // namespace horadam
