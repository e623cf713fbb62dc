#pragma once

#include "horadam/identity.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace horadam {

/// The complete, immutable list of displayed identities for the six
/// built-in sequences: the mixed-pair and single-sequence three-term
/// families, every specialization derived from them (Catalan,
/// double-argument, product-difference, ...), the three-square identities,
/// and the geometric- and binomial-weighted sum families. Built once,
/// shared read-only.
class Catalog {
public:
  Catalog();

  const std::vector<IdentityTemplate>& entries() const { return entries_; }

  /// Lookup by canonical id or alias; nullptr when unknown.
  const IdentityTemplate* find(std::string_view id) const;

  std::vector<std::string> ids() const;

  /// Text table: id, label, kind, parameters, constraints, note.
  std::string manifest() const;

private:
  std::vector<IdentityTemplate> entries_;
  std::map<std::string, size_t, std::less<>> index_;
};

const Catalog& catalog();

} // namespace horadam
