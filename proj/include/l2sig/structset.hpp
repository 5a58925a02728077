#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2sig/forms.hpp"

namespace l2sig {

/// A nominal manifold in the structure set ledger. Only its tau offset
/// relative to the base label is tracked.
struct ManifoldLabel {
  std::string name;
  FiniteAbelianGroup group;
  Rational tau_offset;
};

struct FamilyMember {
  std::size_t multiplicity = 0;
  HermitianGroupForm form;
  Rational alpha;
};

/// k-fold sums of the projective unit form over Z_n for k = 1..count;
/// alpha of the k-th member is k (1/n - 1). UsageError when n < 2.
std::vector<FamilyMember> generate_family(std::int64_t n, std::size_t count);

/// tau(M) - tau(M') = alpha(V), so the new offset is base.tau_offset - alpha(V).
ManifoldLabel act(const ManifoldLabel& base, const HermitianGroupForm& form, std::string name);

/// True iff the tau offsets differ. UsageError when the groups differ.
bool distinguish(const ManifoldLabel& a, const ManifoldLabel& b);

struct LedgerEntry {
  ManifoldLabel label;
  std::optional<std::string> parent;
  std::optional<HermitianGroupForm> acting_form;
  std::optional<Rational> alpha;
};

/// Append-only record of labels produced by acting on a base manifold.
class Ledger {
 public:
  Ledger(std::string base_name, FiniteAbelianGroup group);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  const ManifoldLabel& label(const std::string& name) const;

  /// UsageError on duplicate names or unknown parents.
  const ManifoldLabel& act(const std::string& parent, const HermitianGroupForm& form, const std::string& name);
  bool distinguish(const std::string& a, const std::string& b) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace l2sig
