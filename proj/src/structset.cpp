#include "l2sig/structset.hpp"

#include <algorithm>

#include "l2sig/errors.hpp"
#include "l2sig/invariants.hpp"

namespace l2sig {

std::vector<FamilyMember> generate_family(std::int64_t n, std::size_t count) {
  if (n < 2) throw UsageError("family needs n >= 2; alpha vanishes on the trivial group");
  const auto group = FiniteAbelianGroup::cyclic(n);
  const auto unit = projective_unit_form(group);
  std::vector<FamilyMember> out;
  HermitianGroupForm sum = HermitianGroupForm::zero_dimensional(group);
  for (std::size_t k = 1; k <= count; ++k) {
    sum = direct_sum(sum, unit);
    out.push_back({k, sum, alpha(sum)});
  }
  return out;
}

ManifoldLabel act(const ManifoldLabel& base, const HermitianGroupForm& form, std::string name) {
  if (!(base.group == form.group)) throw UsageError("acting form is over a different group than the label");
  return {std::move(name), base.group, base.tau_offset - alpha(form)};
}

bool distinguish(const ManifoldLabel& a, const ManifoldLabel& b) {
  if (!(a.group == b.group)) throw UsageError("labels are over different groups");
  return a.tau_offset != b.tau_offset;
}

Ledger::Ledger(std::string base_name, FiniteAbelianGroup group) : group_(std::move(group)) {
  entries_.push_back({ManifoldLabel{std::move(base_name), group_, Rational(0)}, std::nullopt, std::nullopt, std::nullopt});
}

const ManifoldLabel& Ledger::label(const std::string& name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const LedgerEntry& e) { return e.label.name == name; });
  if (it == entries_.end()) throw UsageError("unknown label '" + name + "'");
  return it->label;
}

const ManifoldLabel& Ledger::act(const std::string& parent, const HermitianGroupForm& form, const std::string& name) {
  const bool taken = std::any_of(entries_.begin(), entries_.end(), [&](const LedgerEntry& e) { return e.label.name == name; });
  if (taken) throw UsageError("label '" + name + "' already exists");
  const ManifoldLabel& base = label(parent);
  ManifoldLabel next = l2sig::act(base, form, name);
  const Rational a = base.tau_offset - next.tau_offset;
  entries_.push_back({std::move(next), parent, form, a});
  return entries_.back().label;
}

bool Ledger::distinguish(const std::string& a, const std::string& b) const {
  return l2sig::distinguish(label(a), label(b));
}

}  // namespace l2sig
