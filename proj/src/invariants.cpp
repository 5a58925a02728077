#include "l2sig/invariants.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "l2sig/errors.hpp"

namespace l2sig {

const SignatureTriple& CharacterSignatureTable::at(const Character& chi) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), chi,
                             [](const auto& entry, const Character& c) { return entry.first < c; });
  if (it == entries.end() || !(it->first == chi)) throw UsageError("character not in table");
  return it->second;
}

CharacterSignatureTable signature_table(const HermitianGroupForm& form, unsigned jobs) {
  if (auto bad = validate_hermitian(form)) {
    throw DomainError("form is not hermitian at (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  }
  const auto chars = characters(form.group);
  CharacterSignatureTable table{form.group, {}};
  table.entries.resize(chars.size());

  auto work = [&](std::size_t i) {
    CycMatrix m(form.matrix.rows(), form.matrix.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = apply_character(form.group, chars[i], form.matrix(r, c));
    }
    table.entries[i] = {chars[i], inertia(std::move(m))};
  };

  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(chars.size(), 1)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < chars.size(); ++i) work(i);
    return table;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < chars.size(); i += jobs) work(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

long sig_trivial(const CharacterSignatureTable& table) {
  return table.at(trivial_character(table.group)).signature();
}

long sig_full(const CharacterSignatureTable& table) {
  long total = 0;
  for (auto& [chi, triple] : table.entries) total += triple.signature();
  return total;
}

Rational sig_l2(const CharacterSignatureTable& table) { return ratio(sig_full(table), table.group.order()); }

Rational alpha(const CharacterSignatureTable& table) { return sig_l2(table) - sig_trivial(table); }

CycNumber sig_g(const CharacterSignatureTable& table, const GroupElement& g) {
  const auto e = static_cast<unsigned>(table.group.exponent());
  if (!table.group.contains(g)) throw UsageError("element does not belong to the group");
  std::vector<Rational> powers(e);
  for (auto& [chi, triple] : table.entries) powers[static_cast<std::size_t>(char_exponent(chi, g, table.group))] += triple.signature();
  return CycNumber::from_powers(e, powers);
}

long sig_trivial(const HermitianGroupForm& form) {
  return signature_scalar(isotypic_matrix(form, trivial_character(form.group))).signature();
}

long sig_full(const HermitianGroupForm& form) { return sig_full(signature_table(form)); }
Rational sig_l2(const HermitianGroupForm& form) { return sig_l2(signature_table(form)); }
Rational alpha(const HermitianGroupForm& form) { return alpha(signature_table(form)); }
CycNumber sig_g(const HermitianGroupForm& form, const GroupElement& g) { return sig_g(signature_table(form), g); }

long tau_z2(const CharacterSignatureTable& table) {
  if (table.group.factors() != std::vector<std::int64_t>{2}) throw UsageError("tau_z2 requires the group Z_2");
  return sig_full(table) - 2 * sig_trivial(table);
}

long tau_z2(const HermitianGroupForm& form) {
  if (form.group.factors() != std::vector<std::int64_t>{2}) throw UsageError("tau_z2 requires the group Z_2");
  return tau_z2(signature_table(form));
}

CharSumIdentity char_sum_identity(const CharacterSignatureTable& table) {
  const auto& group = table.group;
  CharSumIdentity out;
  out.lhs = CycNumber(Rational(0), static_cast<unsigned>(group.exponent()));
  const auto identity = group.identity();
  for (auto& g : group.elements()) {
    if (g == identity) continue;
    out.lhs += sig_g(table, g);
  }
  out.rhs = group.order() * sig_trivial(table) - sig_full(table);
  out.lhs_is_integer = out.lhs.is_rational() && out.lhs.rational_part().get_den() == 1;
  out.equal = out.lhs_is_integer && out.lhs.rational_part() == out.rhs;
  return out;
}

CharSumIdentity char_sum_identity(const HermitianGroupForm& form) { return char_sum_identity(signature_table(form)); }

AtiyahCheck atiyah_check(const RationalMatrix& base, const FiniteAbelianGroup& group) {
  const SignatureTriple base_inertia = signature_scalar(base);
  const auto trivial = FiniteAbelianGroup();
  const auto induced = induce(HermitianGroupForm::from_rational(trivial, base), GroupEmbedding::canonical(trivial, group));
  const auto table = signature_table(induced);
  AtiyahCheck out;
  out.alpha = alpha(table);
  out.sig_l2 = sig_l2(table);
  out.base_signature = base_inertia.signature();
  out.passed = out.alpha == 0 && out.sig_l2 == out.base_signature;
  return out;
}

std::optional<Rational> InvariantReport::tau_l2() const {
  if (!scale) return std::nullopt;
  return alpha / *scale;
}

InvariantReport invariant_report(const HermitianGroupForm& form, std::optional<Rational> scale, unsigned jobs) {
  if (scale && *scale <= 0) throw UsageError("scale must be a positive rational");
  InvariantReport r;
  r.table = signature_table(form, jobs);
  r.sig_trivial = sig_trivial(r.table);
  r.sig_full = sig_full(r.table);
  r.sig_l2 = sig_l2(r.table);
  r.alpha = alpha(r.table);
  r.scale = std::move(scale);
  return r;
}

}  // namespace l2sig
