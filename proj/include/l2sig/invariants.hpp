#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "l2sig/forms.hpp"

namespace l2sig {

/// Per-character inertia of a form, one entry per character in the order
/// returned by characters().
struct CharacterSignatureTable {
  FiniteAbelianGroup group;
  std::vector<std::pair<Character, SignatureTriple>> entries;

  const SignatureTriple& at(const Character& chi) const;
};

/// Computes the table; `jobs > 1` evaluates characters on worker threads.
/// The result does not depend on `jobs`.
CharacterSignatureTable signature_table(const HermitianGroupForm& form, unsigned jobs = 1);

long sig_trivial(const CharacterSignatureTable& table);
long sig_full(const CharacterSignatureTable& table);
Rational sig_l2(const CharacterSignatureTable& table);
Rational alpha(const CharacterSignatureTable& table);
/// sum_chi chi(g) * sig_chi, a real element of Q(zeta_e).
CycNumber sig_g(const CharacterSignatureTable& table, const GroupElement& g);

long sig_trivial(const HermitianGroupForm& form);
long sig_full(const HermitianGroupForm& form);
Rational sig_l2(const HermitianGroupForm& form);
Rational alpha(const HermitianGroupForm& form);
CycNumber sig_g(const HermitianGroupForm& form, const GroupElement& g);

/// sig_full - 2 sig_trivial for forms over Z_2 (UsageError otherwise).
long tau_z2(const CharacterSignatureTable& table);
long tau_z2(const HermitianGroupForm& form);

struct CharSumIdentity {
  CycNumber lhs;  // sum over g != e of sig_g
  long rhs = 0;   // |G| sig_trivial - sig_full
  bool lhs_is_integer = false;
  bool equal = false;
};

CharSumIdentity char_sum_identity(const CharacterSignatureTable& table);
CharSumIdentity char_sum_identity(const HermitianGroupForm& form);

struct AtiyahCheck {
  Rational alpha;
  Rational sig_l2;
  long base_signature = 0;
  bool passed = false;
};

/// Induces a rational symmetric form from the trivial group into `group` and
/// checks alpha = 0 and sig_l2 = signature of the base form.
AtiyahCheck atiyah_check(const RationalMatrix& base, const FiniteAbelianGroup& group);

struct InvariantReport {
  long sig_trivial = 0;
  long sig_full = 0;
  Rational sig_l2;
  Rational alpha;
  CharacterSignatureTable table;
  /// Optional bounding multiplicity r; tau_l2 = alpha / r.
  std::optional<Rational> scale;

  std::optional<Rational> tau_l2() const;
};

InvariantReport invariant_report(const HermitianGroupForm& form, std::optional<Rational> scale = std::nullopt,
                                 unsigned jobs = 1);

}  // namespace l2sig
