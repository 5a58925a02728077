#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "l2sig/dense.hpp"
#include "l2sig/group.hpp"

namespace Eigen {
template <>
struct NumTraits<l2sig::GroupRingElement> : l2sig::ExactNumTraits<l2sig::GroupRingElement> {};
}  // namespace Eigen

namespace l2sig {

/// Square matrix over Q[G], hermitian under the involution g -> g^-1.
/// Singular matrices are allowed: a form on a projective summand e*Q[G]^n is
/// stored as the extended-by-zero form on the free module.
struct HermitianGroupForm {
  FiniteAbelianGroup group;
  DenseMatrix<GroupRingElement> matrix;

  std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }

  static HermitianGroupForm zero_dimensional(FiniteAbelianGroup group);
  static HermitianGroupForm one_by_one(FiniteAbelianGroup group, GroupRingElement entry);
  /// Rational matrix viewed as scalars times the identity element.
  static HermitianGroupForm from_rational(FiniteAbelianGroup group, const RationalMatrix& m);

  friend bool operator==(const HermitianGroupForm& a, const HermitianGroupForm& b);
};

/// The form [1] on the projective module Q (trivial action): the 1x1 matrix
/// [(1/n) sum_g g].
HermitianGroupForm projective_unit_form(const FiniteAbelianGroup& group);

/// First (i, j) with A_ij != involution(A_ji), if any.
std::optional<std::pair<std::size_t, std::size_t>> validate_hermitian(const HermitianGroupForm& form);

/// Entrywise image under a character. Throws DomainError on non-hermitian input.
CycMatrix isotypic_matrix(const HermitianGroupForm& form, const Character& chi);

/// Inertia after hermitian congruence diagonalization. Throws DomainError on
/// non-hermitian input.
SignatureTriple signature_scalar(const CycMatrix& m);
SignatureTriple signature_scalar(const RationalMatrix& m);

/// Block diagonal sum; groups must agree (UsageError otherwise).
HermitianGroupForm direct_sum(const HermitianGroupForm& a, const HermitianGroupForm& b);

/// Injective homomorphism H -> G given by the images of the standard
/// generators of H.
class GroupEmbedding {
 public:
  /// Throws DomainError unless the images define an injective homomorphism.
  GroupEmbedding(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<GroupElement> generator_images);

  /// Z_m -> Z_n (m | n) by 1 -> n/m, factorwise for equal ranks, or the
  /// trivial group into anything. Throws UsageError when no such map applies.
  static GroupEmbedding canonical(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const std::vector<GroupElement>& generator_images() const { return images_; }
  GroupElement operator()(const GroupElement& h) const;
  GroupRingElement operator()(const GroupRingElement& x) const;

 private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::vector<GroupElement> images_;
};

/// Extension of scalars Q[G] (x)_{Q[H]} V: the same rank, entries pushed
/// along the embedding.
HermitianGroupForm induce(const HermitianGroupForm& form, const GroupEmbedding& embedding);

}  // namespace l2sig
