#include "l2sig/forms.hpp"

#include <set>
#include <string>

#include "l2sig/errors.hpp"

namespace l2sig {

HermitianGroupForm HermitianGroupForm::zero_dimensional(FiniteAbelianGroup group) {
  return {std::move(group), DenseMatrix<GroupRingElement>(0, 0)};
}

HermitianGroupForm HermitianGroupForm::one_by_one(FiniteAbelianGroup group, GroupRingElement entry) {
  DenseMatrix<GroupRingElement> m(1, 1);
  m(0, 0) = std::move(entry);
  return {std::move(group), std::move(m)};
}

HermitianGroupForm HermitianGroupForm::from_rational(FiniteAbelianGroup group, const RationalMatrix& m) {
  DenseMatrix<GroupRingElement> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = GroupRingElement::scalar(group, m(i, j));
  }
  return {std::move(group), std::move(out)};
}

bool operator==(const HermitianGroupForm& a, const HermitianGroupForm& b) {
  if (!(a.group == b.group) || a.matrix.rows() != b.matrix.rows()) return false;
  for (Eigen::Index i = 0; i < a.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.matrix.cols(); ++j) {
      if (!(a.matrix(i, j) == b.matrix(i, j))) return false;
    }
  }
  return true;
}

HermitianGroupForm projective_unit_form(const FiniteAbelianGroup& group) {
  return HermitianGroupForm::one_by_one(group, GroupRingElement::averaging_idempotent(group));
}

std::optional<std::pair<std::size_t, std::size_t>> validate_hermitian(const HermitianGroupForm& form) {
  const auto& m = form.matrix;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (!(m(i, j) == ring_involution(form.group, m(j, i)))) {
        return std::pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      }
    }
  }
  return std::nullopt;
}

CycMatrix isotypic_matrix(const HermitianGroupForm& form, const Character& chi) {
  if (auto bad = validate_hermitian(form)) {
    throw DomainError("form is not hermitian at (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  }
  CycMatrix out(form.matrix.rows(), form.matrix.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = apply_character(form.group, chi, form.matrix(i, j));
  }
  return out;
}

SignatureTriple signature_scalar(const CycMatrix& m) {
  if (auto bad = hermitian_violation(m)) {
    throw DomainError("matrix is not hermitian at (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  }
  return inertia(m);
}

SignatureTriple signature_scalar(const RationalMatrix& m) {
  if (auto bad = hermitian_violation(m)) {
    throw DomainError("matrix is not symmetric at (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  }
  return inertia(m);
}

HermitianGroupForm direct_sum(const HermitianGroupForm& a, const HermitianGroupForm& b) {
  if (!(a.group == b.group)) throw UsageError("direct sum of forms over different groups");
  const Eigen::Index n = a.matrix.rows(), m = b.matrix.rows();
  DenseMatrix<GroupRingElement> out(n + m, n + m);
  out.topLeftCorner(n, n) = a.matrix;
  out.bottomRightCorner(m, m) = b.matrix;
  return {a.group, std::move(out)};
}

GroupEmbedding::GroupEmbedding(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank()) throw DomainError("embedding needs one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!target_.contains(images_[i])) throw DomainError("generator image is not an element of the target group");
    if (!(target_.power(images_[i], source_.factors()[i]) == target_.identity())) {
      throw DomainError("generator images do not define a homomorphism");
    }
  }
  std::set<GroupElement> seen;
  for (auto& h : source_.elements()) {
    if (!seen.insert((*this)(h)).second) throw DomainError("embedding is not injective");
  }
}

GroupEmbedding GroupEmbedding::canonical(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
  std::vector<GroupElement> images;
  if (source.is_trivial()) return GroupEmbedding(source, target, {});
  if (source.rank() != target.rank()) throw UsageError("no canonical embedding between groups of different rank");
  for (std::size_t i = 0; i < source.rank(); ++i) {
    const auto d = source.factors()[i], big = target.factors()[i];
    if (big % d != 0) throw UsageError("no canonical embedding: factor does not divide");
    images.push_back(target.power(target.generator(i), big / d));
  }
  return GroupEmbedding(source, target, std::move(images));
}

GroupElement GroupEmbedding::operator()(const GroupElement& h) const {
  GroupElement g = target_.identity();
  for (std::size_t i = 0; i < images_.size(); ++i) g = target_.multiply(g, target_.power(images_[i], h.residues[i]));
  return g;
}

GroupRingElement GroupEmbedding::operator()(const GroupRingElement& x) const {
  GroupRingElement out;
  for (auto& [h, q] : x.terms()) out.add_term((*this)(h), q);
  return out;
}

HermitianGroupForm induce(const HermitianGroupForm& form, const GroupEmbedding& embedding) {
  if (!(form.group == embedding.source())) throw UsageError("form is not over the embedding's source group");
  DenseMatrix<GroupRingElement> out(form.matrix.rows(), form.matrix.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = embedding(form.matrix(i, j));
  }
  return {embedding.target(), std::move(out)};
}

}  // namespace l2sig
