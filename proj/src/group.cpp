#include "l2sig/group.hpp"

#include <numeric>
#include <string>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (auto d : factors_) {
    if (d < 2) throw DomainError("cyclic factor must be at least 2, got " + std::to_string(d));
    order_ *= d;
    exponent_ = std::lcm(exponent_, d);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n) {
  if (n == 1) return FiniteAbelianGroup();
  return FiniteAbelianGroup({n});
}

GroupElement FiniteAbelianGroup::identity() const { return {std::vector<std::int64_t>(rank(), 0)}; }

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
  GroupElement g = identity();
  g.residues.at(i) = 1;
  return g;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  GroupElement g = identity();
  for (std::int64_t n = 0; n < order_; ++n) {
    out.push_back(g);
    for (std::size_t i = rank(); i-- > 0;) {
      if (++g.residues[i] < factors_[i]) break;
      g.residues[i] = 0;
    }
  }
  return out;
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.residues.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::normalize(std::vector<std::int64_t> residues) const {
  if (residues.size() != rank()) throw UsageError("element has wrong number of residues");
  for (std::size_t i = 0; i < rank(); ++i) residues[i] = mod(residues[i], factors_[i]);
  return {std::move(residues)};
}

GroupElement FiniteAbelianGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement r = a;
  for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& g) const {
  GroupElement r = g;
  for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = (factors_[i] - g.residues[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::power(const GroupElement& g, std::int64_t k) const {
  GroupElement r = g;
  for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = mod(g.residues[i] * mod(k, factors_[i]), factors_[i]);
  return r;
}

std::vector<Character> characters(const FiniteAbelianGroup& group) {
  std::vector<Character> out;
  for (auto& g : group.elements()) out.push_back({g.residues});
  return out;
}

Character trivial_character(const FiniteAbelianGroup& group) {
  return {std::vector<std::int64_t>(group.rank(), 0)};
}

std::int64_t char_exponent(const Character& chi, const GroupElement& g, const FiniteAbelianGroup& group) {
  const std::int64_t e = group.exponent();
  std::int64_t k = 0;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const std::int64_t d = group.factors()[i];
    k = (k + (e / d) * ((chi.weights[i] * g.residues[i]) % d)) % e;
  }
  return k;
}

CycNumber char_value(const Character& chi, const GroupElement& g, const FiniteAbelianGroup& group) {
  if (chi.weights.size() != group.rank() || !group.contains(g)) {
    throw UsageError("character or element does not belong to the group");
  }
  return CycNumber::zeta(static_cast<unsigned>(group.exponent()), char_exponent(chi, g, group));
}

GroupRingElement GroupRingElement::scalar(const FiniteAbelianGroup& group, const Rational& q) {
  return basis(group.identity(), q);
}

GroupRingElement GroupRingElement::basis(const GroupElement& g, const Rational& q) {
  GroupRingElement x;
  x.add_term(g, q);
  return x;
}

GroupRingElement GroupRingElement::averaging_idempotent(const FiniteAbelianGroup& group) {
  GroupRingElement x;
  const Rational w(1, group.order());
  for (auto& g : group.elements()) x.terms_.emplace(g, w);
  return x;
}

Rational GroupRingElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const GroupElement& g, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& b) {
  for (auto& [g, q] : b.terms_) add_term(g, q);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& b) {
  for (auto& [g, q] : b.terms_) add_term(g, -q);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, q] : terms_) q *= s;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  return r *= -1;
}

GroupRingElement multiply(const FiniteAbelianGroup& group, const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r;
  for (auto& [g, p] : a.terms()) {
    for (auto& [h, q] : b.terms()) r.add_term(group.multiply(g, h), p * q);
  }
  return r;
}

GroupRingElement ring_involution(const FiniteAbelianGroup& group, const GroupRingElement& x) {
  GroupRingElement r;
  for (auto& [g, q] : x.terms()) r.add_term(group.inverse(g), q);
  return r;
}

CycNumber apply_character(const FiniteAbelianGroup& group, const Character& chi, const GroupRingElement& x) {
  if (chi.weights.size() != group.rank()) throw UsageError("character does not belong to the group");
  const auto e = static_cast<unsigned>(group.exponent());
  std::vector<Rational> powers(e);
  for (auto& [g, q] : x.terms()) powers[static_cast<std::size_t>(char_exponent(chi, g, group))] += q;
  return CycNumber::from_powers(e, powers);
}

}  // namespace l2sig
