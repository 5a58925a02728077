#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "l2sig/cyclotomic.hpp"
#include "l2sig/rational.hpp"

namespace l2sig {

struct GroupElement {
  std::vector<std::int64_t> residues;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A character of a finite abelian group, chi(g) = zeta_e^(sum_i (e/d_i) w_i g_i).
struct Character {
  std::vector<std::int64_t> weights;
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// Z_{d_1} x ... x Z_{d_r} with every d_i >= 2. The empty product is the
/// trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);
  static FiniteAbelianGroup cyclic(std::int64_t n);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_trivial() const { return factors_.empty(); }

  GroupElement identity() const;
  /// The i-th standard generator (1 in slot i).
  GroupElement generator(std::size_t i) const;
  /// All elements, lexicographic in residues.
  std::vector<GroupElement> elements() const;
  bool contains(const GroupElement& g) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, std::int64_t k) const;
  /// Canonical representative for arbitrary integer residues.
  GroupElement normalize(std::vector<std::int64_t> residues) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

/// All |G| characters, lexicographic in weights.
std::vector<Character> characters(const FiniteAbelianGroup& group);
Character trivial_character(const FiniteAbelianGroup& group);

/// k with chi(g) = zeta_e^k, 0 <= k < e.
std::int64_t char_exponent(const Character& chi, const GroupElement& g, const FiniteAbelianGroup& group);

/// chi(g) as a root of unity in Q(zeta_e), e the exponent of the group.
CycNumber char_value(const Character& chi, const GroupElement& g, const FiniteAbelianGroup& group);

/// Element of the rational group algebra Q[G]. Zero coefficients are never
/// stored and terms iterate in lexicographic element order.
class GroupRingElement {
 public:
  using Terms = std::map<GroupElement, Rational>;

  GroupRingElement() = default;
  static GroupRingElement scalar(const FiniteAbelianGroup& group, const Rational& q);
  static GroupRingElement basis(const GroupElement& g, const Rational& q = 1);
  /// (1/|G|) sum_g g, the idempotent projecting onto the trivial representation.
  static GroupRingElement averaging_idempotent(const FiniteAbelianGroup& group);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const GroupElement& g) const;
  void add_term(const GroupElement& g, const Rational& q);

  GroupRingElement& operator+=(const GroupRingElement& b);
  GroupRingElement& operator-=(const GroupRingElement& b);
  GroupRingElement& operator*=(const Rational& s);
  GroupRingElement operator-() const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const Rational& s, GroupRingElement a) { return a *= s; }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

GroupRingElement multiply(const FiniteAbelianGroup& group, const GroupRingElement& a,
                          const GroupRingElement& b);

/// sum a_g g -> sum a_g g^-1.
GroupRingElement ring_involution(const FiniteAbelianGroup& group, const GroupRingElement& x);

/// sum a_g chi(g); a ring homomorphism Q[G] -> Q(zeta_e).
CycNumber apply_character(const FiniteAbelianGroup& group, const Character& chi,
                          const GroupRingElement& x);

}  // namespace l2sig
