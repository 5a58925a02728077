#include <gtest/gtest.h>

#include "l2sig/errors.hpp"
#include "l2sig/invariants.hpp"
#include "support.hpp"

namespace l2sig {
namespace {

using testing::Rng;

GroupElement el(std::initializer_list<std::int64_t> r) { return GroupElement{r}; }

HermitianGroupForm scalar_form(const FiniteAbelianGroup& g, long q) {
  return HermitianGroupForm::one_by_one(g, GroupRingElement::scalar(g, q));
}

HermitianGroupForm hyperbolic(const FiniteAbelianGroup& g) {
  RationalMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianGroupForm::from_rational(g, m);
}

HermitianGroupForm h_form() {
  return HermitianGroupForm::one_by_one(FiniteAbelianGroup::cyclic(2), GroupRingElement::basis(el({1})));
}

SignatureTriple triple(std::size_t p, std::size_t m, std::size_t z) { return {p, m, z}; }

TEST(SignatureTable, Examples) {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  const auto one = signature_table(scalar_form(z2, 1));
  ASSERT_EQ(one.entries.size(), 2u);
  for (auto& [chi, t] : one.entries) EXPECT_EQ(t, triple(1, 0, 0));

  const auto z3 = FiniteAbelianGroup::cyclic(3);
  const auto e = signature_table(projective_unit_form(z3));
  EXPECT_EQ(e.at(Character{{0}}), triple(1, 0, 0));
  EXPECT_EQ(e.at(Character{{1}}), triple(0, 0, 1));
  EXPECT_EQ(e.at(Character{{2}}), triple(0, 0, 1));

  const auto h = signature_table(h_form());
  EXPECT_EQ(h.at(Character{{0}}), triple(1, 0, 0));
  EXPECT_EQ(h.at(Character{{1}}), triple(0, 1, 0));
}

TEST(Invariants, ScalarExamples) {
  for (std::int64_t n = 2; n <= 9; ++n) {
    const auto g = FiniteAbelianGroup::cyclic(n);
    const auto one = scalar_form(g, 1), e = projective_unit_form(g), hyp = hyperbolic(g);
    EXPECT_EQ(sig_trivial(one), 1);
    EXPECT_EQ(sig_trivial(e), 1);
    EXPECT_EQ(sig_trivial(hyp), 0);
    EXPECT_EQ(sig_full(one), n);
    EXPECT_EQ(sig_full(e), 1);
    EXPECT_EQ(sig_l2(e), Rational(1, n));
    EXPECT_EQ(sig_l2(one), 1);
    EXPECT_EQ(sig_l2(hyp), 0);
    EXPECT_EQ(alpha(e), Rational(1, n) - 1);
    EXPECT_EQ(alpha(one), 0);
    for (auto& x : g.elements()) {
      EXPECT_EQ(sig_g(one, x), CycNumber(Rational(x == g.identity() ? n : 0)));
      EXPECT_EQ(sig_g(e, x), CycNumber(Rational(1)));
    }
    const auto cs_e = char_sum_identity(e);
    EXPECT_EQ(cs_e.lhs, CycNumber(Rational(n - 1)));
    EXPECT_EQ(cs_e.rhs, n - 1);
    EXPECT_TRUE(cs_e.equal && cs_e.lhs_is_integer);
    const auto cs_one = char_sum_identity(one);
    EXPECT_TRUE(cs_one.lhs.is_zero());
    EXPECT_EQ(cs_one.rhs, 0);
    EXPECT_TRUE(cs_one.equal);
  }
  EXPECT_EQ(sig_full(h_form()), 0);
  EXPECT_EQ(sig_g(h_form(), el({1})), CycNumber(Rational(2)));
  const auto cs_h = char_sum_identity(h_form());
  EXPECT_EQ(cs_h.lhs, CycNumber(Rational(2)));
  EXPECT_EQ(cs_h.rhs, 2);
  EXPECT_TRUE(cs_h.equal);
}

TEST(Invariants, KFoldIdempotentOverZ3) {
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  HermitianGroupForm f = HermitianGroupForm::zero_dimensional(z3);
  for (int k = 1; k <= 6; ++k) {
    f = direct_sum(f, projective_unit_form(z3));
    EXPECT_EQ(alpha(f), ratio(-2 * k, 3));
  }
}

TEST(TauZ2, Examples) {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  EXPECT_EQ(tau_z2(scalar_form(z2, 1)), 0);
  EXPECT_EQ(tau_z2(h_form()), -2);
  EXPECT_EQ(tau_z2(projective_unit_form(z2)), -1);
  EXPECT_THROW(tau_z2(projective_unit_form(FiniteAbelianGroup::cyclic(3))), UsageError);
}

TEST(AtiyahCheck, Examples) {
  RationalMatrix one(1, 1);
  one << 1;
  auto r = atiyah_check(one, FiniteAbelianGroup::cyclic(5));
  EXPECT_EQ(r.alpha, 0);
  EXPECT_TRUE(r.passed);
  RationalMatrix m(2, 2);
  m << 2, 1, 1, 2;
  r = atiyah_check(m, FiniteAbelianGroup::cyclic(3));
  EXPECT_EQ(r.sig_l2, 2);
  EXPECT_EQ(r.base_signature, 2);
  EXPECT_TRUE(r.passed);
  m << 0, 1, 1, 0;
  for (std::int64_t n = 1; n <= 8; ++n) {
    r = atiyah_check(m, FiniteAbelianGroup::cyclic(n));
    EXPECT_EQ(r.sig_l2, 0);
    EXPECT_TRUE(r.passed);
  }
}

TEST(InvariantReport, Scale) {
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  const auto rep = invariant_report(projective_unit_form(z3), Rational(2));
  EXPECT_EQ(*rep.tau_l2(), Rational(-1, 3));
  EXPECT_FALSE(invariant_report(projective_unit_form(z3)).tau_l2());
  EXPECT_THROW(invariant_report(projective_unit_form(z3), Rational(0)), UsageError);
}

TEST(Invariants, RejectsNonHermitian) {
  const auto z4 = FiniteAbelianGroup::cyclic(4);
  EXPECT_THROW(signature_table(HermitianGroupForm::one_by_one(z4, GroupRingElement::basis(el({1})))), DomainError);
}

std::vector<FiniteAbelianGroup> groups() {
  std::vector<FiniteAbelianGroup> out{FiniteAbelianGroup()};
  for (std::int64_t n = 2; n <= 12; ++n) out.push_back(FiniteAbelianGroup::cyclic(n));
  out.emplace_back(std::vector<std::int64_t>{2, 2});
  out.emplace_back(std::vector<std::int64_t>{2, 6});
  out.emplace_back(std::vector<std::int64_t>{3, 3});
  out.emplace_back(std::vector<std::int64_t>{2, 2, 2});
  out.emplace_back(std::vector<std::int64_t>{4, 6});
  return out;
}

TEST(InvariantProperties, AlphaIsAdditive) {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto gs = groups();
    const auto& g = gs[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<std::int64_t>(gs.size()) - 1))];
    const auto a = testing::random_form(rng, g, testing::uniform(rng, 0, 3));
    const auto b = testing::random_form(rng, g, testing::uniform(rng, 0, 3));
    EXPECT_EQ(alpha(direct_sum(a, b)), alpha(a) + alpha(b));
    EXPECT_EQ(sig_l2(direct_sum(a, b)), sig_l2(a) + sig_l2(b));
  }
}

TEST(InvariantProperties, InductionPreservesSigL2) {
  Rng rng(42);
  for (std::int64_t n = 1; n <= 24; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const auto h = FiniteAbelianGroup::cyclic(m), g = FiniteAbelianGroup::cyclic(n);
      const auto emb = GroupEmbedding::canonical(h, g);
      for (int t = 0; t < 3; ++t) {
        const auto f = testing::random_form(rng, h, testing::uniform(rng, 1, 3));
        EXPECT_EQ(sig_l2(induce(f, emb)), sig_l2(f)) << m << " -> " << n;
      }
    }
  }
}

TEST(InvariantProperties, GSignatureFacts) {
  Rng rng(43);
  for (auto& g : groups()) {
    for (int t = 0; t < 4; ++t) {
      const auto f = testing::random_form(rng, g, testing::uniform(rng, 1, 5));
      const auto table = signature_table(f);
      EXPECT_EQ(sig_g(table, g.identity()), CycNumber(Rational(sig_full(table))));
      for (auto& x : g.elements()) {
        const auto v = sig_g(table, x);
        EXPECT_EQ(conjugate(v), v);
      }
      const auto cs = char_sum_identity(table);
      EXPECT_TRUE(cs.equal);
      EXPECT_TRUE(cs.lhs_is_integer);
      EXPECT_EQ(cs.rhs, g.order() * sig_trivial(table) - sig_full(table));
    }
  }
}

TEST(InvariantProperties, NonsingularComponentsHaveNoZeros) {
  Rng rng(44);
  for (auto& g : groups()) {
    for (int t = 0; t < 4; ++t) {
      const auto f = testing::random_form(rng, g, testing::uniform(rng, 1, 4));
      for (auto& [chi, tr] : signature_table(f).entries) {
        const auto m = isotypic_matrix(f, chi);
        const auto oracle = testing::float_inertia(m);
        if (oracle.min_abs_eigenvalue > 1e-6) {
          EXPECT_EQ(tr.n_zero, 0u);
          EXPECT_EQ(tr, oracle.triple);
        }
      }
    }
  }
}

TEST(InvariantProperties, TableMatchesDirectFloatEvaluation) {
  // Evaluate each group ring entry at the character with doubles, without
  // going through the cyclotomic field.
  Rng rng(45);
  for (std::int64_t n : {2, 3, 5, 8, 12}) {
    const auto g = FiniteAbelianGroup::cyclic(n);
    for (int t = 0; t < 10; ++t) {
      const auto f = testing::random_form(rng, g, testing::uniform(rng, 1, 4));
      const auto table = signature_table(f);
      for (std::int64_t w = 0; w < n; ++w) {
        Eigen::MatrixXcd m(f.matrix.rows(), f.matrix.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::complex<double> s = 0;
            for (auto& [x, q] : f.matrix(i, j).terms()) {
              s += q.get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(w * x.residues[0]) / n);
            }
            m(i, j) = s;
          }
        }
        const auto oracle = testing::classify(
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues(), 1e-9);
        if (oracle.min_abs_eigenvalue < 1e-6) continue;
        EXPECT_EQ(table.at(Character{{w}}), oracle.triple);
      }
    }
  }
}

TEST(InvariantProperties, ParallelTableIsIdentical) {
  Rng rng(46);
  const FiniteAbelianGroup g({4, 6});
  const auto f = testing::random_form(rng, g, 4);
  const auto serial = signature_table(f, 1);
  for (unsigned jobs : {2u, 3u, 8u, 64u}) {
    const auto par = signature_table(f, jobs);
    ASSERT_EQ(par.entries.size(), serial.entries.size());
    for (std::size_t i = 0; i < par.entries.size(); ++i) {
      EXPECT_EQ(par.entries[i].first, serial.entries[i].first);
      EXPECT_EQ(par.entries[i].second, serial.entries[i].second);
    }
  }
}

}  // namespace
}  // namespace l2sig
