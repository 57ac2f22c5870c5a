/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <set>

#include "singlab/cli/fixture.hpp"
#include "singlab/cli/pipeline.hpp"
#include "singlab/error.hpp"

using namespace singlab;

namespace {

Analysis curve(const std::string& f) {
  RunConfig c;
  c.polynomial = f;
  c.vars = {"x", "y"};
  return analyze(c);
}

const Analysis& ex1() {
  static const Analysis a = curve("x^5+y^6+x^4y");
  return a;
}
const Analysis& ex2() {
  static const Analysis a = curve("x^4+y^5+xy^4");
  return a;
}
const Analysis& ex3() {
  static const Analysis a = curve("x^5+y^5+x^2y^2");
  return a;
}

TwistedScalar tw(long num, long den, int k) { return TwistedScalar(Rational(num, den), k); }

std::vector<std::pair<std::size_t, std::size_t>> support(const Matrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) s.emplace_back(i, j);
    }
  }
  return s;
}

bool q_antisymmetric(const Matrix& n_top, const TwistedMatrix& q) {
  const TwistedMatrix n = TwistedMatrix::from_rational(n_top);
  return (n.transpose() * q + q * n).is_zero();
}

}  // namespace

TEST(Twisted, ScalarArithmetic) {
  const TwistedScalar a = tw(-1, 1, 2);
  EXPECT_EQ(a.str(), "-(2pi i)^2");
  EXPECT_EQ(a * a.inverse(), TwistedScalar(Rational(1)));
  EXPECT_EQ(a.inverse(), tw(-1, 1, -2));
  EXPECT_TRUE((a + -a).is_zero());
  const TwistedScalar mixed = a + TwistedScalar(Rational(3));
  EXPECT_FALSE(mixed.is_pure());
  EXPECT_EQ(mixed.coeff(0), Rational(3));
  EXPECT_THROW(mixed.inverse(), Error);
}

TEST(Kappa, Examples) {
  const auto k1 = kappa_involution(ex1().spectrum);
  ASSERT_EQ(k1.size(), 19u);
  for (std::size_t i = 0; i < 19; ++i) EXPECT_EQ(k1[i], i == 9 ? 9u : 18 - i);
  const auto k2 = kappa_involution(ex2().spectrum);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(k2[i], 11 - i);
  const auto k0 = kappa_involution(make_spectrum(1, {Rational(0)}));
  EXPECT_EQ(k0, std::vector<std::size_t>{0});
}

TEST(HodgeMatrices, Example2Patterns) {
  const Analysis& a = ex2();
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_EQ(a.q.at(i, 11 - i), tw(i < 6 ? -1 : 1, 1, 1)) << i;
    EXPECT_EQ(a.j.at(i, i), tw(i < 6 ? 1 : -1, 1, -1)) << i;
  }
  EXPECT_EQ(a.q * a.j, a.s);
  EXPECT_TRUE(a.j_signs.consistent);
}

TEST(HodgeMatrices, Example1AndMorse) {
  const Analysis& a = ex1();
  EXPECT_EQ(a.q.at(9, 9), tw(-1, 1, 2));
  EXPECT_EQ(a.j.at(9, 9), tw(-1, 1, -2));
  EXPECT_EQ(a.q * a.j, a.s);
  const Analysis m = curve("x^2+y^2");
  ASSERT_EQ(m.mu, 1u);
  EXPECT_EQ(m.j.at(0, 0), tw(-1, 1, -2));
}

TEST(HodgeMatrices, SymmetryAndJSquare) {
  for (const Analysis* a : {&ex1(), &ex2(), &ex3()}) {
    const auto flat = a->spectrum.flat();
    const TwistedMatrix j2 = a->j * a->j;
    for (std::size_t i = 0; i < a->mu; ++i) {
      const std::size_t k = a->kappa[i];
      const int power = flat[i].is_integer() ? a->n + 1 : a->n;
      const TwistedScalar sign = power % 2 == 0 ? TwistedScalar(Rational(1)) : TwistedScalar(Rational(-1));
      EXPECT_EQ(a->q.at(k, i), sign * a->q.at(i, k));
      EXPECT_EQ(j2.at(i, i), tw(1, 1, -2 * power));
    }
  }
}

TEST(AdaptBasis, FermatCubic) {
  const Analysis a = curve("x^3+y^3");
  ASSERT_EQ(a.mu, 4u);
  const AdaptedBasis& b = a.adapted;
  // x and y sit at alpha = 0 = (n-1)/2, so they are kappa-fixed.
  EXPECT_EQ(b.kappa, (std::vector<std::size_t>{3, 1, 2, 0}));
  EXPECT_EQ(b.pattern.at(0, 3), Rational(1));
  EXPECT_EQ(b.pattern.at(3, 0), Rational(1));
  ASSERT_EQ(b.fixed_scale.size(), 2u);
  for (const auto& [i, c] : b.fixed_scale) EXPECT_FALSE(c.is_zero());
  EXPECT_EQ(support(b.pattern).size(), 4u);
  EXPECT_EQ(b.change.transpose() * a.gbasis.congruent(a.b0) * b.change, b.pattern);
}

TEST(AdaptBasis, Example1FixedPoint) {
  const AdaptedBasis& b = ex1().adapted;
  ASSERT_EQ(b.fixed_scale.size(), 1u);
  EXPECT_EQ(b.fixed_scale.begin()->first, 9u);
  for (std::size_t i = 0; i < 19; ++i) {
    for (std::size_t k = 0; k < 19; ++k) {
      if (i == 9 && k == 9) continue;
      EXPECT_EQ(b.pattern.at(i, k), Rational(k == 18 - i ? 1 : 0));
    }
  }
}

TEST(AdaptBasis, Clash) {
  Matrix g = Matrix::identity(2);
  EXPECT_THROW(
      {
        try {
          adapt_basis(g, {Rational(-1, 2), Rational(1, 2)}, {1, 0});
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::GradingPairingClash);
          throw;
        }
      },
      Error);
}

TEST(Split, Example3) {
  const Analysis& a = ex3();
  EXPECT_TRUE(a.split.n_1.is_zero());
  EXPECT_EQ(support(a.split.n_top).size(), 1u);
  EXPECT_EQ(a.split.n_top + a.split.n_1, a.mf_adapted);
  EXPECT_TRUE(q_antisymmetric(a.split.n_top, a.q));
}

TEST(Split, FiltrationViolation) {
  Matrix m(2, 2);
  m.at(1, 0) = Rational(1);
  try {
    split_ntop_n1(m, {Rational(0), Rational(1, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FiltrationViolation);
  }
}

TEST(Split, Example1And2AreAllN1) {
  EXPECT_TRUE(ex1().split.n_top.is_zero());
  EXPECT_TRUE(ex2().split.n_top.is_zero());
  // Ex. 2: the single entry sits at row 12, column 1 (1-based).
  const auto s2 = support(ex2().split.n_1);
  ASSERT_EQ(s2.size(), 1u);
  EXPECT_EQ(s2[0], std::make_pair(std::size_t{11}, std::size_t{0}));
  const std::set<std::pair<std::size_t, std::size_t>> allowed = {{16, 0}, {17, 0}, {18, 0}, {18, 1}, {18, 2}};
  for (const auto& e : support(ex1().split.n_1)) EXPECT_TRUE(allowed.count(e)) << e.first << "," << e.second;
}

TEST(JoinFixture, SplitAndType) {
  for (long a : {1L, 2L, -3L}) {
    const JoinFixture fx = join_fixture(Rational(a));
    EXPECT_EQ(support(fx.split.n_top), (std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {5, 3}}));
    EXPECT_EQ(support(fx.split.n_1), (std::vector<std::pair<std::size_t, std::size_t>>{{3, 0}, {5, 2}}));
    EXPECT_EQ(fx.split.n_1.at(3, 0), Rational(a));
    EXPECT_EQ(fx.split.n_1.at(5, 2), Rational(a));
    EXPECT_EQ(jordan_type_str(jordan_type_from_ranks(fx.t)), "3^1 1^3");
    EXPECT_EQ(jordan_type_str(jordan_type_from_ranks(fx.split.n_top)), "2^2 1^2");
    EXPECT_TRUE(q_antisymmetric(fx.split.n_top, fx.q));
  }
  EXPECT_THROW(join_fixture(Rational(0)), Error);
}

TEST(JoinFixture, ChainWalk) {
  // t e1 = e3 + a e4 and t^2 e1 = 2a e6 are the explicit walk.
  const JoinFixture fx = join_fixture(Rational(1));
  Vec e1 = unit_vector(6, 0);
  const Vec t1 = fx.t.apply(e1);
  EXPECT_EQ(t1, (Vec{0, 0, 1, 1, 0, 0}));
  EXPECT_EQ(fx.t.apply(t1), (Vec{0, 0, 0, 0, 0, 2}));
  EXPECT_TRUE(fx.t.power(3).is_zero());
}

TEST(JoinFixture, Binding) {
  for (long a : {1L, 2L, -3L}) {
    const JoinFixture fx = join_fixture(Rational(a));
    const BindingReport& r = fx.binding;
    EXPECT_TRUE(r.consistent);
    std::vector<const FChainBinding*> long_chains;
    for (const auto& c : r.chains) {
      std::size_t total = 0;
      for (const auto& s : c.segments) total += s.steps.size();
      EXPECT_EQ(total, c.length);
      if (c.length > 1) long_chains.push_back(&c);
    }
    ASSERT_EQ(long_chains.size(), 1u);
    const FChainBinding& c = *long_chains[0];
    EXPECT_EQ(c.length, 3u);
    ASSERT_EQ(c.segments.size(), 2u);
    EXPECT_EQ(c.segments[0].steps.size(), 2u);
    EXPECT_EQ(c.segments[1].steps.size(), 1u);
    EXPECT_EQ(r.binding_steps, 1u);
    std::set<std::size_t> bound;
    for (const auto& s : c.segments) bound.insert(s.n_chains.begin(), s.n_chains.end());
    ASSERT_EQ(bound.size(), 2u);
    for (auto idx : bound) EXPECT_EQ(r.n_jordan.chains[idx].size(), 2u);
  }
}

TEST(JoinFixture, BTopPlusBAlg) {
  const JoinFixture fx = join_fixture(Rational(1));
  const Matrix& b1 = fx.pairings[1];
  for (std::size_t u = 0; u < 6; ++u) {
    for (std::size_t v = 0; v < 6; ++v) {
      const Vec eu = unit_vector(6, u);
      const Vec ev = unit_vector(6, v);
      const TwistedScalar sum = b_top(eu, ev, fx.split, fx.q, fx.j, fx.basis) + b_alg(eu, ev, fx.split, fx.q, fx.j, fx.basis);
      EXPECT_EQ(sum, TwistedScalar(b1.at(u, v)));
    }
  }
  const Vec e1 = unit_vector(6, 0);
  EXPECT_TRUE(b_top(e1, e1, fx.split, fx.q, fx.j, fx.basis).is_zero());
  EXPECT_EQ(b_top(e1, unit_vector(6, 3), fx.split, fx.q, fx.j, fx.basis), TwistedScalar(Rational(1)));
  EXPECT_EQ(b_alg(e1, unit_vector(6, 2), fx.split, fx.q, fx.j, fx.basis), TwistedScalar(Rational(1)));
}

TEST(MainTheorem, ReferenceExamplesAndFixture) {
  for (const Analysis* a : {&ex1(), &ex2(), &ex3()}) {
    ASSERT_EQ(a->theorem.size(), static_cast<std::size_t>(a->n + 2));
    for (const auto& t : a->theorem) {
      EXPECT_TRUE(t.holds);
      EXPECT_TRUE(t.twisted_holds);
      EXPECT_TRUE(t.residual.is_zero());
    }
  }
  for (long a : {1L, 2L}) {
    for (const auto& t : join_fixture(Rational(a)).theorem) EXPECT_TRUE(t.holds && t.twisted_holds);
  }
}

TEST(MainTheorem, PureTopOrPureAlg) {
  // Ex. 3: the j = 1 pairing is carried by N_top alone; Ex. 2 by N_1 alone.
  const Analysis& a3 = ex3();
  const Matrix top3 = a3.split.n_top.transpose() * a3.adapted.pattern;
  EXPECT_EQ(a3.pairing_adapted[1], top3);
  const Analysis& a2 = ex2();
  const Vec e1 = unit_vector(a2.mu, 0);
  EXPECT_TRUE(b_top(e1, e1, a2.split, a2.q, a2.j, a2.adapted).is_zero());
  const TwistedScalar alg = b_alg(e1, e1, a2.split, a2.q, a2.j, a2.adapted);
  EXPECT_FALSE(alg.is_zero());
  EXPECT_EQ(alg, TwistedScalar(a2.pairing_adapted[1].at(0, 0)));
  EXPECT_EQ(support(a2.pairing_adapted[1]), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}));
}

TEST(Binding, ReferenceCurves) {
  auto long_chains = [](const BindingReport& r) {
    std::vector<FChainBinding> out;
    for (const auto& c : r.chains) {
      if (c.length > 1) out.push_back(c);
    }
    return out;
  };
  const auto c1 = long_chains(ex1().binding);
  ASSERT_EQ(c1.size(), 2u);
  for (const auto& c : c1) {
    EXPECT_EQ(c.length, 2u);
    EXPECT_EQ(c.segments.size(), 2u);
  }
  EXPECT_EQ(ex1().binding.binding_steps, 2u);
  const auto c3 = long_chains(ex3().binding);
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].segments.size(), 1u);
  EXPECT_EQ(ex3().binding.binding_steps, 0u);
}
