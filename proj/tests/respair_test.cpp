/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include "singlab/error.hpp"
#include "singlab/nilstruct/jordan.hpp"
#include "singlab/respair/residue.hpp"

using namespace singlab;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

MultiPoly P(const std::string& s) { return MultiPoly::parse(s, kXY); }

struct Germ {
  MultiPoly f;
  QuotientAlgebra qa;
  Matrix mf;
  ResidueFunctional l;
  Matrix b0;

  explicit Germ(const std::string& s)
      : f(P(s)), qa(QuotientAlgebra::jacobian(f)), mf(qa.multiplication_matrix(f)),
        l(residue_functional(qa, f)), b0(residue_gram(qa, l)) {}
};

}  // namespace

TEST(Residue, FermatCubic) {
  const Germ g("x^3+y^3");
  // Residue of xy dx dy / (3x^2 * 3y^2) at the origin, computed by hand.
  EXPECT_EQ(g.l(g.qa, P("xy")), Rational(1, 9));
  EXPECT_EQ(g.l(g.qa, P("1")), Rational(0));
  EXPECT_EQ(g.l(g.qa, P("x")), Rational(0));
  EXPECT_EQ(g.l(g.qa, P("y")), Rational(0));
  const auto& basis = g.qa.basis();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const bool antidiag = (basis[i] * basis[k]) == (Monomial{1, 1});
      EXPECT_EQ(g.b0.at(i, k), antidiag ? Rational(1, 9) : Rational(0));
    }
  }
}

TEST(Residue, MorseAndHessianNormalization) {
  const Germ m("x^2+y^2");
  // mu = 1 and Hess = 4, so L(Hess) = mu forces L(1) = 1/4.
  EXPECT_EQ(m.l(m.qa, P("4")), Rational(1));
  EXPECT_EQ(m.l(m.qa, P("1")), Rational(1, 4));
  for (const char* s : {"x^5+y^6+x^4y", "x^4+y^5+xy^4", "x^5+y^5+x^2y^2"}) {
    const Germ g(s);
    EXPECT_EQ(g.l(g.qa, hessian_determinant(g.f)), Rational(static_cast<long>(g.qa.mu()))) << s;
    for (const auto& d : jacobian_generators(g.f)) {
      EXPECT_EQ(g.l(g.qa, d * P("1+x-3y^2+x^3y")), Rational(0)) << s;
    }
  }
}

TEST(Pairing, ReferenceRanks) {
  EXPECT_EQ(radical_rank(pairing_matrix(1, Germ("x^5+y^6+x^4y").b0, Germ("x^5+y^6+x^4y").mf).entries).rank, 2u);
  const Germ e2("x^4+y^5+xy^4");
  EXPECT_EQ(radical_rank(pairing_matrix(1, e2.b0, e2.mf).entries).rank, 1u);
  const Germ e3("x^5+y^5+x^2y^2");
  EXPECT_EQ(radical_rank(pairing_matrix(1, e3.b0, e3.mf).entries).rank, 1u);
}

TEST(Pairing, StructuralProperties) {
  for (const char* s : {"x^5+y^6+x^4y", "x^4+y^5+xy^4", "x^5+y^5+x^2y^2", "x^3+y^7+x^2y^3"}) {
    const Germ g(s);
    const std::size_t mu = g.qa.mu();
    const unsigned m0 = nilpotency_index(g.mf);
    EXPECT_EQ(radical_rank(g.b0).rank, mu);
    EXPECT_TRUE(radical_rank(g.b0).radical.empty());
    for (unsigned j = 0; j <= m0 + 1; ++j) {
      const auto bj = pairing_matrix(j, g.b0, g.mf);
      EXPECT_TRUE(bj.entries.is_symmetric()) << s << " j=" << j;
      EXPECT_EQ(bj.entries, pairing_matrix_direct(j, g.qa, g.f, g.l).entries) << s << " j=" << j;
      EXPECT_EQ(pairing_matrix(j + 1, g.b0, g.mf).entries, bj.entries * g.mf);
      const auto rr = radical_rank(bj.entries);
      const Matrix mj = g.mf.power(j);
      EXPECT_EQ(rr.rank, mj.rank());
      EXPECT_EQ(Subspace::span(rr.radical, mu), Subspace::kernel(mj));
    }
    EXPECT_TRUE(pairing_matrix(m0 + 1, g.b0, g.mf).entries.is_zero());
    // (f^{m0}) pairs to zero against Ann(f^{m0}).
    const Matrix top = g.mf.power(m0 == 0 ? 0 : m0 - 1);
    const Subspace ann = Subspace::kernel(top);
    const Subspace im = Subspace::image(top);
    for (const auto& b : ann.basis()) {
      for (const auto& a : im.basis()) {
        EXPECT_EQ(dot(a, g.b0.apply(b)), Rational(0));
      }
    }
    // Scaling L leaves ranks alone.
    const Matrix scaled = g.b0.scaled(Rational(-7, 3));
    EXPECT_EQ(radical_rank(pairing_matrix(1, scaled, g.mf).entries).rank, g.mf.rank());
  }
}
