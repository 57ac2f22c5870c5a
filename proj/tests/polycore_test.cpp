/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "singlab/error.hpp"
#include "singlab/polycore/matrix.hpp"
#include "singlab/polycore/poly.hpp"

using namespace singlab;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

MultiPoly P(const std::string& s, const std::vector<std::string>& vars = kXY) { return MultiPoly::parse(s, vars); }

MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> exp(0, max_deg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, exp(rng));
    out.push_back({m, Rational(coef(rng), 1 + (k % 3))});
  }
  return MultiPoly::from_terms(nvars, out);
}

// Dual numbers modulo a prime: a + b*eps with eps^2 = 0.
struct Dual {
  std::int64_t a;
  std::int64_t b;
};
constexpr std::int64_t kPrime = 1000003;
Dual dmul(Dual u, Dual v) { return {u.a * v.a % kPrime, (u.a * v.b + u.b * v.a) % kPrime}; }
Dual dadd(Dual u, Dual v) { return {(u.a + v.a) % kPrime, (u.b + v.b) % kPrime}; }
Dual dpow(Dual u, int e) {
  Dual r{1, 0};
  for (int i = 0; i < e; ++i) r = dmul(r, u);
  return r;
}

std::int64_t eval_mod(const MultiPoly& p, std::int64_t x, std::int64_t y) {
  std::int64_t s = 0;
  for (const auto& t : p.terms()) {
    EXPECT_TRUE(t.coeff.is_integer());
    std::int64_t v = t.coeff.numerator().get_si() % kPrime;
    for (unsigned k = 0; k < t.mono[0]; ++k) v = v * x % kPrime;
    for (unsigned k = 0; k < t.mono[1]; ++k) v = v * y % kPrime;
    s = (s + v + kPrime) % kPrime;
  }
  return s;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).fraction_str(), "2/1");
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_EQ(Rational(-5, 2).ceil(), -2);
  EXPECT_EQ(Rational(-5, 2).floor(), -3);
  EXPECT_EQ(Rational(-5, 8).frac(), Rational(3, 8));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Parse, ReferenceGerms) {
  const MultiPoly f = P("x^5+y^6+x^4y");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coeff(Monomial{5, 0}), Rational(1));
  EXPECT_EQ(f.coeff(Monomial{0, 6}), Rational(1));
  EXPECT_EQ(f.coeff(Monomial{4, 1}), Rational(1));
  EXPECT_TRUE(P("0").is_zero());
  const MultiPoly g = P("x^10+y^3+x^2y^2+z^6+w^5+z^4w^3", {"x", "y", "z", "w"});
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.coeff(Monomial{0, 0, 4, 3}), Rational(1));
}

TEST(Parse, Grammar) {
  EXPECT_EQ(P("1/5x^2"), MultiPoly::term(Monomial{2, 0}, Rational(1, 5)));
  EXPECT_EQ(P("-x^2"), MultiPoly::term(Monomial{2, 0}, Rational(-1)));
  EXPECT_EQ(P("(x+y)*(x-y)"), P("x^2-y^2"));
  EXPECT_EQ(P("2 x y + 3*x*y"), P("5xy"));
  EXPECT_EQ(P("(x+1)^2 - 1"), P("x^2+2x"));
  EXPECT_EQ(P("x1^2+x", {"x", "x1"}), MultiPoly::from_terms(2, {{Monomial{0, 2}, 1}, {Monomial{1, 0}, 1}}));
}

TEST(Parse, Errors) {
  try {
    P("x^5+z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
  }
  try {
    P("x^5+)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Syntax);
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
  EXPECT_THROW(P("x^"), Error);
  EXPECT_THROW(P(""), Error);
  EXPECT_THROW(P("1/0x"), Error);
}

TEST(Print, CanonicalAndRoundTrip) {
  EXPECT_EQ(P("y^6+x^4y+x^5").str(kXY), "x^5+x^4*y+y^6");
  EXPECT_EQ(P("-2/5x^2y^2+3").str(kXY), "3-2/5*x^2*y^2");
  EXPECT_EQ(P("0").str(kXY), "0");
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const MultiPoly p = random_poly(rng, 2, 6, 6);
    EXPECT_EQ(P(p.str(kXY)), p);
  }
}

TEST(Arith, ReferenceExamples) {
  EXPECT_EQ(partial(P("x^5+y^6+x^4y"), 0), P("5x^4+4x^3y"));
  EXPECT_EQ(mul(P("x+y"), P("x-y")), P("x^2-y^2"));
  EXPECT_EQ(add(P("x"), P("-x")), P("0"));
  EXPECT_THROW(P("x") + P("x", {"x"}), Error);
}

TEST(Arith, PartialMatchesDualNumberOracle) {
  const MultiPoly fy = partial(P("x^5+y^5+x^2y^2"), 1);
  EXPECT_EQ(fy, P("5y^4+2x^2y"));
  for (std::int64_t x = 2; x < 40; x += 7) {
    for (std::int64_t y = 3; y < 40; y += 5) {
      const Dual dx{x, 0};
      const Dual dy{y, 1};
      const Dual v = dadd(dadd(dpow(dx, 5), dpow(dy, 5)), dmul(dpow(dx, 2), dpow(dy, 2)));
      EXPECT_EQ(eval_mod(fy, x, y), v.b);
    }
  }
}

TEST(Support, KeySet) {
  const auto s = P("x^4+y^5+xy^4").support();
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.count(Monomial{4, 0}) && s.count(Monomial{0, 5}) && s.count(Monomial{1, 4}));
  EXPECT_TRUE(P("0").support().empty());
}

TEST(Arith, RingAxiomsAndLeibniz) {
  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 3;
    const MultiPoly a = random_poly(rng, n, 4, 4);
    const MultiPoly b = random_poly(rng, n, 4, 4);
    const MultiPoly c = random_poly(rng, n, 4, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(partial(a * b, i), partial(a, i) * b + a * partial(b, i));
    }
  }
}

TEST(LocalOrder, Properties) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<unsigned> e(0, 4);
  auto rnd = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  const Monomial one(3);
  for (int k = 0; k < 300; ++k) {
    const Monomial a = rnd();
    const Monomial b = rnd();
    const Monomial m = rnd();
    if (!a.is_one()) EXPECT_LT(LocalOrder::compare(a, one), 0);
    const int ab = LocalOrder::compare(a, b);
    EXPECT_EQ(ab, -LocalOrder::compare(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(ab, LocalOrder::compare(m * a, m * b));
  }
  EXPECT_GT(LocalOrder::compare(Monomial{5, 0}, Monomial{4, 1}), 0);
}

TEST(Hessian, Determinant) {
  EXPECT_EQ(hessian_determinant(P("x^3+y^3")), P("36xy"));
  EXPECT_EQ(hessian_determinant(P("x^2+y^2")), P("4"));
}

TEST(Matrix, RankNullspaceInverse) {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(m.rank(), 2u);
  const auto ker = m.nullspace();
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(ker[0])));
  EXPECT_EQ(m.determinant(), Rational(0));
  Matrix a = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(a * a.inverse(), Matrix::identity(2));
  EXPECT_EQ(a.determinant(), Rational(1));
  EXPECT_EQ(primitive_integer({Rational(-1, 2), Rational(0), Rational(3, 4)}),
            (Vec{Rational(2), Rational(0), Rational(-3)}));
}

TEST(Subspace, Operations) {
  const Subspace u = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  const Subspace w = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ((u + w).dim(), 3u);
  const Subspace i = u.intersect(w);
  ASSERT_EQ(i.dim(), 1u);
  EXPECT_TRUE(i.contains(Vec{0, 5, 0}));
  Matrix shift(3, 3);
  shift.at(1, 0) = 1;
  shift.at(2, 1) = 1;
  // {v : shift v in span(e3)} = span(e2, e3)
  const Subspace pre = Subspace::span({{0, 0, 1}}, 3).preimage(shift);
  EXPECT_EQ(pre, w);
  EXPECT_EQ(Subspace::kernel(shift).dim(), 1u);
  EXPECT_EQ(Subspace::image(shift).dim(), 2u);
}
