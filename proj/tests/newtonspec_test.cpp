/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <map>

#include "singlab/error.hpp"
#include "singlab/localalg/macaulay.hpp"
#include "singlab/newtonspec/grading.hpp"

using namespace singlab;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

MultiPoly P(const std::string& s, const std::vector<std::string>& vars = kXY) { return MultiPoly::parse(s, vars); }

std::vector<Rational> R(const std::vector<std::pair<long, long>>& fr) {
  std::vector<Rational> out;
  for (const auto& [p, q] : fr) out.emplace_back(p, q);
  return out;
}

std::vector<std::pair<Rational, std::size_t>> RM(const std::vector<std::tuple<long, long, std::size_t>>& fr) {
  std::vector<std::pair<Rational, std::size_t>> out;
  for (const auto& [p, q, m] : fr) out.emplace_back(Rational(p, q), m);
  return out;
}

template <typename F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(NewtonDiagram, Examples) {
  const auto a = newton_diagram({{5, 0}, {0, 6}, {4, 1}});
  EXPECT_EQ(a.vertices, (std::vector<LatticePoint>{{5, 0}, {4, 1}, {0, 6}}));
  ASSERT_EQ(a.faces.size(), 2u);
  EXPECT_EQ(std::make_tuple(a.faces[0].p, a.faces[0].q, a.faces[0].c), std::make_tuple(1L, 1L, 5L));
  EXPECT_EQ(std::make_tuple(a.faces[1].p, a.faces[1].q, a.faces[1].c), std::make_tuple(5L, 4L, 24L));
  EXPECT_TRUE(a.convenient);

  const auto b = newton_diagram({{6, 0}, {0, 5}, {4, 3}});
  ASSERT_EQ(b.faces.size(), 1u);
  EXPECT_EQ(std::make_tuple(b.faces[0].p, b.faces[0].q, b.faces[0].c), std::make_tuple(5L, 6L, 30L));

  const auto c = newton_diagram({{2, 0}, {0, 2}});
  ASSERT_EQ(c.faces.size(), 1u);
  EXPECT_EQ(std::make_tuple(c.faces[0].p, c.faces[0].q, c.faces[0].c), std::make_tuple(1L, 1L, 2L));

  EXPECT_FALSE(newton_diagram({{2, 2}}).convenient);
  EXPECT_EQ(code_of([] { newton_diagram(P("x+y+z", {"x", "y", "z"})); }), ErrorCode::WrongArity);
}

TEST(NewtonDiagram, HullSupportsEveryPoint) {
  for (const char* s : {"x^5+y^6+x^4y", "x^10+y^3+x^2y^2", "x^7+y^7+x^3y^2+x^2y^4+xy^5", "x^4+y^9+x^2y^3+xy^6"}) {
    const MultiPoly f = P(s);
    const auto nd = newton_diagram(f);
    for (const auto& face : nd.faces) {
      EXPECT_EQ(face.form(face.from.first, face.from.second), Rational(1));
      EXPECT_EQ(face.form(face.to.first, face.to.second), Rational(1));
      for (const auto& t : f.terms()) EXPECT_GE(face.form(t.mono[0], t.mono[1]), Rational(1)) << s;
    }
    // Strict convexity: consecutive slopes strictly increase in steepness.
    for (std::size_t i = 0; i + 1 < nd.faces.size(); ++i) {
      EXPECT_LT(Rational(nd.faces[i].p, nd.faces[i].q), Rational(nd.faces[i + 1].p, nd.faces[i + 1].q));
    }
  }
}

TEST(NewtonDistance, Examples) {
  EXPECT_EQ(newton_distance({1, 1}, newton_diagram(P("x^5+y^6+x^4y"))), Rational(3, 8));
  EXPECT_EQ(newton_distance({2, 2}, newton_diagram(P("x^5+y^5+x^2y^2"))), Rational(1));
  EXPECT_EQ(newton_distance({1, 1}, newton_diagram(P("x^2+y^2"))), Rational(1));
  EXPECT_EQ(code_of([] { newton_distance({1, 1}, newton_diagram({{2, 2}})); }), ErrorCode::NotConvenient);
}

TEST(Nondegeneracy, Examples) {
  const MultiPoly g = P("x^10+y^3+x^2y^2");
  const auto nd = newton_diagram(g);
  ASSERT_EQ(nd.faces.size(), 2u);
  EXPECT_EQ(face_polynomial(g, nd.faces[0]), P("x^10+x^2y^2"));
  EXPECT_TRUE(face_is_nondegenerate(face_polynomial(g, nd.faces[0]), nd.faces[0]));
  EXPECT_TRUE(nondegeneracy_check(g, nd));
  EXPECT_TRUE(nondegeneracy_check(P("x^4+y^5"), newton_diagram(P("x^4+y^5"))));
  // A single vertex has no compact face.
  EXPECT_FALSE(nondegeneracy_check(P("x^2y^2"), newton_diagram(P("x^2y^2"))));
  // (x^2 - y^3)^2 + x^5: the face polynomial (x^2-y^3)^2 has a double root.
  const MultiPoly d = P("x^4-2x^2y^3+y^6+x^5");
  EXPECT_FALSE(nondegeneracy_check(d, newton_diagram(d)));
  EXPECT_EQ(code_of([&] { spectrum_newton_curve(d); }), ErrorCode::DegenerateNewtonBoundary);
  EXPECT_EQ(code_of([] { spectrum_newton_curve(P("x^3+xy^4")); }), ErrorCode::NotConvenient);
}

TEST(Kouchnirenko, MatchesMilnorNumber) {
  EXPECT_EQ(kouchnirenko_mu(newton_diagram(P("x^5+y^6+x^4y"))), 19);
  EXPECT_EQ(kouchnirenko_mu(newton_diagram(P("x^5+y^5+x^2y^2"))), 11);
  EXPECT_EQ(kouchnirenko_mu(newton_diagram(P("x^2+y^2"))), 1);
  for (const char* s : {"x^4+y^5+xy^4", "x^10+y^3+x^2y^2", "x^7+y^7+x^3y^2+x^2y^4", "x^3+y^7+x^2y^3"}) {
    const MultiPoly f = P(s);
    const auto oracle = macaulay_stabilized(jacobian_generators(f), 30);
    ASSERT_TRUE(oracle.stabilized);
    EXPECT_EQ(kouchnirenko_mu(newton_diagram(f)), static_cast<long>(oracle.mu)) << s;
  }
}

TEST(Spectrum, ReferenceCurves) {
  EXPECT_EQ(spectrum_newton_curve(P("x^5+y^6+x^4y")).flat(),
            R({{-5, 8}, {-11, 24}, {-5, 12}, {-7, 24}, {-1, 4}, {-5, 24}, {-1, 8}, {-1, 12}, {-1, 24}, {0, 1},
               {1, 24}, {1, 12}, {1, 8}, {5, 24}, {1, 4}, {7, 24}, {5, 12}, {11, 24}, {5, 8}}));
  EXPECT_EQ(spectrum_newton_curve(P("x^4+y^5+xy^4")).flat(),
            R({{-11, 20}, {-7, 20}, {-3, 10}, {-3, 20}, {-1, 10}, {-1, 20}, {1, 20}, {1, 10}, {3, 20}, {3, 10},
               {7, 20}, {11, 20}}));
  EXPECT_EQ(spectrum_newton_curve(P("x^5+y^5+x^2y^2")).values,
            RM({{-1, 2, 1}, {-3, 10, 2}, {-1, 10, 2}, {0, 1, 1}, {1, 10, 2}, {3, 10, 2}, {1, 2, 1}}));
  EXPECT_EQ(spectrum_newton_curve(P("x^2+y^2")).flat(), R({{0, 1}}));
}

TEST(Spectrum, QuasiHomogeneous) {
  EXPECT_EQ(spectrum_quasihomogeneous(R({{1, 3}, {1, 3}}), P("x^3+y^3")).flat(), R({{-1, 3}, {0, 1}, {0, 1}, {1, 3}}));
  EXPECT_EQ(spectrum_quasihomogeneous(R({{1, 2}, {1, 2}}), P("x^2+y^2")).flat(), R({{0, 1}}));
  const auto zw = spectrum_quasihomogeneous(R({{1, 6}, {1, 5}}), P("z^6+w^5", {"z", "w"}));
  EXPECT_EQ(zw.mu(), 20u);
  EXPECT_EQ(zw.flat().front(), Rational(-19, 30));
  EXPECT_EQ(code_of([] { spectrum_quasihomogeneous(R({{1, 3}, {1, 3}}), P("x^3+y^4")); }),
            ErrorCode::NotQuasiHomogeneous);
  EXPECT_EQ(*detect_weights(P("x^4+y^5")), R({{1, 4}, {1, 5}}));
  EXPECT_FALSE(detect_weights(P("x^5+y^6+x^4y")).has_value());
  for (const char* s : {"x^3+y^3", "x^4+y^5", "x^3+y^6+x^2y^2", "x^2y+y^5"}) {
    const MultiPoly f = P(s);
    const auto w = detect_weights(f);
    ASSERT_TRUE(w.has_value()) << s;
    if (newton_diagram(f).convenient) {
      EXPECT_EQ(spectrum_newton_curve(f).values, spectrum_quasihomogeneous(*w, f).values) << s;
    }
    EXPECT_EQ(spectrum_quasihomogeneous(*w, f).mu(), QuotientAlgebra::jacobian(f).mu());
  }
}

TEST(Spectrum, ThomSebastiani) {
  const auto zero = make_spectrum(1, {Rational(0)});
  const auto joined = thom_sebastiani_join(zero, zero);
  EXPECT_EQ(joined.flat(), R({{1, 1}}));
  EXPECT_EQ(joined.n, 3);
  const auto x3 = spectrum_quasihomogeneous(R({{1, 3}}), P("x^3", {"x"}));
  EXPECT_EQ(x3.flat(), R({{-2, 3}, {-1, 3}}));
  EXPECT_EQ(thom_sebastiani_join(x3, x3).values, spectrum_newton_curve(P("x^3+y^3")).values);
  for (long a = 2; a <= 8; ++a) {
    for (long b = 2; b <= 8; ++b) {
      const MultiPoly f = P("x^" + std::to_string(a) + "+y^" + std::to_string(b));
      const auto sx = spectrum_quasihomogeneous({Rational(1, a)}, P("x^" + std::to_string(a), {"x"}));
      const auto sy = spectrum_quasihomogeneous({Rational(1, b)}, P("y^" + std::to_string(b), {"y"}));
      EXPECT_EQ(spectrum_quasihomogeneous({Rational(1, a), Rational(1, b)}, f).values,
                thom_sebastiani_join(sx, sy).values);
    }
  }
}

TEST(Spectrum, ReferenceThomSebastianiTable) {
  const auto g = spectrum_newton_curve(P("x^10+y^3+x^2y^2"));
  const auto gp = spectrum_newton_curve(P("z^6+w^5+z^4w^3", {"z", "w"}));
  const auto sp = thom_sebastiani_join(g, gp);
  EXPECT_EQ(sp.n, 3);
  EXPECT_EQ(sp.mu(), 280u);
  const std::vector<std::tuple<long, long, std::size_t>> table = {
      {-2, 15, 1}, {-1, 30, 1}, {1, 30, 1},  {1, 15, 2},  {2, 15, 1},  {1, 6, 2},   {1, 5, 2},   {7, 30, 2},
      {4, 15, 3},  {3, 10, 1},  {1, 3, 2},   {11, 30, 6}, {2, 5, 3},   {13, 30, 3}, {7, 15, 5},  {1, 2, 2},
      {8, 15, 7},  {17, 30, 8}, {3, 5, 4},   {19, 30, 5}, {2, 3, 6},   {7, 10, 6},  {11, 15, 9}, {23, 30, 9},
      {4, 5, 5},   {5, 6, 6},   {13, 15, 10}, {9, 10, 7}, {14, 15, 10}, {29, 30, 9}, {1, 1, 4},  {31, 30, 9},
      {16, 15, 10}, {11, 10, 7}, {17, 15, 10}, {7, 6, 6}, {6, 5, 5},   {37, 30, 9}, {19, 15, 9}, {13, 10, 6},
      {4, 3, 6},   {41, 30, 5}, {7, 5, 4},   {43, 30, 8}, {22, 15, 7}, {3, 2, 2},   {23, 15, 5}, {47, 30, 3},
      {8, 5, 3},   {49, 30, 6}, {5, 3, 2},   {17, 10, 1}, {26, 15, 3}, {53, 30, 2}, {9, 5, 2},   {11, 6, 2},
      {28, 15, 1}, {29, 15, 2}, {59, 30, 1}, {61, 30, 1}, {32, 15, 1}};
  EXPECT_EQ(sp.values, RM(table));
}

TEST(Spectrum, SymmetryKappaAndEigenvalues) {
  const auto sp = spectrum_newton_curve(P("x^5+y^5+x^2y^2"));
  const std::size_t mu = sp.mu();
  const auto flat = sp.flat();
  for (std::size_t i = 0; i < mu; ++i) {
    EXPECT_EQ(flat[i] + flat[mu - 1 - i], Rational(sp.n - 1));
    EXPECT_EQ(sp.kappa[sp.kappa[i]], i);
  }
  EXPECT_EQ(sp.kappa[5], 5u);
  EXPECT_EQ(sp.kappa[0], 10u);
  EXPECT_EQ(sp.level(0), 0);
  EXPECT_EQ(sp.level(10), 1);
  EXPECT_EQ(sp.hodge_level(10), 0);
  const auto q = monodromy_eigenvalues(sp);
  EXPECT_EQ(std::count(q.begin(), q.end(), Rational(1, 2)), 2);
  std::multiset<Rational> qs(q.begin(), q.end());
  for (const auto& x : q) {
    if (!x.is_zero()) EXPECT_EQ(qs.count(Rational(1) - x), qs.count(x));
  }
  EXPECT_EQ(monodromy_eigenvalues(make_spectrum(1, {Rational(0)})), R({{0, 1}}));
  const auto e1 = monodromy_eigenvalues(spectrum_newton_curve(P("x^5+y^6+x^4y")));
  EXPECT_EQ(e1.size(), 19u);
  for (const auto& x : e1) EXPECT_TRUE((x * Rational(120)).is_integer());
}

TEST(Spectrum, ExternalInput) {
  const auto sp = parse_external_spectrum("# Ex. 3\n-1/2:1\n-3/10:2\n-1/10:2\n0:1\n1/10:2\n3/10:2\n1/2:1\n", 1);
  EXPECT_EQ(sp.values, spectrum_newton_curve(P("x^5+y^5+x^2y^2")).values);
  EXPECT_EQ(code_of([] { parse_external_spectrum("-1/2:1\n", 1); }), ErrorCode::InvalidSpectrum);
  EXPECT_EQ(code_of([] { parse_external_spectrum("1/2\n", 1); }), ErrorCode::InvalidSpectrum);
  EXPECT_EQ(code_of([] { parse_external_spectrum("3/2:1\n-3/2:1\n", 1); }), ErrorCode::InvalidSpectrum);
  EXPECT_EQ(code_of([] { parse_external_spectrum("a/b:1\n", 1); }), ErrorCode::InvalidSpectrum);
  EXPECT_EQ(code_of([] { parse_external_spectrum("", 1); }), ErrorCode::InvalidSpectrum);
}

TEST(Grading, AdaptedBasisEx3) {
  const MultiPoly f = P("x^5+y^5+x^2y^2");
  const auto qa = QuotientAlgebra::jacobian(f);
  const auto s = spectral_summand(f, {0, 1});
  const auto gb = grade_basis(qa, s.grading, s.spectrum);
  EXPECT_EQ(gb.monomials.front(), (Monomial{0, 0}));
  EXPECT_EQ(gb.grading.front(), Rational(-1, 2));
  EXPECT_EQ(gb.monomials.back(), (Monomial{2, 2}));
  EXPECT_EQ(gb.grading.back(), Rational(1, 2));
  const auto go = graded_multiplication(gb.conjugate(qa.multiplication_matrix(f)), gb.grading);
  // f = (1/5) x^2y^2 in A_f, so the class of 1 goes to 1/5 times the top vector.
  EXPECT_EQ(go.graded_matrix.nonzeros(), 1u);
  EXPECT_EQ(go.graded_matrix.at(10, 0), Rational(1, 5));
  EXPECT_EQ(go.n_type(), (JordanType{{2, 1}, {1, 9}}));
  EXPECT_TRUE(go.higher_part.is_zero());
  EXPECT_EQ(qa.normal_form(f), qa.normal_form(P("1/5x^2y^2")));
}

TEST(Grading, FiltrationPropertiesOnCurves) {
  for (const char* s : {"x^5+y^6+x^4y", "x^4+y^5+xy^4", "x^10+y^3+x^2y^2", "x^3+y^7+x^2y^3", "x^3+y^3",
                        "x^7+y^7+x^3y^2+x^2y^4", "x^6+y^6+x^2y^3+x^3y^2"}) {
    const MultiPoly f = P(s);
    const auto qa = QuotientAlgebra::jacobian(f);
    const auto sum = spectral_summand(f, {0, 1});
    const auto gb = grade_basis(qa, sum.grading, sum.spectrum);
    // Span of basis elements of grade >= a equals the image of all monomials of grade >= a.
    const auto pool = monomials_below(2, qa.standard_basis().corner);
    for (const auto& [a, m] : sum.spectrum.values) {
      std::vector<Vec> direct;
      for (const auto& mono : pool) {
        if (sum.grading(mono.exponents()) >= a) direct.push_back(qa.coordinates(MultiPoly::term(mono)));
      }
      std::vector<Vec> adapted;
      for (std::size_t i = 0; i < gb.size(); ++i) {
        if (gb.grading[i] >= a) adapted.push_back(gb.to_standard.col(i));
      }
      EXPECT_EQ(Subspace::span(direct, qa.mu()), Subspace::span(adapted, qa.mu())) << s << " at " << a.str();
    }
    const Matrix mf = gb.conjugate(qa.multiplication_matrix(f));
    for (std::size_t r = 0; r < mf.rows(); ++r) {
      for (std::size_t c = 0; c < mf.cols(); ++c) {
        if (!mf.at(r, c).is_zero()) EXPECT_GE(gb.grading[r] - gb.grading[c], Rational(1)) << s;
      }
    }
    const auto go = graded_multiplication(mf, gb.grading);
    EXPECT_LE(nilpotency_index(go.graded_matrix), 2u) << s;
    EXPECT_EQ(go.graded_matrix + go.higher_part, mf);
  }
}

TEST(Grading, ReferenceExamplesNType) {
  for (const char* s : {"x^5+y^6+x^4y", "x^4+y^5+xy^4"}) {
    const MultiPoly f = P(s);
    const auto qa = QuotientAlgebra::jacobian(f);
    const auto sum = spectral_summand(f, {0, 1});
    const auto gb = grade_basis(qa, sum.grading, sum.spectrum);
    const auto go = graded_multiplication(gb.conjugate(qa.multiplication_matrix(f)), gb.grading);
    EXPECT_TRUE(go.graded_matrix.is_zero()) << s;
    EXPECT_EQ(go.n_type(), (JordanType{{1, qa.mu()}})) << s;
  }
}

TEST(Grading, ThomSebastianiBasis) {
  const std::vector<std::string> vars = {"x", "y", "z", "w"};
  const MultiPoly f = P("x^10+y^3+x^2y^2+z^6+w^5+z^4w^3", vars);
  const auto qa = QuotientAlgebra::jacobian(f);
  const std::vector<SpectralSummand> parts = {spectral_summand(P("x^10+y^3+x^2y^2"), {0, 1}),
                                              spectral_summand(P("z^6+w^5+z^4w^3", {"z", "w"}), {2, 3})};
  const auto cands = join_candidates(parts, 4);
  EXPECT_EQ(cands.size(), 280u);
  const auto sp = join_spectrum(parts);
  const auto gb = grade_basis(qa, join_grading(parts), sp, &cands);
  const Matrix mf = qa.multiplication_matrix(f);
  EXPECT_EQ(mf.rank(), 32u);
  const auto go = graded_multiplication(gb.conjugate(mf), gb.grading);
  EXPECT_EQ(go.n_type(), (JordanType{{2, 20}, {1, 240}}));
}

TEST(Grading, Mismatch) {
  const MultiPoly f = P("x^5+y^5+x^2y^2");
  const auto qa = QuotientAlgebra::jacobian(f);
  EXPECT_EQ(code_of([&] { grade_basis(qa, newton_grading(newton_diagram(f)), make_spectrum(1, [] {
                                        std::vector<Rational> v(11, Rational(0));
                                        return v;
                                      }())); }),
            ErrorCode::SpectrumMismatch);
  Matrix bad(2, 2);
  bad.at(1, 0) = Rational(1);
  EXPECT_EQ(code_of([&] { graded_multiplication(bad, {Rational(0), Rational(1, 2)}); }),
            ErrorCode::FiltrationViolation);
}
