/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "singlab/error.hpp"
#include "singlab/localalg/quotient.hpp"
#include "singlab/nilstruct/weight_filtration.hpp"

using namespace singlab;

namespace {

Matrix block_diagonal_nilpotent(const std::vector<std::size_t>& sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  Matrix m(n, n);
  std::size_t off = 0;
  for (auto s : sizes) {
    for (std::size_t k = 0; k + 1 < s; ++k) m.at(off + k + 1, off + k) = Rational(1);
    off += s;
  }
  return m;
}

// Columns are the images of e1..e6 under the fixture operator.
Matrix fixture6(const Rational& a) {
  Matrix t(6, 6);
  t.at(2, 0) = 1;
  t.at(3, 0) = a;
  t.at(5, 2) = a;
  t.at(5, 3) = 1;
  return t;
}

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p.at(i, j) = d(rng);
    }
    if (!p.determinant().is_zero()) return p;
  }
}

void check_structure(const Matrix& m) {
  const JordanData jd = jordan_chains(m);
  // rank profile identity
  std::size_t total = 0;
  for (const auto& [size, count] : jd.type) total += size * count;
  EXPECT_EQ(total, m.rows());
  Matrix pk = Matrix::identity(m.rows());
  for (std::size_t s = 1; s <= jd.type.rbegin()->first + 1; ++s) {
    Matrix next = pk * m;
    std::size_t at_least = 0;
    for (const auto& [size, count] : jd.type) at_least += size >= s ? count : 0;
    EXPECT_EQ(at_least, pk.rank() - next.rank());
    pk = next;
  }
  // M in the adapted basis is delta_{j, nu(j)}
  const Matrix t = jd.adapted_basis_matrix;
  const Matrix in_basis = t.inverse() * m * t;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const bool hit = jd.nu[j] && *jd.nu[j] == i;
      EXPECT_EQ(in_basis.at(i, j), Rational(hit ? 1 : 0));
    }
    if (j + 1 < m.rows() && jd.nu[j] && jd.nu[j + 1]) EXPECT_LT(*jd.nu[j], *jd.nu[j + 1]);
  }
  const WeightFiltration wf = weight_filtration(jd);
  for (const auto& [j, d] : wf.graded_dims) EXPECT_EQ(d, wf.graded_dims.at(-j)) << "j=" << j;
  for (int j = -wf.m0; j <= wf.m0 + 1; ++j) {
    EXPECT_TRUE(wf.at(j + 2).contains(wf.at(j).mapped(m)));
  }
  const auto dec = primitive_decomposition(wf, m);
  for (const auto& [j, parts] : dec) {
    std::size_t sum = 0;
    for (const auto& [k, d] : parts) sum += d;
    EXPECT_EQ(sum, wf.graded_dims.at(j)) << "j=" << j;
  }
  // M^j : Gr_{-j} -> Gr_j is a bijection
  for (int j = 1; j <= wf.m0; ++j) {
    const Matrix mj = m.power(static_cast<unsigned>(j));
    const Subspace img = wf.at(-j).mapped(mj) + wf.at(j + 1);
    EXPECT_EQ(img.dim() - wf.at(j + 1).dim(), wf.graded_dims.at(j));
    EXPECT_EQ(wf.graded_dims.at(-j), wf.graded_dims.at(j));
  }
}

}  // namespace

TEST(Jordan, SingleBlock) {
  const Matrix m = block_diagonal_nilpotent({3});
  const auto jd = jordan_chains(m);
  ASSERT_EQ(jd.chains.size(), 1u);
  EXPECT_EQ(jd.chains[0].size(), 3u);
  EXPECT_EQ(jd.type, (JordanType{{3, 1}}));
  const auto wf = weight_filtration(jd);
  EXPECT_EQ(wf.graded_dims, (std::map<int, std::size_t>{{-2, 1}, {-1, 0}, {0, 1}, {1, 0}, {2, 1}}));
  EXPECT_EQ(wf.primitive_dims, (std::map<int, std::size_t>{{-2, 1}, {-1, 0}, {0, 0}}));
}

TEST(Jordan, ReferenceExampleOneShape) {
  const MultiPoly f = MultiPoly::parse("x^5+y^6+x^4y", {"x", "y"});
  const auto qa = QuotientAlgebra::jacobian(f);
  const Matrix mf = qa.multiplication_matrix(f);
  const auto jd = jordan_chains(mf);
  EXPECT_EQ(jd.type, (JordanType{{2, 2}, {1, 15}}));
  const auto wf = weight_filtration(jd);
  EXPECT_EQ(wf.graded_dims, (std::map<int, std::size_t>{{-1, 2}, {0, 15}, {1, 2}}));
  EXPECT_EQ(wf.primitive_dims, (std::map<int, std::size_t>{{-1, 2}, {0, 15}}));
  check_structure(mf);
}

TEST(Jordan, ZeroMatrix) {
  const Matrix z(5, 5);
  const auto jd = jordan_chains(z);
  EXPECT_EQ(jd.type, (JordanType{{1, 5}}));
  const auto wf = weight_filtration(jd);
  EXPECT_EQ(wf.at(0).dim(), 5u);
  EXPECT_EQ(wf.graded_dims, (std::map<int, std::size_t>{{0, 5}}));
}

TEST(Jordan, SixBySixFixture) {
  for (int a : {1, 2, -3}) {
    const Matrix t = fixture6(a);
    const auto jd = jordan_chains(t);
    EXPECT_EQ(jd.type, (JordanType{{3, 1}, {1, 3}}));
    const auto wf = weight_filtration(jd);
    EXPECT_EQ(wf.primitive_dims.at(-2), 1u);
    EXPECT_EQ(wf.primitive_dims.at(-1), 0u);
    EXPECT_EQ(wf.primitive_dims.at(0), 3u);
    check_structure(t);
  }
  // t^2(e1) = 2 e6 for a = 1
  const Matrix t = fixture6(1);
  EXPECT_EQ((t * t).apply(unit_vector(6, 0)), scaled(unit_vector(6, 5), 2));
}

TEST(Jordan, NotNilpotent) {
  Matrix m = Matrix::identity(2);
  try {
    jordan_chains(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNilpotent);
  }
}

TEST(Jordan, ConjugationInvariance) {
  std::mt19937 rng(17);
  const std::vector<std::vector<std::size_t>> shapes = {{4, 2, 1}, {3, 3, 1, 1}, {2, 2, 2}, {5, 1}, {3, 2, 2, 1}};
  for (const auto& shape : shapes) {
    const Matrix m = block_diagonal_nilpotent(shape);
    const Matrix p = random_invertible(rng, m.rows());
    const Matrix c = p.inverse() * m * p;
    const auto a = weight_filtration(jordan_chains(m));
    const auto b = weight_filtration(jordan_chains(c));
    EXPECT_EQ(a.graded_dims, b.graded_dims);
    EXPECT_EQ(a.primitive_dims, b.primitive_dims);
    check_structure(c);
  }
}

TEST(Jordan, GradedSeedsAreHomogeneous) {
  // e0 -> e1 with grades 0 -> 1, e2 -> e3 with grades 0 -> 1
  Matrix m(4, 4);
  m.at(1, 0) = 1;
  m.at(3, 2) = 2;
  m.at(3, 0) = 1;
  const std::vector<Rational> grading = {0, 1, 0, 1};
  const auto jd = jordan_chains(m, &grading);
  for (const auto& chain : jd.chains) {
    for (const auto& v : chain) {
      std::set<Rational> grades;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) grades.insert(grading[i]);
      }
      EXPECT_EQ(grades.size(), 1u);
    }
  }
}
