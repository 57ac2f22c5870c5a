/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/localalg/quotient.hpp"

#include "singlab/error.hpp"
#include "singlab/localalg/staircase.hpp"

namespace singlab {

QuotientAlgebra QuotientAlgebra::of_ideal(const std::vector<MultiPoly>& gens) {
  QuotientAlgebra qa;
  qa.sb_ = singlab::standard_basis(gens);
  if (!qa.sb_.finite) {
    const auto var = variable_without_pure_power(qa.sb_.leads, qa.sb_.nvars);
    throw Error(ErrorCode::NotIsolated, "localalg",
                "germ has non-isolated singularity: no pure power of variable " + std::to_string(*var) +
                    " among the leading monomials");
  }
  qa.basis_ = staircase(qa.sb_.leads, qa.sb_.nvars);
  for (std::size_t i = 0; i < qa.basis_.size(); ++i) qa.index_.emplace(qa.basis_[i], i);
  return qa;
}

void require_singular_at_origin(const MultiPoly& f) {
  const Monomial one(f.nvars());
  if (!f.coeff(one).is_zero()) {
    throw Error(ErrorCode::NotSingular, "localalg", "f(0) != 0: the germ does not pass through the origin");
  }
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (!f.partial(i).coeff(one).is_zero()) {
      throw Error(ErrorCode::NotSingular, "localalg",
                  "partial derivative " + std::to_string(i) + " is nonzero at the origin: the germ is smooth");
    }
  }
}

std::vector<MultiPoly> jacobian_generators(const MultiPoly& f) {
  std::vector<MultiPoly> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(f.partial(i));
  return gens;
}

QuotientAlgebra QuotientAlgebra::jacobian(const MultiPoly& f) {
  require_singular_at_origin(f);
  return of_ideal(jacobian_generators(f));
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec QuotientAlgebra::coordinates(const MultiPoly& p) const {
  Vec v(mu());
  const MultiPoly nf = normal_form(p);
  for (const auto& t : nf.terms()) v[index_.at(t.mono)] = t.coeff;
  return v;
}

MultiPoly QuotientAlgebra::from_coordinates(const Vec& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) terms.push_back({basis_[i], v[i]});
  }
  return MultiPoly::from_terms(nvars(), std::move(terms));
}

Matrix QuotientAlgebra::multiplication_matrix(const MultiPoly& g) const {
  Matrix m(mu(), mu());
  for (std::size_t j = 0; j < mu(); ++j) m.set_col(j, coordinates(g.times_term(basis_[j], Rational(1))));
  return m;
}

std::size_t tjurina_number(const MultiPoly& f) {
  require_singular_at_origin(f);
  auto gens = jacobian_generators(f);
  gens.push_back(f);
  return QuotientAlgebra::of_ideal(gens).mu();
}

MilnorTjurina milnor_tjurina(const MultiPoly& f) {
  return {QuotientAlgebra::jacobian(f).mu(), tjurina_number(f)};
}

SocleGenerator socle_generator(const QuotientAlgebra& qa, const MultiPoly& f) {
  const std::size_t mu = qa.mu();
  const std::size_t n = qa.nvars();
  Matrix stacked(n * mu, mu);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix xi = qa.multiplication_matrix(MultiPoly::variable(n, i));
    for (std::size_t r = 0; r < mu; ++r) {
      for (std::size_t c = 0; c < mu; ++c) stacked.at(i * mu + r, c) = xi.at(r, c);
    }
  }
  const auto socle = stacked.nullspace();
  SocleGenerator out;
  out.index = mu - 1;
  out.monomial = qa.basis()[out.index];
  if (socle.size() != 1 || !is_zero(Vec(socle[0].begin(), socle[0].end() - 1))) {
    throw Error(ErrorCode::SocleNotOneDimensional, "localalg",
                "socle has dimension " + std::to_string(socle.size()) + " or is not spanned by the last standard monomial");
  }
  out.hess_coeff = qa.normal_form(hessian_determinant(f)).coeff(out.monomial);
  if (out.hess_coeff.is_zero()) {
    throw Error(ErrorCode::SocleNotOneDimensional, "localalg", "Hessian class has no socle component");
  }
  return out;
}

}  // namespace singlab
