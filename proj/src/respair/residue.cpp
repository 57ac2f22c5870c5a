/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/respair/residue.hpp"

#include <unordered_map>

#include "singlab/error.hpp"
#include "singlab/parallel.hpp"

namespace singlab {

Rational ResidueFunctional::operator()(const QuotientAlgebra& qa, const MultiPoly& h) const {
  return qa.normal_form(h).coeff(socle.monomial) * socle_value;
}

ResidueFunctional residue_functional(const QuotientAlgebra& qa, const MultiPoly& f) {
  ResidueFunctional l;
  l.socle = socle_generator(qa, f);
  l.socle_value = Rational(static_cast<long>(qa.mu())) / l.socle.hess_coeff;
  l.values = Vec(qa.mu());
  l.values[l.socle.index] = l.socle_value;
  return l;
}

Matrix residue_gram(const QuotientAlgebra& qa, const ResidueFunctional& l) {
  const std::size_t mu = qa.mu();
  const auto& basis = qa.basis();
  std::unordered_map<Monomial, std::size_t> slot;
  std::vector<Monomial> products;
  std::vector<std::size_t> which(mu * mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t k = 0; k < mu; ++k) {
      const Monomial p = basis[i] * basis[k];
      auto [it, inserted] = slot.emplace(p, products.size());
      if (inserted) products.push_back(p);
      which[i * mu + k] = it->second;
    }
  }
  std::vector<Rational> value(products.size());
  parallel_for(products.size(), [&](std::size_t idx) {
    if (auto direct = qa.index_of(products[idx])) {
      value[idx] = l.values[*direct];
      return;
    }
    value[idx] = l(qa, MultiPoly::term(products[idx]));
  });
  Matrix b(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t k = 0; k < mu; ++k) b.at(i, k) = value[which[i * mu + k]];
  }
  if (b.rank() != mu) {
    throw Error(ErrorCode::DegeneratePairing, "respair", "residue pairing is degenerate");
  }
  return b;
}

PairingMatrix pairing_matrix(unsigned j, const Matrix& b0, const Matrix& mf) {
  PairingMatrix p;
  p.j = j;
  p.entries = b0;
  const Matrix mt = mf.transpose();
  for (unsigned k = 0; k < j; ++k) p.entries = mt * p.entries;
  return p;
}

PairingMatrix pairing_matrix_direct(unsigned j, const QuotientAlgebra& qa, const MultiPoly& f,
                                    const ResidueFunctional& l) {
  const std::size_t mu = qa.mu();
  const MultiPoly fj = pow(f, j);
  PairingMatrix p;
  p.j = j;
  p.entries = Matrix(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t k = 0; k < mu; ++k) {
      p.entries.at(i, k) = l(qa, fj.times_term(qa.basis()[i] * qa.basis()[k], Rational(1)));
    }
  }
  return p;
}

RadicalRank radical_rank(const Matrix& b) {
  RadicalRank r;
  r.radical = b.nullspace();
  r.rank = b.cols() - r.radical.size();
  return r;
}

}  // namespace singlab
