/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "singlab/localalg/standard_basis.hpp"
#include "singlab/polycore/matrix.hpp"
#include "singlab/polycore/poly.hpp"

namespace singlab {

/// Finite dimensional quotient O/I of the local ring, with the standard
/// monomials as basis. basis()[0] is the unit.
class QuotientAlgebra {
 public:
  /// Throws NotIsolated when the quotient is infinite dimensional.
  static QuotientAlgebra of_ideal(const std::vector<MultiPoly>& gens);
  /// The Jacobian algebra O/(f_0, ..., f_n). Throws NotSingular when f(0) != 0
  /// or some partial derivative is a unit.
  static QuotientAlgebra jacobian(const MultiPoly& f);

  std::size_t nvars() const { return sb_.nvars; }
  std::size_t mu() const { return basis_.size(); }
  const StandardBasis& standard_basis() const { return sb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  MultiPoly normal_form(const MultiPoly& p) const { return mora_normal_form(p, sb_); }
  /// Coordinates of the class of p in the monomial basis.
  Vec coordinates(const MultiPoly& p) const;
  MultiPoly from_coordinates(const Vec& v) const;
  /// Column j holds the coordinates of g * basis[j].
  Matrix multiplication_matrix(const MultiPoly& g) const;

 private:
  StandardBasis sb_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t> index_;
};

struct MilnorTjurina {
  std::size_t mu = 0;
  std::size_t tau = 0;
};

/// Checks that f defines a singular point at the origin.
void require_singular_at_origin(const MultiPoly& f);
std::vector<MultiPoly> jacobian_generators(const MultiPoly& f);
MilnorTjurina milnor_tjurina(const MultiPoly& f);
/// dim O/(f, J_f), computed from scratch.
std::size_t tjurina_number(const MultiPoly& f);

struct SocleGenerator {
  Monomial monomial;
  std::size_t index = 0;
  Rational hess_coeff;
};

/// The smallest standard monomial spans the socle; verified by checking the
/// common kernel of the variable multiplications is one dimensional.
SocleGenerator socle_generator(const QuotientAlgebra& qa, const MultiPoly& f);

}  // namespace singlab
