/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <vector>

#include "singlab/polycore/poly.hpp"

namespace singlab {

/// Standard basis of an ideal of the local ring with respect to LocalOrder.
/// Generators are monic and minimal: no leading monomial divides another.
struct StandardBasis {
  std::size_t nvars = 0;
  std::vector<MultiPoly> generators;
  std::vector<Monomial> leads;
  /// True when every variable has a pure power among the leading monomials.
  bool finite = false;
  /// When finite, every monomial of total degree >= corner lies in the ideal.
  unsigned corner = 0;

  bool reduces(const Monomial& m) const;
  /// Index of a generator whose leading monomial divides m, or leads.size().
  std::size_t divisor_of(const Monomial& m) const;
};

/// Mora's tangent cone algorithm. Generators with a unit leading term give
/// the unit ideal, represented by the single generator 1.
StandardBasis standard_basis(const std::vector<MultiPoly>& gens);

/// Weak normal form with ecart-driven reduction: the result has a leading
/// monomial outside the leading ideal, or is zero.
MultiPoly mora_weak_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

/// Fully reduced normal form: every monomial of the result is standard.
/// Requires a finite quotient.
MultiPoly mora_normal_form(const MultiPoly& p, const StandardBasis& sb);

/// S-polynomial of two polynomials with respect to their leading terms.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

}  // namespace singlab
