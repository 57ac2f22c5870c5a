/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "singlab/newtonspec/spectrum.hpp"
#include "singlab/nilstruct/jordan.hpp"

namespace singlab {

/// Spectral value attached to a monomial, given by its exponent vector.
using MonomialGrading = std::function<Rational(const std::vector<unsigned>&)>;

/// alpha(z^a) = l(a + 1) - 1 for a convenient plane diagram.
MonomialGrading newton_grading(const NewtonDiagram& nd);
/// alpha(z^a) = sum_i w_i (a_i + 1) - 1.
MonomialGrading weight_grading(const std::vector<Rational>& weights);

/// Monomial basis of A_f adapted to the filtration induced by a grading:
/// F_a is spanned by the classes of monomials of grade >= a, and the basis
/// elements of grade >= a span F_a.
struct GradedBasis {
  std::vector<Monomial> monomials;
  std::vector<Rational> grading;
  /// Column i: coordinates of monomials[i] in the standard monomial basis.
  Matrix to_standard;
  Matrix from_standard;

  std::size_t size() const { return monomials.size(); }
  /// Operator given in the standard basis, rewritten in this basis.
  Matrix conjugate(const Matrix& op) const;
  /// Bilinear form given in the standard basis, rewritten in this basis.
  Matrix congruent(const Matrix& form) const;
};

/// Monomials of degree < bound, in local order (lowest degree first).
std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound);

/// Builds the adapted basis from the candidate monomials (default: all
/// monomials below the staircase corner). Within a grade, candidates are
/// taken in local order. Throws SpectrumMismatch unless the graded
/// dimensions equal the spectral multiplicities.
GradedBasis grade_basis(const QuotientAlgebra& qa, const MonomialGrading& grading, const SpectrumData& spectrum,
                        const std::vector<Monomial>* candidates = nullptr);

/// One summand of a Thom-Sebastiani sum, acting on a subset of the variables.
struct SpectralSummand {
  std::vector<std::size_t> vars;
  SpectrumData spectrum;
  MonomialGrading grading;
  /// Graded basis of the summand's own Jacobian algebra.
  std::vector<Monomial> basis;
};

/// Picks the Newton route for plane curves and detected weights otherwise.
/// g is written in its own variables.
SpectralSummand spectral_summand(const MultiPoly& g, std::vector<std::size_t> vars);
/// Sum of the summand gradings plus (number of summands - 1).
MonomialGrading join_grading(const std::vector<SpectralSummand>& summands);
SpectrumData join_spectrum(const std::vector<SpectralSummand>& summands);
/// Products of the summand basis monomials, embedded in nvars variables.
std::vector<Monomial> join_candidates(const std::vector<SpectralSummand>& summands, std::size_t nvars);

/// Basis indices sorted by grading (stable), i.e. spectral index -> basis index.
std::vector<std::size_t> spectral_order(const std::vector<Rational>& grading);

struct GradedOperator {
  std::vector<Rational> grading;
  /// Entries of M_f with grading jump exactly 1.
  Matrix graded_matrix;
  /// Entries of M_f with jump > 1.
  Matrix higher_part;
  /// Chains of the graded matrix with homogeneous seeds.
  JordanData jordan;
  JordanType n_type() const { return jordan.type; }
};

/// Throws FiltrationViolation on a nonzero entry with jump < 1.
GradedOperator graded_multiplication(const Matrix& mf, const std::vector<Rational>& grading);

}  // namespace singlab
