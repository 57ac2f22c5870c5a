/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singlab/localalg/quotient.hpp"
#include "singlab/newtonspec/newton.hpp"

namespace singlab {

/// Spectrum of a germ in n+1 variables, values in (-1, n).
struct SpectrumData {
  int n = 0;
  /// Sorted distinct values with multiplicities.
  std::vector<std::pair<Rational, std::size_t>> values;
  /// Spectral index i (0-based) -> partner index; mu-1-i except on the
  /// alpha = (n-1)/2 block, where it is the identity.
  std::vector<std::size_t> kappa;
  /// Spectral index -> index of N applied to it, when that is nonzero.
  /// Empty until filled from the graded multiplication map.
  std::vector<std::optional<std::size_t>> nu_n;

  std::size_t mu() const;
  /// Values repeated by multiplicity, ascending.
  std::vector<Rational> flat() const;
  /// ceil(alpha_i), the level of index i in the V-flag.
  long level(std::size_t i) const;
  /// n - ceil(alpha_i).
  long hodge_level(std::size_t i) const;
  std::string str() const;
};

/// Builds sorted SpectrumData with kappa. Throws InvalidSpectrum when a value
/// lies outside (-1, n) or the symmetry alpha_i + alpha_{mu-1-i} = n-1 fails.
SpectrumData make_spectrum(int n, std::vector<Rational> values);

SpectrumData spectrum_newton_curve(const MultiPoly& f);

/// Weights w with sum_i w_i a_i = 1 on the whole support, if unique and in (0, 1).
std::optional<std::vector<Rational>> detect_weights(const MultiPoly& f);
SpectrumData spectrum_quasihomogeneous(const std::vector<Rational>& weights, const MultiPoly& f);
SpectrumData spectrum_quasihomogeneous(const std::vector<Rational>& weights, const MultiPoly& f,
                                       const QuotientAlgebra& qa);

SpectrumData thom_sebastiani_join(const SpectrumData& a, const SpectrumData& b);

/// q in [0, 1) with eigenvalue exp(-2 pi i q), one per spectral value.
std::vector<Rational> monodromy_eigenvalues(const SpectrumData& sp);

/// Lines "num/den:mult" (or "num:mult"); '#' starts a comment. Throws
/// InvalidSpectrum on malformed input.
SpectrumData parse_external_spectrum(const std::string& text, int n);

}  // namespace singlab
