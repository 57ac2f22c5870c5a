/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "singlab/hodgeforms/twisted.hpp"
#include "singlab/newtonspec/spectrum.hpp"

namespace singlab {

/// kappa(i) = mu-1-i, identity on the alpha = (n-1)/2 block (0-based).
std::vector<std::size_t> kappa_involution(const SpectrumData& sp);

TwistedMatrix build_S(const std::vector<std::size_t>& kappa);
/// Q[i][kappa(i)] = (-1)^{r} (2pi i)^n when alpha is not an integer and
/// (-1)^{r+1} (2pi i)^{n+1} when it is, with r = ceil(alpha_{kappa(i)}).
TwistedMatrix build_Q(const SpectrumData& sp, const std::vector<std::size_t>& kappa);
/// J = Q^{-1} S; throws NonDiagonalJ unless diagonal.
TwistedMatrix build_J(const TwistedMatrix& q, const TwistedMatrix& s);

/// Sign of J on each index against (-1)^{p_j}, per eigenvalue block.
struct JSignReport {
  /// epsilon with sign(J_jj) = epsilon * (-1)^{p_j}, or 0 if the block is
  /// empty or inconsistent.
  int epsilon_non_integer = 0;
  int epsilon_integer = 0;
  bool consistent = true;
};
JSignReport j_sign_report(const TwistedMatrix& j, const SpectrumData& sp);

struct AdaptedBasis {
  /// Columns: the adapted vectors in coordinates of the input basis.
  Matrix change;
  /// Principal grade of each vector, ascending.
  std::vector<Rational> grading;
  std::vector<std::size_t> kappa;
  /// Unnormalized diagonal value at kappa-fixed indices.
  std::map<std::size_t, Rational> fixed_scale;
  /// The achieved pairing: S with fixed_scale on the fixed diagonal.
  Matrix pattern;
  /// Scale factors D with pattern = S * D (1 off the fixed points).
  std::vector<Rational> pattern_scale;
};

/// Hyperbolic Gram-Schmidt on a graded basis (grading ascending). Each vector
/// is only corrected by vectors of equal or higher grade. Throws
/// GradingPairingClash when that is impossible.
AdaptedBasis adapt_basis(const Matrix& gram, const std::vector<Rational>& grading,
                         const std::vector<std::size_t>& kappa);

struct NSplit {
  Matrix n_top;
  Matrix n_1;
};
/// Jump exactly 1 goes to n_top, larger jumps to n_1; FiltrationViolation on
/// a jump below 1.
NSplit split_ntop_n1(const Matrix& mf_adapted, const std::vector<Rational>& grading);

struct MainTheoremCheck {
  bool holds = false;
  /// B_j - ((N_top + N_1)^T)^j S~ in rationals.
  Matrix residual;
  /// The same identity evaluated through Q J D over twisted scalars.
  bool twisted_holds = false;
};
MainTheoremCheck verify_main_theorem(unsigned j, const Matrix& bj_adapted, const NSplit& split,
                                     const AdaptedBasis& basis, const TwistedMatrix& q, const TwistedMatrix& jm);

/// u^T N_top^T (Q J D) v and u^T N_1^T (Q J D) v.
TwistedScalar b_top(const Vec& u, const Vec& v, const NSplit& split, const TwistedMatrix& q, const TwistedMatrix& jm,
                    const AdaptedBasis& basis);
TwistedScalar b_alg(const Vec& u, const Vec& v, const NSplit& split, const TwistedMatrix& q, const TwistedMatrix& jm,
                    const AdaptedBasis& basis);

}  // namespace singlab
