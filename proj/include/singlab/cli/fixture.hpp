/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "singlab/hodgeforms/binding.hpp"
#include "singlab/hodgeforms/hodge.hpp"

namespace singlab {

/// The 6x6 operator t = N + N_1 of the four-variable join, with the free
/// parameter a. Basis e1..e6 carries the grades below, paired by e_i <-> e_{7-i}.
struct JoinFixture {
  Rational a;
  Matrix t;
  std::vector<Rational> grading;
  SpectrumData spectrum;
  std::vector<std::size_t> kappa;
  TwistedMatrix s, q, j;
  /// Identity change of basis; pattern is the anti-diagonal S.
  AdaptedBasis basis;
  NSplit split;
  BindingReport binding;
  /// B_j = (t^T)^j S for j = 0 .. n+1.
  std::vector<Matrix> pairings;
  std::vector<MainTheoremCheck> theorem;
};

/// Throws InvalidConfig for a = 0.
JoinFixture join_fixture(const Rational& a);

}  // namespace singlab
