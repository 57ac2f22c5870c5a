/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/cli/fixture.hpp"

#include "singlab/error.hpp"

namespace singlab {

JoinFixture join_fixture(const Rational& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidConfig, "cli", "fixture parameter a must be nonzero");
  JoinFixture fx;
  fx.a = a;
  fx.t = Matrix(6, 6);
  fx.t.at(2, 0) = Rational(1);
  fx.t.at(3, 0) = a;
  fx.t.at(5, 2) = a;
  fx.t.at(5, 3) = Rational(1);
  // Any grades with unit jumps on 1->3, 4->6 and larger ones on 1->4, 3->6.
  fx.grading = {Rational(-2, 15), Rational(1, 2), Rational(13, 15), Rational(17, 15), Rational(3, 2), Rational(32, 15)};
  fx.spectrum = make_spectrum(3, fx.grading);
  fx.kappa = kappa_involution(fx.spectrum);
  fx.s = build_S(fx.kappa);
  fx.q = build_Q(fx.spectrum, fx.kappa);
  fx.j = build_J(fx.q, fx.s);

  fx.basis.change = Matrix::identity(6);
  fx.basis.grading = fx.grading;
  fx.basis.kappa = fx.kappa;
  fx.basis.pattern = Matrix(6, 6);
  for (std::size_t i = 0; i < 6; ++i) fx.basis.pattern.at(i, fx.kappa[i]) = Rational(1);
  fx.basis.pattern_scale.assign(6, Rational(1));

  fx.split = split_ntop_n1(fx.t, fx.grading);
  fx.binding = bind_chains(fx.split, fx.grading);
  const Matrix tt = fx.t.transpose();
  Matrix bj = fx.basis.pattern;
  for (unsigned k = 0; k <= 4; ++k) {
    fx.pairings.push_back(bj);
    fx.theorem.push_back(verify_main_theorem(k, bj, fx.split, fx.basis, fx.q, fx.j));
    bj = tt * bj;
  }
  return fx;
}

}  // namespace singlab
