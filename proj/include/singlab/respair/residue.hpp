/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <vector>

#include "singlab/localalg/quotient.hpp"
#include "singlab/polycore/matrix.hpp"

namespace singlab {

/// Linear functional on A_f vanishing on J_f, normalized by L(Hess f) = mu.
/// It is supported on the socle monomial.
struct ResidueFunctional {
  /// L on each basis monomial.
  Vec values;
  SocleGenerator socle;
  /// L(socle monomial) = mu / hess_coeff.
  Rational socle_value;

  Rational operator()(const QuotientAlgebra& qa, const MultiPoly& h) const;
  Rational on_coordinates(const Vec& v) const { return v[socle.index] * socle_value; }
};

ResidueFunctional residue_functional(const QuotientAlgebra& qa, const MultiPoly& f);

struct PairingMatrix {
  unsigned j = 0;
  /// entries(i, k) = L(f^j * basis[i] * basis[k]).
  Matrix entries;
};

/// B_0 filled entrywise from normal forms of basis products; throws
/// DegeneratePairing if singular.
Matrix residue_gram(const QuotientAlgebra& qa, const ResidueFunctional& l);

/// B_j = (M_f^T)^j B_0.
PairingMatrix pairing_matrix(unsigned j, const Matrix& b0, const Matrix& mf);
/// B_j from L(f^j g_i g_k) directly; used to check the product formula.
PairingMatrix pairing_matrix_direct(unsigned j, const QuotientAlgebra& qa, const MultiPoly& f,
                                    const ResidueFunctional& l);

struct RadicalRank {
  std::size_t rank = 0;
  std::vector<Vec> radical;
};

RadicalRank radical_rank(const Matrix& b);

}  // namespace singlab
