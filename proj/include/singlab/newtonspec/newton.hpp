/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <utility>
#include <vector>

#include "singlab/polycore/poly.hpp"

namespace singlab {

using LatticePoint = std::pair<long, long>;

/// Compact edge of a plane Newton diagram, lying on p*x + q*y = c with
/// (p, q) primitive and positive.
struct NewtonFace {
  LatticePoint from;  // larger first coordinate
  LatticePoint to;
  long p = 0;
  long q = 0;
  long c = 0;

  /// (p*x + q*y) / c.
  Rational form(long x, long y) const;
};

struct NewtonDiagram {
  /// Ordered by decreasing first coordinate.
  std::vector<LatticePoint> vertices;
  std::vector<NewtonFace> faces;
  /// Meets both coordinate axes.
  bool convenient = false;
};

/// Lower-left convex hull of support + R_{>=0}^2. Collinear points are not
/// vertices. The origin is rejected.
NewtonDiagram newton_diagram(const std::vector<LatticePoint>& support);
/// Throws WrongArity unless f has two variables.
NewtonDiagram newton_diagram(const MultiPoly& f);

/// Minimum over faces of the normalized face forms. Requires a convenient
/// diagram (NotConvenient otherwise).
Rational newton_distance(const LatticePoint& p, const NewtonDiagram& nd);

/// Terms of f lying on the given face.
MultiPoly face_polynomial(const MultiPoly& f, const NewtonFace& face);
/// A face polynomial is degenerate when it has a critical point in the torus,
/// i.e. when its one-variable dehomogenization has a repeated root.
bool face_is_nondegenerate(const MultiPoly& face_poly, const NewtonFace& face);
/// True iff every compact face is nondegenerate. A diagram without compact
/// faces (a single vertex) is reported degenerate.
bool nondegeneracy_check(const MultiPoly& f, const NewtonDiagram& nd);

/// Twice the area enclosed by the axes and the diagram; NotConvenient otherwise.
long newton_twice_area(const NewtonDiagram& nd);
/// 2 * area under the diagram - x intercept - y intercept + 1.
long kouchnirenko_mu(const NewtonDiagram& nd);

}  // namespace singlab
