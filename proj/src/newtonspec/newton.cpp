/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/newtonspec/newton.hpp"

#include <algorithm>
#include <numeric>

#include "singlab/error.hpp"

namespace singlab {

namespace {

// (b - a) x (c - a)
long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

using UPoly = std::vector<Rational>;  // coefficient of t^k at index k

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

Rational NewtonFace::form(long x, long y) const { return Rational(p * x + q * y, c); }

NewtonDiagram newton_diagram(const std::vector<LatticePoint>& support) {
  if (support.empty()) throw Error(ErrorCode::InvalidConfig, "newtonspec", "empty support");
  std::vector<LatticePoint> pts = support;
  for (const auto& pt : pts) {
    if (pt.first < 0 || pt.second < 0) throw Error(ErrorCode::InvalidConfig, "newtonspec", "negative exponent");
    if (pt.first == 0 && pt.second == 0) {
      throw Error(ErrorCode::InvalidConfig, "newtonspec", "support contains the origin");
    }
  }
  std::sort(pts.begin(), pts.end());
  // Pareto-minimal points: increasing x, strictly decreasing y.
  std::vector<LatticePoint> minimal;
  for (const auto& pt : pts) {
    if (minimal.empty() || pt.second < minimal.back().second) minimal.push_back(pt);
  }
  std::vector<LatticePoint> hull;
  for (const auto& pt : minimal) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonDiagram nd;
  nd.vertices.assign(hull.rbegin(), hull.rend());
  nd.convenient = hull.front().first == 0 && hull.back().second == 0;
  for (std::size_t i = 0; i + 1 < nd.vertices.size(); ++i) {
    NewtonFace face;
    face.from = nd.vertices[i];
    face.to = nd.vertices[i + 1];
    const long dx = face.from.first - face.to.first;
    const long dy = face.to.second - face.from.second;
    const long g = std::gcd(dx, dy);
    face.p = dy / g;
    face.q = dx / g;
    face.c = face.p * face.from.first + face.q * face.from.second;
    nd.faces.push_back(face);
  }
  return nd;
}

NewtonDiagram newton_diagram(const MultiPoly& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::WrongArity, "newtonspec", "Newton diagram needs exactly 2 variables");
  std::vector<LatticePoint> support;
  for (const auto& t : f.terms()) support.emplace_back(t.mono[0], t.mono[1]);
  return newton_diagram(support);
}

Rational newton_distance(const LatticePoint& p, const NewtonDiagram& nd) {
  if (!nd.convenient || nd.faces.empty()) {
    throw Error(ErrorCode::NotConvenient, "newtonspec", "Newton distance needs a convenient diagram");
  }
  Rational best = nd.faces.front().form(p.first, p.second);
  for (const auto& face : nd.faces) best = std::min(best, face.form(p.first, p.second));
  return best;
}

MultiPoly face_polynomial(const MultiPoly& f, const NewtonFace& face) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (face.p * static_cast<long>(t.mono[0]) + face.q * static_cast<long>(t.mono[1]) == face.c) terms.push_back(t);
  }
  return MultiPoly::from_terms(f.nvars(), std::move(terms));
}

bool face_is_nondegenerate(const MultiPoly& face_poly, const NewtonFace& face) {
  // Points on the face are from + k*(-q, p); t = y^p / x^q.
  const long steps = (face.from.first - face.to.first) / face.q;
  UPoly poly(steps + 1);
  for (const auto& t : face_poly.terms()) {
    const long k = (face.from.first - static_cast<long>(t.mono[0])) / face.q;
    poly[k] = t.coeff;
  }
  if (poly.front().is_zero() || poly.back().is_zero()) return false;
  UPoly deriv;
  for (std::size_t k = 1; k < poly.size(); ++k) deriv.push_back(poly[k] * Rational(static_cast<long>(k)));
  return gcd_degree(poly, deriv) == 0;
}

bool nondegeneracy_check(const MultiPoly& f, const NewtonDiagram& nd) {
  if (nd.faces.empty()) return false;
  for (const auto& face : nd.faces) {
    if (!face_is_nondegenerate(face_polynomial(f, face), face)) return false;
  }
  return true;
}

long newton_twice_area(const NewtonDiagram& nd) {
  if (!nd.convenient) throw Error(ErrorCode::NotConvenient, "newtonspec", "area needs a convenient diagram");
  std::vector<LatticePoint> poly{{0, 0}};
  for (const auto& v : nd.vertices) poly.push_back(v);
  long twice_area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice_area += a.first * b.second - b.first * a.second;
  }
  return std::abs(twice_area);
}

long kouchnirenko_mu(const NewtonDiagram& nd) {
  if (!nd.convenient) throw Error(ErrorCode::NotConvenient, "newtonspec", "Kouchnirenko number needs a convenient diagram");
  return newton_twice_area(nd) - nd.vertices.front().first - nd.vertices.back().second + 1;
}

}  // namespace singlab
