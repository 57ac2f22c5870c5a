/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/hodgeforms/hodge.hpp"

#include <optional>

#include "singlab/error.hpp"

namespace singlab {

namespace {

// (-1)^e (2 pi i)^twist
TwistedScalar sign_twist(long e, int twist) { return TwistedScalar(Rational((e % 2 + 2) % 2 == 0 ? 1 : -1), twist); }

// Elementary congruence on the Gram matrix g and the basis columns of v:
// vector l += c * vector m.
void add_multiple(Matrix& g, Matrix& v, std::size_t l, std::size_t m, const Rational& c) {
  if (c.is_zero()) return;
  const std::size_t n = g.rows();
  for (std::size_t r = 0; r < n; ++r) {
    if (!v.at(r, m).is_zero()) v.at(r, l) += c * v.at(r, m);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.at(m, k).is_zero()) g.at(l, k) += c * g.at(m, k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.at(k, m).is_zero()) g.at(k, l) += c * g.at(k, m);
  }
}

void scale(Matrix& g, Matrix& v, std::size_t l, const Rational& c) {
  const std::size_t n = g.rows();
  for (std::size_t r = 0; r < n; ++r) v.at(r, l) *= c;
  for (std::size_t k = 0; k < n; ++k) g.at(l, k) *= c;
  for (std::size_t k = 0; k < n; ++k) g.at(k, l) *= c;
}

void swap_vectors(Matrix& g, Matrix& v, std::size_t a, std::size_t b) {
  const std::size_t n = g.rows();
  for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, a), v.at(r, b));
  for (std::size_t k = 0; k < n; ++k) std::swap(g.at(a, k), g.at(b, k));
  for (std::size_t k = 0; k < n; ++k) std::swap(g.at(k, a), g.at(k, b));
}

[[noreturn]] void clash(const std::string& what) {
  throw Error(ErrorCode::GradingPairingClash, "hodgeforms", what);
}

TwistedMatrix pattern_twisted(const TwistedMatrix& q, const TwistedMatrix& jm, const AdaptedBasis& basis) {
  TwistedMatrix d(basis.pattern_scale.size());
  for (std::size_t i = 0; i < basis.pattern_scale.size(); ++i) d.set(i, i, TwistedScalar(basis.pattern_scale[i]));
  return q * jm * d;
}

TwistedScalar bilinear(const Vec& u, const Matrix& op, const Vec& v, const TwistedMatrix& form) {
  // u^T op^T form v = (op u)^T form v
  const Vec ou = op.apply(u);
  TwistedScalar s;
  for (std::size_t i = 0; i < ou.size(); ++i) {
    if (ou[i].is_zero()) continue;
    for (const auto& [k, f] : form.row(i)) {
      if (!v[k].is_zero()) s += TwistedScalar(ou[i] * v[k]) * f;
    }
  }
  return s;
}

}  // namespace

std::vector<std::size_t> kappa_involution(const SpectrumData& sp) {
  const auto flat = sp.flat();
  const std::size_t mu = flat.size();
  const Rational middle(sp.n - 1, 2);
  std::vector<std::size_t> k(mu);
  for (std::size_t i = 0; i < mu; ++i) k[i] = flat[i] == middle ? i : mu - 1 - i;
  return k;
}

TwistedMatrix build_S(const std::vector<std::size_t>& kappa) {
  TwistedMatrix s(kappa.size());
  for (std::size_t i = 0; i < kappa.size(); ++i) s.set(i, kappa[i], TwistedScalar(Rational(1)));
  return s;
}

TwistedMatrix build_Q(const SpectrumData& sp, const std::vector<std::size_t>& kappa) {
  const auto flat = sp.flat();
  TwistedMatrix q(kappa.size());
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    const Rational& a = flat[kappa[i]];
    const long r = a.ceil();
    if (a.is_integer()) {
      q.set(i, kappa[i], sign_twist(r + 1, sp.n + 1));
    } else {
      q.set(i, kappa[i], sign_twist(r, sp.n));
    }
  }
  return q;
}

TwistedMatrix build_J(const TwistedMatrix& q, const TwistedMatrix& s) {
  TwistedMatrix j = q.monomial_inverse() * s;
  if (!j.is_diagonal()) throw Error(ErrorCode::NonDiagonalJ, "hodgeforms", "Q^{-1} S is not diagonal");
  return j;
}

JSignReport j_sign_report(const TwistedMatrix& jm, const SpectrumData& sp) {
  JSignReport rep;
  const auto flat = sp.flat();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const TwistedScalar d = jm.at(i, i);
    if (!d.is_pure()) {
      rep.consistent = false;
      continue;
    }
    const int sign = d.terms().begin()->second.sign();
    const int parity = ((sp.hodge_level(i) % 2) + 2) % 2 == 0 ? 1 : -1;
    const int eps = sign * parity;
    int& slot = flat[i].is_integer() ? rep.epsilon_integer : rep.epsilon_non_integer;
    if (slot == 0) {
      slot = eps;
    } else if (slot != eps) {
      rep.consistent = false;
    }
  }
  if (!rep.consistent) rep.epsilon_integer = rep.epsilon_non_integer = 0;
  return rep;
}

AdaptedBasis adapt_basis(const Matrix& gram, const std::vector<Rational>& grading,
                         const std::vector<std::size_t>& kappa) {
  const std::size_t mu = gram.rows();
  if (grading.size() != mu || kappa.size() != mu) throw Error(ErrorCode::Internal, "hodgeforms", "size mismatch");
  Matrix g = gram;
  Matrix v = Matrix::identity(mu);
  std::vector<bool> done(mu, false);
  AdaptedBasis out;
  out.kappa = kappa;
  out.grading = grading;
  out.pattern_scale.assign(mu, Rational(1));

  auto check_grade = [&](std::size_t target, std::size_t source) {
    if (grading[source] < grading[target]) {
      clash("correction would lower the grade of vector " + std::to_string(target));
    }
  };

  for (std::size_t i = 0; i < mu; ++i) {
    if (done[i]) continue;
    const std::size_t k = kappa[i];
    if (k == i) {
      if (g.at(i, i).is_zero()) {
        std::optional<std::size_t> partner;
        for (std::size_t j = i + 1; j < mu && !partner; ++j) {
          if (!done[j] && grading[j] == grading[i] && !g.at(i, j).is_zero()) partner = j;
        }
        if (!partner) clash("self-paired vector " + std::to_string(i) + " is isotropic");
        const Rational plus = g.at(i, i) + Rational(2) * g.at(i, *partner) + g.at(*partner, *partner);
        add_multiple(g, v, i, *partner, plus.is_zero() ? Rational(-1) : Rational(1));
      }
      const Rational c = g.at(i, i);
      for (std::size_t l = 0; l < mu; ++l) {
        if (l == i || done[l] || g.at(l, i).is_zero()) continue;
        check_grade(l, i);
        add_multiple(g, v, l, i, -(g.at(l, i) / c));
      }
      out.fixed_scale[i] = c;
      out.pattern_scale[i] = c;
      done[i] = true;
      continue;
    }
    if (done[k] || k < i) throw Error(ErrorCode::Internal, "hodgeforms", "kappa is not compatible with the ordering");
    if (g.at(i, k).is_zero()) {
      std::optional<std::size_t> other;
      for (std::size_t l = 0; l < mu && !other; ++l) {
        if (l != i && l != k && !done[l] && grading[l] == grading[k] && !g.at(i, l).is_zero()) other = l;
      }
      if (!other) clash("vector " + std::to_string(i) + " pairs trivially with the complementary grade");
      swap_vectors(g, v, *other, k);
    }
    scale(g, v, k, g.at(i, k).inverse());
    if (!g.at(k, k).is_zero()) clash("partner vector " + std::to_string(k) + " is not isotropic");
    if (!g.at(i, i).is_zero()) {
      check_grade(i, k);
      add_multiple(g, v, i, k, -(g.at(i, i) / Rational(2)));
    }
    for (std::size_t l = 0; l < mu; ++l) {
      if (l == i || l == k || done[l]) continue;
      const Rational a = g.at(l, k);
      const Rational b = g.at(l, i);
      if (!a.is_zero()) {
        check_grade(l, i);
        add_multiple(g, v, l, i, -a);
      }
      if (!b.is_zero()) {
        check_grade(l, k);
        add_multiple(g, v, l, k, -b);
      }
    }
    done[i] = done[k] = true;
  }

  out.change = std::move(v);
  out.pattern = Matrix(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) out.pattern.at(i, kappa[i]) = kappa[i] == i ? out.pattern_scale[i] : Rational(1);
  if (!(g == out.pattern)) throw Error(ErrorCode::Internal, "hodgeforms", "adapted Gram matrix misses the pattern");
  return out;
}

NSplit split_ntop_n1(const Matrix& mf_adapted, const std::vector<Rational>& grading) {
  const std::size_t mu = mf_adapted.rows();
  NSplit s{Matrix(mu, mu), Matrix(mu, mu)};
  for (std::size_t r = 0; r < mu; ++r) {
    for (std::size_t c = 0; c < mu; ++c) {
      const Rational& e = mf_adapted.at(r, c);
      if (e.is_zero()) continue;
      const Rational jump = grading[r] - grading[c];
      if (jump < Rational(1)) {
        throw Error(ErrorCode::FiltrationViolation, "hodgeforms",
                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ") has grade jump " + jump.str());
      }
      (jump == Rational(1) ? s.n_top : s.n_1).at(r, c) = e;
    }
  }
  return s;
}

MainTheoremCheck verify_main_theorem(unsigned j, const Matrix& bj_adapted, const NSplit& split,
                                     const AdaptedBasis& basis, const TwistedMatrix& q, const TwistedMatrix& jm) {
  const Matrix t = split.n_top + split.n_1;
  Matrix rhs = basis.pattern;
  const Matrix tt = t.transpose();
  for (unsigned k = 0; k < j; ++k) rhs = tt * rhs;
  MainTheoremCheck chk;
  chk.residual = bj_adapted - rhs;
  chk.holds = chk.residual.is_zero();

  TwistedMatrix lhs = pattern_twisted(q, jm, basis);
  const TwistedMatrix ttw = TwistedMatrix::from_rational(tt);
  for (unsigned k = 0; k < j; ++k) lhs = ttw * lhs;
  chk.twisted_holds = lhs.is_rational() || lhs.is_zero() ? lhs.twist_part(0) == bj_adapted : false;
  return chk;
}

TwistedScalar b_top(const Vec& u, const Vec& v, const NSplit& split, const TwistedMatrix& q, const TwistedMatrix& jm,
                    const AdaptedBasis& basis) {
  return bilinear(u, split.n_top, v, pattern_twisted(q, jm, basis));
}

TwistedScalar b_alg(const Vec& u, const Vec& v, const NSplit& split, const TwistedMatrix& q, const TwistedMatrix& jm,
                    const AdaptedBasis& basis) {
  return bilinear(u, split.n_1, v, pattern_twisted(q, jm, basis));
}

}  // namespace singlab
