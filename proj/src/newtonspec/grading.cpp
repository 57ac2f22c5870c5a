/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/newtonspec/grading.hpp"

#include <algorithm>
#include <numeric>

#include "singlab/error.hpp"

namespace singlab {

MonomialGrading newton_grading(const NewtonDiagram& nd) {
  return [nd](const std::vector<unsigned>& a) {
    return newton_distance({static_cast<long>(a.at(0)) + 1, static_cast<long>(a.at(1)) + 1}, nd) - Rational(1);
  };
}

MonomialGrading weight_grading(const std::vector<Rational>& weights) {
  return [weights](const std::vector<unsigned>& a) {
    Rational s(-1);
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * Rational(static_cast<long>(a.at(i) + 1));
    return s;
  };
}

SpectralSummand spectral_summand(const MultiPoly& g, std::vector<std::size_t> vars) {
  if (vars.size() != g.nvars()) throw Error(ErrorCode::WrongArity, "newtonspec", "summand variable count mismatch");
  SpectralSummand s;
  s.vars = std::move(vars);
  const QuotientAlgebra qa = QuotientAlgebra::jacobian(g);
  bool newton = false;
  if (g.nvars() == 2) {
    const NewtonDiagram nd = newton_diagram(g);
    if (nd.convenient && nondegeneracy_check(g, nd)) {
      s.spectrum = spectrum_newton_curve(g);
      s.grading = newton_grading(nd);
      newton = true;
    }
  }
  if (!newton) {
    const auto w = detect_weights(g);
    if (!w) {
      throw Error(ErrorCode::NotQuasiHomogeneous, "newtonspec",
                  "no supported spectrum route (needs a convenient nondegenerate plane curve or weights); "
                  "supply an external spectrum");
    }
    s.spectrum = spectrum_quasihomogeneous(*w, g, qa);
    s.grading = weight_grading(*w);
  }
  s.basis = grade_basis(qa, s.grading, s.spectrum).monomials;
  return s;
}

MonomialGrading join_grading(const std::vector<SpectralSummand>& summands) {
  return [summands](const std::vector<unsigned>& a) {
    Rational s(static_cast<long>(summands.size()) - 1);
    for (const auto& part : summands) {
      std::vector<unsigned> sub;
      for (auto v : part.vars) sub.push_back(a.at(v));
      s += part.grading(sub);
    }
    return s;
  };
}

SpectrumData join_spectrum(const std::vector<SpectralSummand>& summands) {
  if (summands.empty()) throw Error(ErrorCode::InvalidConfig, "newtonspec", "no summands");
  SpectrumData sp = summands.front().spectrum;
  for (std::size_t i = 1; i < summands.size(); ++i) sp = thom_sebastiani_join(sp, summands[i].spectrum);
  return sp;
}

Matrix GradedBasis::conjugate(const Matrix& op) const { return from_standard * op * to_standard; }

Matrix GradedBasis::congruent(const Matrix& form) const { return to_standard.transpose() * form * to_standard; }

std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e < left; ++e) {
      m.set(i, e);
      fill(i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (bound > 0) fill(0, bound);
  std::sort(out.begin(), out.end(), LocalDescending());
  return out;
}

GradedBasis grade_basis(const QuotientAlgebra& qa, const MonomialGrading& grading, const SpectrumData& spectrum,
                        const std::vector<Monomial>* candidates) {
  const std::size_t mu = qa.mu();
  std::vector<Monomial> pool;
  if (candidates) {
    pool = *candidates;
    std::sort(pool.begin(), pool.end(), LocalDescending());
  } else {
    pool = monomials_below(qa.nvars(), qa.standard_basis().corner);
  }
  std::vector<Rational> grade;
  for (const auto& m : pool) grade.push_back(grading(m.exponents()));
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grade[b] < grade[a]; });

  GradedBasis gb;
  std::vector<Vec> columns;
  Subspace span(mu);
  for (std::size_t idx : order) {
    if (span.dim() == mu) break;
    Vec v = qa.coordinates(MultiPoly::term(pool[idx]));
    if (!span.add(v)) continue;
    gb.monomials.push_back(pool[idx]);
    gb.grading.push_back(grade[idx]);
    columns.push_back(std::move(v));
  }
  std::vector<Rational> sorted = gb.grading;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != spectrum.flat()) {
    throw Error(ErrorCode::SpectrumMismatch, "newtonspec",
                "graded pieces of the induced filtration do not reproduce the spectrum");
  }
  // Reverse to ascending grade so spectral and basis order agree.
  std::reverse(gb.monomials.begin(), gb.monomials.end());
  std::reverse(gb.grading.begin(), gb.grading.end());
  std::reverse(columns.begin(), columns.end());
  gb.to_standard = Matrix::from_columns(columns, mu);
  gb.from_standard = gb.to_standard.inverse();
  return gb;
}

std::vector<Monomial> join_candidates(const std::vector<SpectralSummand>& summands, std::size_t nvars) {
  std::vector<Monomial> out{Monomial(nvars)};
  for (const auto& part : summands) {
    std::vector<Monomial> next;
    for (const auto& partial : out) {
      for (const auto& b : part.basis) {
        Monomial m = partial;
        for (std::size_t k = 0; k < part.vars.size(); ++k) m.set(part.vars[k], m[part.vars[k]] + b[k]);
        next.push_back(m);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> spectral_order(const std::vector<Rational>& grading) {
  std::vector<std::size_t> order(grading.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return grading[a] < grading[b]; });
  return order;
}

GradedOperator graded_multiplication(const Matrix& mf, const std::vector<Rational>& grading) {
  const std::size_t mu = mf.rows();
  if (grading.size() != mu) throw Error(ErrorCode::Internal, "newtonspec", "grading size mismatch");
  GradedOperator g;
  g.grading = grading;
  g.graded_matrix = Matrix(mu, mu);
  g.higher_part = Matrix(mu, mu);
  for (std::size_t r = 0; r < mu; ++r) {
    for (std::size_t c = 0; c < mu; ++c) {
      const Rational& e = mf.at(r, c);
      if (e.is_zero()) continue;
      const Rational jump = grading[r] - grading[c];
      if (jump < Rational(1)) {
        throw Error(ErrorCode::FiltrationViolation, "newtonspec",
                    "multiplication by f lowers the grading: jump " + jump.str() + " at entry (" + std::to_string(r) +
                        "," + std::to_string(c) + ")");
      }
      (jump == Rational(1) ? g.graded_matrix : g.higher_part).at(r, c) = e;
    }
  }
  g.jordan = jordan_chains(g.graded_matrix, &grading);
  return g;
}

}  // namespace singlab
