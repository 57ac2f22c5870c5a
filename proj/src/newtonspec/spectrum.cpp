/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/newtonspec/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "singlab/error.hpp"

namespace singlab {

std::size_t SpectrumData::mu() const {
  std::size_t total = 0;
  for (const auto& [a, m] : values) total += m;
  return total;
}

std::vector<Rational> SpectrumData::flat() const {
  std::vector<Rational> out;
  for (const auto& [a, m] : values) out.insert(out.end(), m, a);
  return out;
}

long SpectrumData::level(std::size_t i) const { return flat().at(i).ceil(); }

long SpectrumData::hodge_level(std::size_t i) const { return n - level(i); }

std::string SpectrumData::str() const {
  std::string out;
  for (const auto& [a, m] : values) {
    if (!out.empty()) out += ' ';
    out += "(" + a.str() + "," + std::to_string(m) + ")";
  }
  return out;
}

SpectrumData make_spectrum(int n, std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  const Rational lo(-1);
  const Rational hi(n);
  for (const auto& a : values) {
    if (!(lo < a && a < hi)) {
      throw Error(ErrorCode::InvalidSpectrum, "newtonspec", "spectral value " + a.str() + " outside (-1, n)");
    }
  }
  const std::size_t mu = values.size();
  for (std::size_t i = 0; i < mu; ++i) {
    if (values[i] + values[mu - 1 - i] != Rational(n - 1)) {
      throw Error(ErrorCode::InvalidSpectrum, "newtonspec", "spectrum is not symmetric about (n-1)/2");
    }
  }
  SpectrumData sp;
  sp.n = n;
  for (const auto& a : values) {
    if (sp.values.empty() || sp.values.back().first != a) {
      sp.values.emplace_back(a, 1);
    } else {
      ++sp.values.back().second;
    }
  }
  const Rational middle(n - 1, 2);
  for (std::size_t i = 0; i < mu; ++i) sp.kappa.push_back(values[i] == middle ? i : mu - 1 - i);
  return sp;
}

SpectrumData spectrum_newton_curve(const MultiPoly& f) {
  const NewtonDiagram nd = newton_diagram(f);
  if (!nd.convenient) throw Error(ErrorCode::NotConvenient, "newtonspec", "germ is not convenient");
  if (!nondegeneracy_check(f, nd)) {
    throw Error(ErrorCode::DegenerateNewtonBoundary, "newtonspec", "germ is degenerate on its Newton boundary");
  }
  const long xmax = nd.vertices.front().first;
  const long ymax = nd.vertices.back().second;
  std::vector<Rational> values;
  for (long a = 1; a <= xmax; ++a) {
    for (long b = 1; b <= ymax; ++b) {
      const Rational l = newton_distance({a, b}, nd);
      if (l <= Rational(1)) {
        values.push_back(l - Rational(1));
        if (l < Rational(1)) values.push_back(Rational(1) - l);
      }
    }
  }
  if (static_cast<long>(values.size()) != kouchnirenko_mu(nd)) {
    throw Error(ErrorCode::Internal, "newtonspec", "lattice count disagrees with the Kouchnirenko number");
  }
  return make_spectrum(1, std::move(values));
}

std::optional<std::vector<Rational>> detect_weights(const MultiPoly& f) {
  const std::size_t n = f.nvars();
  if (f.is_zero() || n == 0) return std::nullopt;
  std::vector<Vec> rows;
  for (const auto& t : f.terms()) {
    Vec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(static_cast<long>(t.mono[i]));
    row[n] = Rational(1);
    rows.push_back(std::move(row));
  }
  Matrix m = Matrix::from_rows(rows, n + 1);
  const auto pivots = m.rref();
  if (pivots.size() != n || (!pivots.empty() && pivots.back() == n)) return std::nullopt;
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = m.at(i, n);
    if (!(Rational(0) < w[i] && w[i] < Rational(1))) return std::nullopt;
  }
  return w;
}

SpectrumData spectrum_quasihomogeneous(const std::vector<Rational>& weights, const MultiPoly& f) {
  return spectrum_quasihomogeneous(weights, f, QuotientAlgebra::jacobian(f));
}

SpectrumData spectrum_quasihomogeneous(const std::vector<Rational>& weights, const MultiPoly& f,
                                       const QuotientAlgebra& qa) {
  if (weights.size() != f.nvars()) throw Error(ErrorCode::WrongArity, "newtonspec", "one weight per variable expected");
  for (const auto& t : f.terms()) {
    Rational d;
    for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * Rational(static_cast<long>(t.mono[i]));
    if (d != Rational(1)) {
      throw Error(ErrorCode::NotQuasiHomogeneous, "newtonspec", "term of weighted degree " + d.str() + " != 1");
    }
  }
  std::vector<Rational> values;
  for (const auto& m : qa.basis()) {
    Rational a(-1);
    for (std::size_t i = 0; i < weights.size(); ++i) a += weights[i] * Rational(static_cast<long>(m[i] + 1));
    values.push_back(a);
  }
  return make_spectrum(static_cast<int>(f.nvars()) - 1, std::move(values));
}

SpectrumData thom_sebastiani_join(const SpectrumData& a, const SpectrumData& b) {
  std::map<Rational, std::size_t> joined;
  for (const auto& [x, mx] : a.values) {
    for (const auto& [y, my] : b.values) joined[x + y + Rational(1)] += mx * my;
  }
  std::vector<Rational> values;
  for (const auto& [v, m] : joined) values.insert(values.end(), m, v);
  return make_spectrum(a.n + b.n + 1, std::move(values));
}

std::vector<Rational> monodromy_eigenvalues(const SpectrumData& sp) {
  std::vector<Rational> out;
  for (const auto& a : sp.flat()) out.push_back((-a).frac());
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumData parse_external_spectrum(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rational> values;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (line.empty()) continue;
    const auto colon = line.find(':');
    try {
      if (colon == std::string::npos) throw Error(ErrorCode::InvalidSpectrum, "newtonspec", "missing ':'");
      const Rational a = Rational::parse(line.substr(0, colon));
      const std::string mult = line.substr(colon + 1);
      if (mult.empty() || !std::all_of(mult.begin(), mult.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorCode::InvalidSpectrum, "newtonspec", "bad multiplicity");
      }
      const long m = std::stol(mult);
      if (m <= 0) throw Error(ErrorCode::InvalidSpectrum, "newtonspec", "multiplicity must be positive");
      values.insert(values.end(), m, a);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::InvalidSpectrum, "newtonspec",
                  "external spectrum line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (values.empty()) throw Error(ErrorCode::InvalidSpectrum, "newtonspec", "external spectrum is empty");
  return make_spectrum(n, std::move(values));
}

}  // namespace singlab
