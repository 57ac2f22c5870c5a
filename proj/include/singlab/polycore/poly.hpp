/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlab/polycore/monomial.hpp"
#include "singlab/polycore/rational.hpp"

namespace singlab {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted in
/// descending LocalOrder, so the first term is the leading term.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : n_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly term(const Monomial& m, const Rational& c = Rational(1));
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  /// Accepts unsorted terms with possible repeats and zeros.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  static MultiPoly parse(std::string_view text, const std::vector<std::string>& vars);

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  /// Zero if absent.
  Rational coeff(const Monomial& m) const;
  /// Largest total degree among terms; 0 for the zero polynomial.
  unsigned max_degree() const;
  /// Smallest total degree among terms (degree of the leading term).
  unsigned min_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  std::set<Monomial, LocalDescending> support() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_term(const Monomial& m, const Rational& c) const;
  /// this - c * m * other, computed in one merge pass.
  void sub_mul_term(const Rational& c, const Monomial& m, const MultiPoly& other);
  /// Makes the leading coefficient 1.
  MultiPoly monic() const;
  /// Drops every term of total degree >= bound.
  MultiPoly truncated(unsigned bound) const;
  MultiPoly partial(std::size_t i) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Canonical text: descending LocalOrder, coefficients as "a/b".
  std::string str(const std::vector<std::string>& vars) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }

 private:
  void merge(const MultiPoly& o, const Rational& factor, const Monomial* shift);

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);
MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly partial(const MultiPoly& p, std::size_t i);
/// Determinant of the matrix of second partials.
MultiPoly hessian_determinant(const MultiPoly& f);

/// Prints with variables named z0, z1, ...
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// "x,y" or "x, y" style list.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace singlab
