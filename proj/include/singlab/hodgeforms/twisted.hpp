/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "singlab/polycore/matrix.hpp"

namespace singlab {

/// Finite sum of c_k (2 pi i)^k with rational c_k; zero coefficients are
/// never stored.
class TwistedScalar {
 public:
  TwistedScalar() = default;
  TwistedScalar(const Rational& c, int twist = 0);  // NOLINT: rationals embed with twist 0

  const std::map<int, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of (2 pi i)^k.
  Rational coeff(int k) const;
  /// True when a single twist carries the whole value.
  bool is_pure() const { return c_.size() == 1; }
  /// Only defined for pure scalars; throws Internal otherwise.
  TwistedScalar inverse() const;

  TwistedScalar& operator+=(const TwistedScalar& o);
  friend TwistedScalar operator+(TwistedScalar a, const TwistedScalar& b) { return a += b; }
  friend TwistedScalar operator*(const TwistedScalar& a, const TwistedScalar& b);
  TwistedScalar operator-() const;
  friend bool operator==(const TwistedScalar& a, const TwistedScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TwistedScalar& a, const TwistedScalar& b) { return !(a == b); }

  /// e.g. "-(2pi i)^2", "1/2*(2pi i)^-1", "0".
  std::string str() const;

 private:
  void add_term(int k, const Rational& c);
  std::map<int, Rational> c_;
};

/// Sparse square matrix over TwistedScalar.
class TwistedMatrix {
 public:
  TwistedMatrix() = default;
  explicit TwistedMatrix(std::size_t n) : rows_(n) {}
  static TwistedMatrix from_rational(const Matrix& m);

  std::size_t size() const { return rows_.size(); }
  TwistedScalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const TwistedScalar& v);
  const std::map<std::size_t, TwistedScalar>& row(std::size_t i) const { return rows_[i]; }

  TwistedMatrix transpose() const;
  friend TwistedMatrix operator*(const TwistedMatrix& a, const TwistedMatrix& b);
  friend TwistedMatrix operator+(const TwistedMatrix& a, const TwistedMatrix& b);
  TwistedMatrix operator-() const;
  friend bool operator==(const TwistedMatrix& a, const TwistedMatrix& b) { return a.rows_ == b.rows_; }

  bool is_diagonal() const;
  bool is_zero() const;
  /// Inverse of a matrix with exactly one pure entry per row and column.
  TwistedMatrix monomial_inverse() const;
  /// Rational matrix of the (2 pi i)^k coefficients.
  Matrix twist_part(int k) const;
  /// True when only twist 0 occurs.
  bool is_rational() const;

 private:
  std::vector<std::map<std::size_t, TwistedScalar>> rows_;
};

}  // namespace singlab
