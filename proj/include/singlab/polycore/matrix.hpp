/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "singlab/polycore/rational.hpp"

namespace singlab {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Rational& c);
/// v += c * w
void axpy(Vec& v, const Rational& c, const Vec& w);
Rational dot(const Vec& a, const Vec& b);
Vec unit_vector(std::size_t n, std::size_t i);
/// Scales v to a primitive integer vector whose first nonzero entry is positive.
Vec primitive_integer(const Vec& v);

/// Dense row-major rational matrix. Arithmetic skips zero entries, which
/// keeps the nilpotent operators met in practice cheap to multiply.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& at(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);
  bool is_zero() const;
  bool is_square() const { return r_ == c_; }
  bool is_symmetric() const;
  std::size_t nonzeros() const;

  Matrix transpose() const;
  Matrix power(unsigned k) const;
  Vec apply(const Vec& v) const;
  /// Row vector times matrix.
  Vec apply_left(const Vec& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Rational& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {x : A x = 0}, one vector per free column, in RREF-derived form.
  std::vector<Vec> nullspace() const;
  Rational determinant() const;
  /// Throws Internal if singular.
  Matrix inverse() const;

  std::string str() const;

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<Rational> d_;
};

/// Linear subspace of Q^n stored as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace kernel(const Matrix& m);
  static Subspace image(const Matrix& m);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Adds v to the span; returns false if it was already contained.
  bool add(const Vec& v);
  /// v minus its projection along the pivot coordinates; zero iff v lies here.
  Vec residual(const Vec& v) const;
  /// Matrix of the residual map, whose kernel is this subspace.
  Matrix residual_matrix() const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Image of this subspace under m.
  Subspace mapped(const Matrix& m) const;
  /// {x : m x in this}.
  Subspace preimage(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  void reduce(std::vector<Vec> vectors);

  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace singlab
