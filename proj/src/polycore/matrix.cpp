/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/polycore/matrix.hpp"

#include <sstream>

#include "singlab/error.hpp"

namespace singlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Internal, "polycore", what);
}

}  // namespace

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& v, const Rational& c) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r[i] = v[i] * c;
  }
  return r;
}

void axpy(Vec& v, const Rational& c, const Vec& w) {
  require(v.size() == w.size(), "vector size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] += c * w[i];
  }
}

Rational dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Vec primitive_integer(const Vec& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_class num = x.raw().get_num() * (l / x.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return v;
  Vec r(v.size());
  int lead = 0;
  for (const auto& x : v) {
    if (!x.is_zero()) {
      lead = x.sign();
      break;
    }
  }
  const Rational factor(mpq_class(mpz_class(l * lead), g));
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
  return r;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  require(v.size() == r_, "column length mismatch");
  for (std::size_t i = 0; i < r_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const { return singlab::is_zero(d_); }

bool Matrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = i + 1; j < c_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : d_) n += x.is_zero() ? 0 : 1;
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix Matrix::power(unsigned k) const {
  require(is_square(), "power of non-square matrix");
  Matrix r = identity(r_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  require(v.size() == c_, "matrix-vector size mismatch");
  Vec out(r_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < r_; ++i) {
      const Rational& a = at(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Vec Matrix::apply_left(const Vec& v) const {
  require(v.size() == r_, "vector-matrix size mismatch");
  Vec out(c_);
  for (std::size_t i = 0; i < r_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < c_; ++j) {
      const Rational& a = at(i, j);
      if (!a.is_zero()) out[j] += v[i] * a;
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.c_ == b.r_, "matrix product size mismatch");
  Matrix out(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i) {
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const Rational& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.r_ == b.r_ && a.c_ == b.c_, "matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.d_.size(); ++i) {
    if (!b.d_[i].is_zero()) out.d_[i] += b.d_[i];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.r_ == b.r_ && a.c_ == b.c_, "matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.d_.size(); ++i) {
    if (!b.d_[i].is_zero()) out.d_[i] -= b.d_[i];
  }
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out(r_, c_);
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (!d_[i].is_zero()) out.d_[i] = d_[i] * c;
  }
  return out;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < c_ && prow < r_; ++col) {
    std::size_t sel = r_;
    for (std::size_t i = prow; i < r_; ++i) {
      if (!at(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == r_) continue;
    if (sel != prow) {
      for (std::size_t j = 0; j < c_; ++j) std::swap(at(sel, j), at(prow, j));
    }
    const Rational inv = at(prow, col).inverse();
    for (std::size_t j = col; j < c_; ++j) {
      if (!at(prow, j).is_zero()) at(prow, j) *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = col + 1; j < c_; ++j) {
      if (!at(prow, j).is_zero()) nz.push_back(j);
    }
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == prow || at(i, col).is_zero()) continue;
      const Rational factor = at(i, col);
      at(i, col) = Rational(0);
      for (std::size_t j : nz) at(i, j) -= factor * at(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<Vec> Matrix::nullspace() const {
  Matrix red = *this;
  const auto pivots = red.rref();
  std::vector<bool> is_pivot(c_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < c_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(c_);
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red.at(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

Rational Matrix::determinant() const {
  require(is_square(), "determinant of non-square matrix");
  Matrix a = *this;
  Rational det(1);
  for (std::size_t col = 0; col < c_; ++col) {
    std::size_t sel = r_;
    for (std::size_t i = col; i < r_; ++i) {
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == r_) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < c_; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const Rational inv = a.at(col, col).inverse();
    for (std::size_t i = col + 1; i < r_; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rational factor = a.at(i, col) * inv;
      for (std::size_t j = col; j < c_; ++j) {
        if (!a.at(col, j).is_zero()) a.at(i, j) -= factor * a.at(col, j);
      }
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  require(is_square(), "inverse of non-square matrix");
  Matrix aug(r_, 2 * c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = Rational(1);
  }
  const auto pivots = aug.rref();
  require(pivots.size() == r_ && (r_ == 0 || pivots.back() == r_ - 1), "matrix is singular");
  Matrix inv(r_, c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  }
  return inv;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]\n";
  }
  return os.str();
}

void Subspace::reduce(std::vector<Vec> vectors) {
  Matrix m = Matrix::from_rows(vectors, n_);
  pivots_ = m.rref();
  basis_.clear();
  for (std::size_t k = 0; k < pivots_.size(); ++k) basis_.push_back(m.row(k));
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  s.reduce(vectors);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(ambient, i));
  return span(units, ambient);
}

Subspace Subspace::kernel(const Matrix& m) { return span(m.nullspace(), m.cols()); }

Subspace Subspace::image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vec c = m.col(j);
    if (!singlab::is_zero(c)) cols.push_back(std::move(c));
  }
  return span(cols, m.rows());
}

Vec Subspace::residual(const Vec& v) const {
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (!c.is_zero()) axpy(r, -c, basis_[k]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return singlab::is_zero(residual(v)); }

bool Subspace::add(const Vec& v) {
  require(v.size() == n_, "subspace ambient mismatch");
  Vec r = residual(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  const Rational inv = r[p].inverse();
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& b : basis_) {
    if (!b[p].is_zero()) axpy(b, -b[p], r);
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Matrix Subspace::residual_matrix() const {
  Matrix r(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) r.set_col(j, residual(unit_vector(n_, j)));
  return r;
}

Subspace Subspace::operator+(const Subspace& o) const {
  require(n_ == o.n_, "subspace ambient mismatch");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(all, n_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(n_ == o.n_, "subspace ambient mismatch");
  if (basis_.empty() || o.basis_.empty()) return Subspace(n_);
  // Coordinates c with sum c_k b_k in o.
  std::vector<Vec> images;
  for (const auto& b : basis_) images.push_back(o.residual(b));
  const Matrix r = Matrix::from_columns(images, n_);
  std::vector<Vec> out;
  for (const auto& c : r.nullspace()) {
    Vec v(n_);
    for (std::size_t k = 0; k < c.size(); ++k) axpy(v, c[k], basis_[k]);
    out.push_back(std::move(v));
  }
  return span(out, n_);
}

Subspace Subspace::mapped(const Matrix& m) const {
  require(m.cols() == n_, "subspace map size mismatch");
  std::vector<Vec> out;
  for (const auto& b : basis_) out.push_back(m.apply(b));
  return span(out, m.rows());
}

Subspace Subspace::preimage(const Matrix& m) const {
  require(m.rows() == n_, "subspace preimage size mismatch");
  return kernel(residual_matrix() * m);
}

}  // namespace singlab
