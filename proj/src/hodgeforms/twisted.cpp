/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/hodgeforms/twisted.hpp"

#include "singlab/error.hpp"

namespace singlab {

TwistedScalar::TwistedScalar(const Rational& c, int twist) { add_term(twist, c); }

void TwistedScalar::add_term(int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Rational TwistedScalar::coeff(int k) const {
  const auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

TwistedScalar TwistedScalar::inverse() const {
  if (!is_pure()) throw Error(ErrorCode::Internal, "hodgeforms", "inverse of a non-pure twisted scalar");
  return TwistedScalar(c_.begin()->second.inverse(), -c_.begin()->first);
}

TwistedScalar& TwistedScalar::operator+=(const TwistedScalar& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

TwistedScalar operator*(const TwistedScalar& a, const TwistedScalar& b) {
  TwistedScalar r;
  for (const auto& [ka, ca] : a.c_) {
    for (const auto& [kb, cb] : b.c_) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

TwistedScalar TwistedScalar::operator-() const {
  TwistedScalar r;
  for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
  return r;
}

std::string TwistedScalar::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : c_) {
    std::string term;
    if (k == 0) {
      term = c.str();
    } else {
      const std::string power = k == 1 ? "(2pi i)" : "(2pi i)^" + std::to_string(k);
      if (c == Rational(1)) {
        term = power;
      } else if (c == Rational(-1)) {
        term = "-" + power;
      } else {
        term = c.str() + "*" + power;
      }
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

TwistedMatrix TwistedMatrix::from_rational(const Matrix& m) {
  TwistedMatrix t(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) t.rows_[i].emplace(j, TwistedScalar(m.at(i, j)));
    }
  }
  return t;
}

TwistedScalar TwistedMatrix::at(std::size_t i, std::size_t j) const {
  const auto it = rows_.at(i).find(j);
  return it == rows_[i].end() ? TwistedScalar() : it->second;
}

void TwistedMatrix::set(std::size_t i, std::size_t j, const TwistedScalar& v) {
  if (v.is_zero()) {
    rows_.at(i).erase(j);
  } else {
    rows_.at(i)[j] = v;
  }
}

TwistedMatrix TwistedMatrix::transpose() const {
  TwistedMatrix t(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace(i, v);
  }
  return t;
}

TwistedMatrix operator*(const TwistedMatrix& a, const TwistedMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::Internal, "hodgeforms", "twisted matrix size mismatch");
  TwistedMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::map<std::size_t, TwistedScalar> acc;
    for (const auto& [k, av] : a.rows_[i]) {
      for (const auto& [j, bv] : b.rows_[k]) acc[j] += av * bv;
    }
    for (auto& [j, v] : acc) {
      if (!v.is_zero()) r.rows_[i].emplace(j, std::move(v));
    }
  }
  return r;
}

TwistedMatrix operator+(const TwistedMatrix& a, const TwistedMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::Internal, "hodgeforms", "twisted matrix size mismatch");
  TwistedMatrix r = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (const auto& [j, v] : b.rows_[i]) r.set(i, j, r.at(i, j) + v);
  }
  return r;
}

TwistedMatrix TwistedMatrix::operator-() const {
  TwistedMatrix r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& [j, v] : rows_[i]) r.rows_[i].emplace(j, -v);
  }
  return r;
}

bool TwistedMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& [j, v] : rows_[i]) {
      if (j != i) return false;
    }
  }
  return true;
}

bool TwistedMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.empty()) return false;
  }
  return true;
}

TwistedMatrix TwistedMatrix::monomial_inverse() const {
  TwistedMatrix r(size());
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (rows_[i].size() != 1) throw Error(ErrorCode::Internal, "hodgeforms", "matrix is not monomial");
    const auto& [j, v] = *rows_[i].begin();
    if (seen[j]) throw Error(ErrorCode::Internal, "hodgeforms", "matrix is not monomial");
    seen[j] = true;
    r.rows_[j].emplace(i, v.inverse());
  }
  return r;
}

Matrix TwistedMatrix::twist_part(int k) const {
  Matrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& [j, v] : rows_[i]) m.at(i, j) = v.coeff(k);
  }
  return m;
}

bool TwistedMatrix::is_rational() const {
  for (const auto& r : rows_) {
    for (const auto& [j, v] : r) {
      if (v.terms().size() != 1 || v.terms().begin()->first != 0) return false;
    }
  }
  return true;
}

}  // namespace singlab
