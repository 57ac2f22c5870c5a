/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/polycore/monomial.hpp"

#include <algorithm>
#include <limits>

#include "singlab/error.hpp"

namespace singlab {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVars) {
    throw Error(ErrorCode::InvalidConfig, "polycore",
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

void check_same(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::NvarsMismatch, "polycore", "monomials in different rings");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}

Monomial::Monomial(const std::vector<unsigned>& exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  Monomial m(nvars);
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned v) {
  if (v > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::InvalidConfig, "polycore", "exponent too large");
  }
  deg_ = deg_ - e_[i] + v;
  e_[i] = static_cast<std::uint16_t>(v);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, other.e_[i] - e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same(*this, other);
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, std::max(e_[i], other.e_[i]));
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same(*this, other);
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, std::min(e_[i], other.e_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

std::vector<unsigned> Monomial::exponents() const { return {e_.begin(), e_.begin() + n_}; }

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (deg_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "z" + std::to_string(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, a.e_[i] + b.e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

int LocalOrder::compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // Odometer over compositions of `degree` into nvars parts.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace singlab
