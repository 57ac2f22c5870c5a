/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace singlab {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of fixed capacity. Two monomials only compare equal when
/// they have the same number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(const std::vector<unsigned>& exps);

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t nvars() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned v);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other) to be true.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  std::vector<unsigned> exponents() const;
  /// Renders as "x^2*y" against the given names; "1" for the unit.
  std::string str(const std::vector<std::string>& names) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  unsigned deg_ = 0;
};

/// Local degree reverse lexicographic order: lower total degree is larger;
/// ties are broken by the last differing exponent, smaller exponent larger.
/// The unit monomial is the largest element.
struct LocalOrder {
  /// Negative if a < b, zero if equal, positive if a > b.
  static int compare(const Monomial& a, const Monomial& b);
  static bool greater(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }
};

/// Strict weak ordering placing larger monomials first.
struct LocalDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return LocalOrder::compare(a, b) > 0; }
};

/// All monomials in nvars variables of the given total degree.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace singlab

template <>
struct std::hash<singlab::Monomial> {
  std::size_t operator()(const singlab::Monomial& m) const noexcept { return m.hash(); }
};
