/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/polycore/rational.hpp"

#include <cctype>
#include <limits>

#include "singlab/error.hpp"

namespace singlab {

namespace {

mpz_class parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error(ErrorCode::Syntax, "polycore", "empty integer in '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw Error(ErrorCode::Syntax, "polycore", "not an integer: '" + std::string(s) + "'");
    }
  }
  mpz_class z(std::string(s.substr(i)), 10);
  return neg ? mpz_class(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::Internal, "polycore", "integer overflow");
  return z.get_si();
}

}  // namespace

Rational::Rational(long long v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    v_ = static_cast<long>(v);
  } else {
    v_ = mpq_class(mpz_class(std::to_string(v), 10));
  }
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Internal, "polycore", "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(s)));
  const mpz_class num = parse_integer(trim(s.substr(0, slash)));
  const mpz_class den = parse_integer(trim(s.substr(slash + 1)));
  if (den == 0) throw Error(ErrorCode::Syntax, "polycore", "zero denominator in '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

long Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_long(r);
}

long Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_long(r);
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Internal, "polycore", "division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::Internal, "polycore", "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::fraction_str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::size_t Rational::hash() const {
  const std::size_t a = mpz_get_ui(v_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(v_)) << 61);
  const std::size_t b = mpz_get_ui(v_.get_den_mpz_t());
  return a * 0x9e3779b97f4a7c15ULL ^ (b + 0x7f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace singlab
