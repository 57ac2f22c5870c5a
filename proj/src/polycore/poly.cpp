/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/polycore/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "singlab/error.hpp"

namespace singlab {

namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::NvarsMismatch, "polycore",
                "polynomials in " + std::to_string(a) + " and " + std::to_string(b) + " variables");
  }
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    skip_ws();
    if (at_end()) fail("empty input");
    MultiPoly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Syntax, "polycore", "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : s_[pos_];
  }

  MultiPoly expr() {
    MultiPoly acc(vars_.size());
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      if (negate) acc -= t;
      else acc += t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_';
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 65535) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly atom() {
    const char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = digits();
        if (den.empty()) fail("expected denominator");
        if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) fail("zero denominator");
      }
      return MultiPoly::constant(vars_.size(), Rational::parse(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t best = vars_.size();
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        const std::string& v = vars_[i];
        if (v.size() > best_len && s_.substr(pos_, v.size()) == v) {
          best = i;
          best_len = v.size();
        }
      }
      if (best == vars_.size()) {
        std::size_t end = pos_;
        while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
        throw Error(ErrorCode::UnknownVariable, "polycore",
                    "unknown variable '" + std::string(s_.substr(pos_, end - pos_)) + "' at position " +
                        std::to_string(pos_));
      }
      pos_ += best_len;
      return MultiPoly::variable(vars_.size(), best);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) { return term(Monomial::variable(nvars, i)); }

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational> acc;
  for (auto& t : terms) {
    require_same(nvars, t.mono.nvars());
    acc[t.mono] += t.coeff;
  }
  MultiPoly p(nvars);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return LocalOrder::compare(a.mono, b.mono) > 0; });
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& vars) {
  Monomial probe(vars.size());  // validates the variable count
  (void)probe;
  return Parser(text, vars).run();
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return LocalOrder::compare(t.mono, key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

unsigned MultiPoly::max_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::set<Monomial, LocalDescending> MultiPoly::support() const {
  std::set<Monomial, LocalDescending> s;
  for (const auto& t : terms_) s.insert(t.mono);
  return s;
}

void MultiPoly::merge(const MultiPoly& o, const Rational& factor, const Monomial* shift) {
  require_same(n_, o.n_);
  if (o.terms_.empty() || factor.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial om = shift ? o.terms_[j].mono * *shift : o.terms_[j].mono;
    const int c = i == terms_.size() ? -1 : LocalOrder::compare(terms_[i].mono, om);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back({om, o.terms_[j].coeff * factor});
      ++j;
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff * factor;
      if (!s.is_zero()) out.push_back({om, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  merge(o, Rational(1), nullptr);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  merge(o, Rational(-1), nullptr);
  return *this;
}

void MultiPoly::sub_mul_term(const Rational& c, const Monomial& m, const MultiPoly& other) {
  merge(other, -c, &m);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same(a.n_, b.n_);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.n_);
  if (a.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return LocalOrder::compare(x.mono, y.mono) > 0; });
  MultiPoly p(a.n_);
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly p(n_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Rational& c) const {
  require_same(n_, m.nvars());
  MultiPoly p(n_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

MultiPoly MultiPoly::truncated(unsigned bound) const {
  MultiPoly p(n_);
  for (const auto& t : terms_) {
    if (t.mono.degree() < bound) p.terms_.push_back(t);
  }
  return p;
}

MultiPoly MultiPoly::partial(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::NvarsMismatch, "polycore", "partial derivative index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[i];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    terms.push_back({m, t.coeff * Rational(static_cast<long>(e))});
  }
  return from_terms(n_, std::move(terms));
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  require_same(n_, point.size());
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < n_; ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const bool neg = t.coeff.sign() < 0;
    const Rational mag = t.coeff.abs();
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (t.mono.is_one()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += t.mono.str(vars);
    } else {
      out += mag.str() + "*" + t.mono.str(vars);
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.nvars(), Rational(1));
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly partial(const MultiPoly& p, std::size_t i) { return p.partial(i); }

namespace {

MultiPoly det_laplace(const std::vector<std::vector<MultiPoly>>& m, std::vector<std::size_t>& cols, std::size_t row,
                      std::size_t n) {
  if (row == m.size()) return MultiPoly::constant(n, Rational(1));
  MultiPoly acc(n);
  long sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      MultiPoly minor = det_laplace(m, cols, row + 1, n);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      MultiPoly prod = m[row][c] * minor;
      if (sign > 0) acc += prod;
      else acc -= prod;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

MultiPoly hessian_determinant(const MultiPoly& f) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<MultiPoly>> h(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly fi = f.partial(i);
    for (std::size_t j = 0; j < n; ++j) h[i][j] = fi.partial(j);
  }
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return det_laplace(h, cols, 0, n);
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("z" + std::to_string(i));
  return os << p.str(names);
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error(ErrorCode::Syntax, "polycore", "empty variable name in list");
    for (char c : cur) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw Error(ErrorCode::Syntax, "polycore", "invalid variable name '" + cur + "'");
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(cur[0])) && cur[0] != '_') {
      throw Error(ErrorCode::Syntax, "polycore", "variable name must start with a letter: '" + cur + "'");
    }
    if (std::find(out.begin(), out.end(), cur) != out.end()) {
      throw Error(ErrorCode::Syntax, "polycore", "duplicate variable '" + cur + "'");
    }
    out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  if (out.size() > kMaxVars) {
    throw Error(ErrorCode::InvalidConfig, "polycore", "at most " + std::to_string(kMaxVars) + " variables");
  }
  return out;
}

}  // namespace singlab
