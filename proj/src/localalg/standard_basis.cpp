/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/localalg/standard_basis.hpp"

#include <algorithm>
#include <map>

#include "singlab/error.hpp"
#include "singlab/localalg/staircase.hpp"

namespace singlab {

namespace {

struct Reducer {
  MultiPoly poly;
  unsigned ecart;
};

unsigned ecart_of(const MultiPoly& p) { return p.max_degree() - p.min_degree(); }

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Leading terms of f and g coprime and the second-largest terms cannot
// collide, so g*tail(f) - f*tail(g) is a standard representation.
bool product_criterion(const MultiPoly& f, const MultiPoly& g) {
  if (!f.leading_monomial().coprime(g.leading_monomial())) return false;
  const bool f_safe = f.size() < 2 || !f.leading_monomial().divides(f.terms()[1].mono);
  const bool g_safe = g.size() < 2 || !g.leading_monomial().divides(g.terms()[1].mono);
  return f_safe || g_safe;
}

MultiPoly reduce_truncated(const MultiPoly& p, const StandardBasis& sb) {
  const unsigned bound = sb.corner;
  std::map<Monomial, Rational, LocalDescending> work;
  for (const auto& t : p.terms()) {
    if (t.mono.degree() < bound) work.emplace(t.mono, t.coeff);
  }
  std::vector<Term> out;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Rational c = it->second;
    work.erase(it);
    const std::size_t idx = sb.divisor_of(m);
    if (idx == sb.leads.size()) {
      out.push_back({m, c});
      continue;
    }
    const Monomial q = sb.leads[idx].quotient_of(m);
    const auto& terms = sb.generators[idx].terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      Monomial mm = terms[k].mono * q;
      if (mm.degree() >= bound) continue;
      auto [slot, inserted] = work.try_emplace(mm);
      slot->second -= c * terms[k].coeff;
      if (slot->second.is_zero()) work.erase(slot);
    }
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

// Drops every term of degree >= bound (bound 0 keeps everything).
MultiPoly truncate_at(const MultiPoly& p, unsigned bound) {
  if (bound == 0) return p;
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    if (t.mono.degree() < bound) kept.push_back(t);
  }
  return MultiPoly::from_terms(p.nvars(), std::move(kept));
}

// Keeps the leading term, truncates the tail.
MultiPoly truncate_tail(const MultiPoly& p, unsigned bound) {
  if (bound == 0 || p.is_zero()) return p;
  std::vector<Term> kept{p.terms().front()};
  for (std::size_t k = 1; k < p.terms().size(); ++k) {
    if (p.terms()[k].mono.degree() < bound) kept.push_back(p.terms()[k]);
  }
  return MultiPoly::from_terms(p.nvars(), std::move(kept));
}

// Mora's normal form; with bound > 0 the computation runs modulo m^bound,
// which the caller guarantees to lie in the ideal.
MultiPoly weak_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis, unsigned bound) {
  std::vector<Reducer> t;
  t.reserve(basis.size());
  for (const auto& g : basis) t.push_back({g, ecart_of(g)});
  MultiPoly h = truncate_at(p, bound);
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    std::size_t best = t.size();
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (!t[k].poly.leading_monomial().divides(lm)) continue;
      if (best == t.size() || t[k].ecart < t[best].ecart) best = k;
    }
    if (best == t.size()) break;
    const unsigned eh = ecart_of(h);
    const MultiPoly g = t[best].poly;
    if (t[best].ecart > eh) t.push_back({h, eh});
    const Rational c = h.leading_coeff() / g.leading_coeff();
    const Monomial q = g.leading_monomial().quotient_of(h.leading_monomial());
    h.sub_mul_term(c, q, g);
    h = truncate_at(h, bound);
  }
  return h;
}

// 1 + the largest degree of a monomial outside the leading ideal, or 0 when
// the staircase is infinite.
unsigned highest_corner(const std::vector<MultiPoly>& s, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : s) leads.push_back(g.leading_monomial());
  if (!staircase_is_finite(leads, nvars)) return 0;
  unsigned top = 0;
  for (const auto& m : staircase(leads, nvars)) top = std::max(top, m.degree());
  return top + 1;
}

}  // namespace

bool StandardBasis::reduces(const Monomial& m) const { return divisor_of(m) != leads.size(); }

std::size_t StandardBasis::divisor_of(const Monomial& m) const {
  for (std::size_t i = 0; i < leads.size(); ++i) {
    if (leads[i].divides(m)) return i;
  }
  return leads.size();
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  MultiPoly a = f.times_term(f.leading_monomial().quotient_of(l), g.leading_coeff());
  a.sub_mul_term(f.leading_coeff(), g.leading_monomial().quotient_of(l), g);
  return a;
}

MultiPoly mora_weak_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  return weak_normal_form(p, basis, 0);
}

StandardBasis standard_basis(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidConfig, "localalg", "standard basis of an empty generator list");
  const std::size_t n = gens.front().nvars();
  std::vector<MultiPoly> s;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw Error(ErrorCode::NvarsMismatch, "localalg", "generators in different rings");
    if (!g.is_zero()) s.push_back(g.monic());
  }

  std::vector<Pair> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, s[i].leading_monomial().lcm(s[j].leading_monomial())});
    }
  };
  for (std::size_t j = 1; j < s.size(); ++j) add_pairs_for(j);
  unsigned bound = highest_corner(s, n);
  for (auto& g : s) g = truncate_tail(g, bound);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pending) {
      if (p.i == a && p.j == b) return true;
    }
    return false;
  };

  while (!pending.empty()) {
    auto sel = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    const Pair pr = *sel;
    pending.erase(sel);

    if (product_criterion(s[pr.i], s[pr.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < s.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (s[k].leading_monomial().divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    MultiPoly h = weak_normal_form(s_polynomial(s[pr.i], s[pr.j]), s, bound);
    if (h.is_zero()) continue;
    s.push_back(h.monic());
    add_pairs_for(s.size() - 1);
    // Once the leading monomials leave a finite staircase with corner K,
    // m^K lies in the ideal (Nakayama), so all later work is modulo m^K.
    // Without this the tails of Mora's normal forms can grow without need.
    const unsigned corner = highest_corner(s, n);
    if (corner != 0 && (bound == 0 || corner < bound)) {
      bound = corner;
      for (auto& g : s) g = truncate_tail(g, bound);
    }
  }

  StandardBasis sb;
  sb.nvars = n;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Monomial& lm = s[i].leading_monomial();
    bool redundant = false;
    for (std::size_t k = 0; k < s.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& other = s[k].leading_monomial();
      if (other.divides(lm) && (!(other == lm) || k < i)) redundant = true;
    }
    if (!redundant) {
      sb.generators.push_back(s[i]);
      sb.leads.push_back(lm);
    }
  }

  sb.finite = staircase_is_finite(sb.leads, n);
  if (sb.finite) {
    unsigned top = 0;
    bool any = false;
    for (const auto& m : staircase(sb.leads, n)) {
      top = std::max(top, m.degree());
      any = true;
    }
    sb.corner = any ? top + 1 : 0;
    for (std::size_t i = 0; i < sb.generators.size(); ++i) {
      const Monomial lm = sb.leads[i];
      MultiPoly tail = sb.generators[i] - MultiPoly::term(lm);
      sb.generators[i] = MultiPoly::term(lm) + reduce_truncated(tail, sb);
    }
  }
  return sb;
}

MultiPoly mora_normal_form(const MultiPoly& p, const StandardBasis& sb) {
  if (!sb.finite) {
    throw Error(ErrorCode::NotIsolated, "localalg", "normal form requested in an infinite dimensional quotient");
  }
  return reduce_truncated(p, sb);
}

}  // namespace singlab
