/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/hodgeforms/binding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "singlab/error.hpp"

namespace singlab {

namespace {

std::optional<Rational> principal_grade(const Vec& v, const std::vector<Rational>& grading) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero() && (!best || grading[i] < *best)) best = grading[i];
  }
  return best;
}

// Grade of a homogeneous vector.
Rational homogeneous_grade(const Vec& v, const std::vector<Rational>& grading) {
  const auto g = principal_grade(v, grading);
  if (!g) throw Error(ErrorCode::Internal, "hodgeforms", "zero chain vector");
  return *g;
}

}  // namespace

Vec principal_part(const Vec& v, const std::vector<Rational>& grading) {
  const auto g = principal_grade(v, grading);
  Vec out(v.size());
  if (!g) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (grading[i] == *g) out[i] = v[i];
  }
  return out;
}

BindingReport bind_chains(const NSplit& split, const std::vector<Rational>& grading) {
  BindingReport rep;
  const Matrix t = split.n_top + split.n_1;
  rep.f_jordan = jordan_chains(t);
  rep.n_jordan = jordan_chains(split.n_top, &grading);
  const Matrix to_n = rep.n_jordan.adapted_basis_matrix.inverse();

  auto supporting_chains = [&](const Vec& principal) {
    std::set<std::size_t> chains;
    const Vec coords = to_n.apply(principal);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i].is_zero()) chains.insert(rep.n_jordan.position[i].first);
    }
    return std::vector<std::size_t>(chains.begin(), chains.end());
  };

  for (const auto& chain : rep.f_jordan.chains) {
    FChainBinding fb;
    fb.length = chain.size();
    ChainSegment seg;
    for (std::size_t s = 0; s < chain.size(); ++s) {
      const Vec p = principal_part(chain[s], grading);
      if (seg.steps.empty()) seg.n_chains = supporting_chains(p);
      seg.steps.push_back(s);
      seg.grades.push_back(*principal_grade(chain[s], grading));
      if (s + 1 == chain.size()) break;
      const Vec np = split.n_top.apply(p);
      if (is_zero(np)) {
        fb.segments.push_back(std::move(seg));
        seg = ChainSegment();
        ++rep.binding_steps;
      } else if (!(principal_part(chain[s + 1], grading) == np)) {
        rep.consistent = false;
      }
    }
    fb.segments.push_back(std::move(seg));
    std::size_t total = 0;
    for (const auto& sg : fb.segments) total += sg.steps.size();
    if (total != fb.length) rep.consistent = false;
    rep.chains.push_back(std::move(fb));
  }
  return rep;
}

std::vector<std::optional<std::size_t>> spectral_chain_map(const JordanData& n_jordan,
                                                           const std::vector<Rational>& grading) {
  const std::size_t mu = n_jordan.basis.size();
  std::vector<Rational> g;
  for (const auto& v : n_jordan.basis) g.push_back(homogeneous_grade(v, grading));
  std::vector<std::size_t> order(mu);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g[a] < g[b]; });
  std::vector<std::size_t> rank(mu);
  for (std::size_t s = 0; s < mu; ++s) rank[order[s]] = s;
  std::vector<std::optional<std::size_t>> nu(mu);
  for (std::size_t s = 0; s < mu; ++s) {
    const auto next = n_jordan.nu[order[s]];
    if (next) nu[s] = rank[*next];
  }
  return nu;
}

}  // namespace singlab
