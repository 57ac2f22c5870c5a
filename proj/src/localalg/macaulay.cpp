/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/localalg/macaulay.hpp"

#include <algorithm>
#include <unordered_map>

#include "singlab/localalg/quotient.hpp"
#include "singlab/polycore/matrix.hpp"

namespace singlab {

MacaulayResult macaulay_oracle(const std::vector<MultiPoly>& gens, unsigned truncation) {
  const std::size_t n = gens.front().nvars();
  std::vector<Monomial> columns;
  for (unsigned d = 0; d < truncation; ++d) {
    for (auto& m : monomials_of_degree(n, d)) columns.push_back(m);
  }
  std::sort(columns.begin(), columns.end(), LocalDescending{});
  std::unordered_map<Monomial, std::size_t> col_of;
  for (std::size_t i = 0; i < columns.size(); ++i) col_of.emplace(columns[i], i);

  std::vector<Vec> rows;
  for (const auto& g : gens) {
    for (const auto& m : columns) {
      Vec row(columns.size());
      bool any = false;
      for (const auto& t : g.terms()) {
        const Monomial mm = t.mono * m;
        if (mm.degree() >= truncation) continue;
        row[col_of.at(mm)] = t.coeff;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  MacaulayResult out;
  out.truncation = truncation;
  std::vector<bool> pivot(columns.size(), false);
  if (!rows.empty()) {
    Matrix mat = Matrix::from_rows(rows, columns.size());
    for (auto p : mat.rref()) pivot[p] = true;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (!pivot[i]) out.basis.push_back(columns[i]);
  }
  out.mu = out.basis.size();
  return out;
}

MacaulayResult macaulay_oracle(const MultiPoly& f, unsigned truncation) {
  return macaulay_oracle(jacobian_generators(f), truncation);
}

MacaulayResult macaulay_stabilized(const std::vector<MultiPoly>& gens, unsigned max_truncation) {
  MacaulayResult prev = macaulay_oracle(gens, 1);
  for (unsigned k = 2; k <= max_truncation; ++k) {
    MacaulayResult cur = macaulay_oracle(gens, k);
    const bool closed = std::none_of(prev.basis.begin(), prev.basis.end(),
                                     [&](const Monomial& m) { return m.degree() + 1 == prev.truncation; });
    if (closed && cur.mu == prev.mu) {
      prev.stabilized = true;
      return prev;
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace singlab
