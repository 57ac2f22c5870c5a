/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/nilstruct/weight_filtration.hpp"

#include "singlab/error.hpp"

namespace singlab {

namespace {

// Largest m with M^m A not inside B, or -1 when A = B.
int relative_index(const Subspace& a, const Subspace& b, const std::vector<Matrix>& pw) {
  int m = -1;
  for (std::size_t k = 0; k < pw.size(); ++k) {
    if (b.contains(a.mapped(pw[k]))) break;
    m = static_cast<int>(k);
  }
  return m;
}

void fill(const Subspace& a, const Subspace& b, int lo, int hi, const std::vector<Matrix>& pw,
          std::map<int, Subspace>& flags) {
  if (lo > hi) return;
  const int m = relative_index(a, b, pw);
  if (m < 0) {
    for (int j = lo; j <= hi; ++j) flags[j] = b;
    return;
  }
  for (int j = lo; j <= std::min(hi, -m); ++j) flags[j] = a;
  for (int j = std::max(lo, m + 1); j <= hi; ++j) flags[j] = b;
  const Matrix& pm = pw[static_cast<std::size_t>(m)];
  const Subspace a2 = a.intersect(b.preimage(pm));
  const Subspace b2 = b + a.mapped(pm);
  if (m == 0) return;
  fill(a2, b2, std::max(lo, -m + 1), std::min(hi, m), pw, flags);
}

}  // namespace

const Subspace& WeightFiltration::at(int j) const {
  if (j <= -m0) return flags.at(-m0);
  if (j >= m0 + 1) return flags.at(m0 + 1);
  return flags.at(j);
}

WeightFiltration weight_filtration(const Matrix& m) {
  const std::size_t n = m.rows();
  const unsigned idx = nilpotency_index(m);
  std::vector<Matrix> pw{Matrix::identity(n)};
  for (unsigned k = 1; k <= idx; ++k) pw.push_back(pw.back() * m);

  WeightFiltration wf;
  wf.m0 = idx == 0 ? 0 : static_cast<int>(idx) - 1;
  fill(Subspace::whole(n), Subspace(n), -wf.m0, wf.m0 + 1, pw, wf.flags);
  wf.flags[-wf.m0] = Subspace::whole(n);
  wf.flags[wf.m0 + 1] = Subspace(n);

  for (int j = -wf.m0; j <= wf.m0; ++j) {
    const auto& hi = wf.flags.at(j);
    const auto& lo = wf.flags.at(j + 1);
    if (!hi.contains(lo)) throw Error(ErrorCode::Internal, "nilstruct", "weight filtration is not decreasing");
    wf.graded_dims[j] = hi.dim() - lo.dim();
  }
  for (int j = -wf.m0; j <= 0; ++j) {
    const int i = -j;
    // {v in W_j : M^{i+1} v in W_{i+3}}
    const Subspace lifted = wf.at(j).intersect(wf.at(i + 3).preimage(pw.size() > static_cast<std::size_t>(i + 1)
                                                                         ? pw[static_cast<std::size_t>(i + 1)]
                                                                         : Matrix(n, n)));
    wf.primitive_dims[j] = lifted.dim() - wf.at(j + 1).dim();
  }
  return wf;
}

std::map<int, Subspace> chain_weight_flags(const JordanData& jd) {
  const std::size_t n = jd.op.rows();
  const int m0 = jd.m0();
  std::map<int, Subspace> flags;
  for (int j = -m0; j <= m0 + 1; ++j) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < jd.basis.size(); ++k) {
      if (jd.weights[k] >= j) vs.push_back(jd.basis[k]);
    }
    flags[j] = Subspace::span(vs, n);
  }
  return flags;
}

WeightFiltration weight_filtration(const JordanData& jd) {
  WeightFiltration wf = weight_filtration(jd.op);
  const auto chain = chain_weight_flags(jd);
  for (const auto& [j, sub] : chain) {
    if (!(wf.at(j) == sub)) {
      throw Error(ErrorCode::Internal, "nilstruct",
                  "chain weights disagree with the intrinsic weight filtration at j=" + std::to_string(j));
    }
  }
  return wf;
}

std::map<int, std::vector<std::pair<int, std::size_t>>> primitive_decomposition(const WeightFiltration& wf,
                                                                                const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Matrix> pw{Matrix::identity(n)};
  for (int k = 1; k <= 2 * wf.m0 + 2; ++k) pw.push_back(pw.back() * m);
  std::map<int, Subspace> lifted;
  for (int j = -wf.m0; j <= 0; ++j) {
    const int i = -j;
    lifted[j] = wf.at(j).intersect(wf.at(i + 3).preimage(pw[static_cast<std::size_t>(i + 1)]));
  }
  std::map<int, std::vector<std::pair<int, std::size_t>>> out;
  for (int j = -wf.m0; j <= wf.m0; ++j) {
    auto& row = out[j];
    for (int k = std::max(0, j); j - 2 * k >= -wf.m0; ++k) {
      const int base = j - 2 * k;
      if (base > 0) continue;
      // dim of (M^k P + W_{j+1}) / W_{j+1}
      const Subspace image = lifted.at(base).mapped(pw[static_cast<std::size_t>(k)]) + wf.at(j + 1);
      row.emplace_back(k, image.dim() - wf.at(j + 1).dim());
    }
  }
  return out;
}

std::map<int, std::size_t> increasing_graded_dims(const WeightFiltration& wf) {
  std::map<int, std::size_t> out;
  for (const auto& [j, d] : wf.graded_dims) out[-j] = d;
  return out;
}

}  // namespace singlab
