/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/nilstruct/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "singlab/error.hpp"

namespace singlab {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Matrix> powers_until_zero(const Matrix& m) {
  std::vector<Matrix> p{Matrix::identity(m.rows())};
  while (!p.back().is_zero()) {
    if (p.size() > m.rows() + 1) {
      throw Error(ErrorCode::NotNilpotent, "nilstruct", "operator is not nilpotent");
    }
    p.push_back(p.back() * m);
  }
  return p;
}

// Kernel of a, restricted to the coordinates in `cols`, embedded back.
std::vector<Vec> kernel_on(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix sub(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) sub.at(i, k) = a.at(i, cols[k]);
  }
  std::vector<Vec> out;
  for (const auto& v : sub.nullspace()) {
    Vec full(a.cols());
    for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = v[k];
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace

std::string jordan_type_str(const JordanType& t) {
  std::string out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += std::to_string(it->first) + "^" + std::to_string(it->second);
  }
  return out.empty() ? "-" : out;
}

std::size_t jordan_type_dim(const JordanType& t) {
  std::size_t d = 0;
  for (const auto& [size, count] : t) d += size * count;
  return d;
}

unsigned nilpotency_index(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::Internal, "nilstruct", "non-square operator");
  return static_cast<unsigned>(powers_until_zero(m).size() - 1);
}

JordanType jordan_type_from_ranks(const Matrix& m) {
  const auto p = powers_until_zero(m);
  std::vector<std::size_t> rank(p.size() + 1, 0);
  for (std::size_t s = 0; s < p.size(); ++s) rank[s] = p[s].rank();
  JordanType t;
  // #blocks of size >= s is rank(M^{s-1}) - rank(M^s).
  for (std::size_t s = 1; s < p.size(); ++s) {
    const std::size_t at_least_s = rank[s - 1] - rank[s];
    const std::size_t at_least_next = rank[s] - rank[s + 1];
    if (at_least_s > at_least_next) t[s] = at_least_s - at_least_next;
  }
  return t;
}

int JordanData::m0() const { return type.empty() ? 0 : static_cast<int>(type.rbegin()->first) - 1; }

JordanData jordan_chains(const Matrix& m, const std::vector<Rational>* grading) {
  const std::size_t n = m.rows();
  if (!m.is_square()) throw Error(ErrorCode::Internal, "nilstruct", "non-square operator");
  const auto pw = powers_until_zero(m);
  const std::size_t top = pw.size() - 1;

  JordanData jd;
  jd.op = m;
  jd.type = jordan_type_from_ranks(m);

  std::vector<std::vector<std::size_t>> pieces;
  if (grading) {
    if (grading->size() != n) throw Error(ErrorCode::Internal, "nilstruct", "grading size mismatch");
    std::set<Rational> grades(grading->begin(), grading->end());
    for (const auto& g : grades) {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < n; ++i) {
        if ((*grading)[i] == g) cols.push_back(i);
      }
      pieces.push_back(cols);
    }
  } else {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    pieces.push_back(all);
  }

  for (std::size_t s = top; s >= 1; --s) {
    const auto want_it = jd.type.find(s);
    const std::size_t want = want_it == jd.type.end() ? 0 : want_it->second;
    if (want == 0) continue;
    Subspace u = Subspace::kernel(pw[s - 1]);
    const Subspace below = s + 1 < pw.size() ? Subspace::kernel(pw[s + 1]) : Subspace::whole(n);
    for (const auto& v : below.basis()) u.add(m.apply(v));
    std::vector<Vec> candidates;
    for (const auto& cols : pieces) {
      for (auto& v : kernel_on(pw[s], cols)) candidates.push_back(primitive_integer(v));
    }
    std::sort(candidates.begin(), candidates.end(), lex_less);
    std::size_t taken = 0;
    for (const auto& c : candidates) {
      if (taken == want) break;
      if (!u.add(c)) continue;
      std::vector<Vec> chain{c};
      for (std::size_t k = 1; k < s; ++k) chain.push_back(m.apply(chain.back()));
      jd.chains.push_back(std::move(chain));
      ++taken;
    }
    if (taken != want) throw Error(ErrorCode::Internal, "nilstruct", "could not complete Jordan chains");
  }

  struct Slot {
    int weight;
    std::size_t chain;
    std::size_t step;
  };
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < jd.chains.size(); ++c) {
    const int size = static_cast<int>(jd.chains[c].size());
    for (std::size_t k = 0; k < jd.chains[c].size(); ++k) {
      slots.push_back({-size + 2 * static_cast<int>(k + 1) - 1, c, k});
    }
  }
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.chain < b.chain;
  });
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    jd.basis.push_back(jd.chains[slots[i].chain][slots[i].step]);
    jd.weights.push_back(slots[i].weight);
    jd.position.emplace_back(slots[i].chain, slots[i].step);
    where[{slots[i].chain, slots[i].step}] = i;
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto it = where.find({slots[i].chain, slots[i].step + 1});
    jd.nu.push_back(it == where.end() ? std::nullopt : std::optional<std::size_t>(it->second));
  }
  jd.adapted_basis_matrix = Matrix::from_columns(jd.basis, n);
  if (n > 0 && jd.adapted_basis_matrix.rank() != n) {
    throw Error(ErrorCode::Internal, "nilstruct", "Jordan chains do not form a basis");
  }
  return jd;
}

}  // namespace singlab
