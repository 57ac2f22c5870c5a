/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/cli/report.hpp"

#include <sstream>

namespace singlab {

using nlohmann::json;

namespace {

std::string q(const Rational& r) { return r.fraction_str(); }

json jordan_json(const JordanType& t) {
  json out = json::array();
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back({{"size", it->first}, {"count", it->second}});
  return {{"type", jordan_type_str(t)}, {"blocks", out}};
}

json int_map(const std::map<int, std::size_t>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

json matrix_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", sparse_json(m)}};
}

json twisted_json(const TwistedMatrix& m) {
  return {{"rows", m.size()}, {"cols", m.size()}, {"entries", sparse_json(m)}};
}

json binding_json(const BindingReport& r) {
  json chains = json::array();
  for (const auto& c : r.chains) {
    if (c.length < 2) continue;
    json segs = json::array();
    for (const auto& s : c.segments) {
      json grades = json::array();
      for (const auto& g : s.grades) grades.push_back(q(g));
      json supporting = json::array();
      for (auto idx : s.n_chains) {
        supporting.push_back({{"n_chain", idx}, {"length", r.n_jordan.chains[idx].size()}});
      }
      segs.push_back({{"steps", s.steps}, {"grades", grades}, {"n_chains", supporting}});
    }
    chains.push_back({{"length", c.length}, {"segments", segs}});
  }
  return {{"f_jordan_type", jordan_type_str(r.f_jordan.type)},
          {"n_jordan_type", jordan_type_str(r.n_jordan.type)},
          {"binding_steps", r.binding_steps},
          {"consistent", r.consistent},
          {"chains", chains}};
}

bool is_matrix(const json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries") && j.size() == 3;
}

void render(std::ostringstream& out, const std::string& key, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (is_matrix(j)) {
    const std::size_t rows = j["rows"], cols = j["cols"];
    out << pad << key << ": " << rows << "x" << cols << " matrix, " << j["entries"].size() << " nonzero entries\n";
    if (rows > kTextMatrixLimit || cols > kTextMatrixLimit) {
      out << pad << "  (entries in the JSON report)\n";
      return;
    }
    for (const auto& e : j["entries"]) {
      out << pad << "  (" << e[0].get<std::size_t>() << "," << e[1].get<std::size_t>() << ") "
          << e[2].get<std::string>() << "\n";
    }
    return;
  }
  if (j.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render(out, k, v, depth + 1);
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    out << pad << key << ":\n";
    std::size_t i = 0;
    for (const auto& v : j) render(out, "[" + std::to_string(i++) + "]", v, depth + 1);
    return;
  }
  out << pad << key << ": ";
  if (j.is_string()) {
    out << j.get<std::string>();
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    }
  } else {
    out << j.dump();
  }
  out << "\n";
}

}  // namespace

json sparse_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!m.at(i, k).is_zero()) out.push_back({i, k, q(m.at(i, k))});
    }
  }
  return out;
}

Matrix sparse_from_json(const json& j, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (const auto& e : j) m.at(e[0].get<std::size_t>(), e[1].get<std::size_t>()) = Rational::parse(e[2].get<std::string>());
  return m;
}

json sparse_json(const TwistedMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& [k, v] : m.row(i)) {
      json terms = json::object();
      for (const auto& [tw, c] : v.terms()) terms[std::to_string(tw)] = q(c);
      out.push_back({i, k, v.str(), terms});
    }
  }
  return out;
}

json report_json(const Analysis& a) {
  json r;
  r["schema"] = kReportSchema;
  r["input"] = {{"polynomial", a.config.polynomial},
                {"vars", a.config.vars},
                {"spectrum_method", a.config.spectrum_str()},
                {"checks", a.config.full_checks ? "full" : "fast"}};
  r["germ"] = a.f.str(a.config.vars);
  r["n"] = a.n;
  r["mu"] = a.mu;
  r["tau"] = a.tau;
  json basis = json::array();
  for (const auto& m : a.qa.basis()) basis.push_back(m.str(a.config.vars));
  r["milnor_basis"] = basis;

  json mf = jordan_json(a.mf_jordan.type);
  mf["rank"] = a.mf.rank();
  mf["nilpotency_index"] = a.mf_index;
  mf["matrix"] = matrix_json(a.mf);
  r["multiplication"] = mf;

  json prim = json::object();
  for (const auto& [w, parts] : a.primitive) {
    json list = json::array();
    for (const auto& [k, d] : parts) list.push_back({{"k", k}, {"dim", d}});
    prim[std::to_string(w)] = list;
  }
  r["weight_filtration"] = {{"m0", a.wf.m0},
                            {"graded_dims", int_map(a.wf.graded_dims)},
                            {"primitive_dims", int_map(a.wf.primitive_dims)},
                            {"lefschetz", prim}};

  json values = json::array();
  for (const auto& [v, m] : a.spectrum.values) values.push_back({{"alpha", q(v)}, {"mult", m}});
  json fixed = json::array();
  for (std::size_t i = 0; i < a.kappa.size(); ++i) {
    if (a.kappa[i] == i) fixed.push_back(i);
  }
  json eig = json::array();
  for (const auto& e : monodromy_eigenvalues(a.spectrum)) eig.push_back(q(e));
  r["spectrum"] = {{"route", a.spectrum_route}, {"values", values}, {"kappa_fixed_points", fixed},
                   {"monodromy_eigenvalue_angles", eig}};

  json ranks = json::array();
  for (auto rk : a.pairing_ranks) ranks.push_back(rk);
  r["pairing"] = {{"residue_socle", a.residue.socle.monomial.str(a.config.vars)},
                  {"residue_socle_value", q(a.residue.socle_value)},
                  {"ranks", ranks},
                  {"b0", matrix_json(a.b0)}};

  r["hodge"] = {{"S", twisted_json(a.s)},
                {"Q", twisted_json(a.q)},
                {"J", twisted_json(a.j)},
                {"j_signs",
                 {{"epsilon_non_integer", a.j_signs.epsilon_non_integer},
                  {"epsilon_integer", a.j_signs.epsilon_integer},
                  {"consistent", a.j_signs.consistent}}}};

  if (a.graded) {
    json mons = json::array();
    for (const auto& m : a.gbasis.monomials) mons.push_back(m.str(a.config.vars));
    json grades = json::array();
    for (const auto& g : a.adapted.grading) grades.push_back(q(g));
    json scale = json::object();
    for (const auto& [i, c] : a.adapted.fixed_scale) scale[std::to_string(i)] = q(c);
    json theorem = json::array();
    for (std::size_t j = 0; j < a.theorem.size(); ++j) {
      theorem.push_back({{"j", j}, {"holds", a.theorem[j].holds}, {"twisted_holds", a.theorem[j].twisted_holds}});
    }
    json pairings = json::array();
    for (const auto& b : a.pairing_adapted) pairings.push_back(matrix_json(b));
    r["graded"] = {{"graded_monomials", mons},
                   {"grades", grades},
                   {"n_jordan", jordan_json(a.gop.n_type())},
                   {"fixed_scale", scale},
                   {"adapted_change", matrix_json(a.adapted.change)},
                   {"n_top", matrix_json(a.split.n_top)},
                   {"n_1", matrix_json(a.split.n_1)},
                   {"pairings_adapted", pairings},
                   {"main_theorem", theorem},
                   {"binding", binding_json(a.binding)}};
  } else {
    r["graded"] = {{"skipped", a.graded_note}};
  }

  json checks = json::object();
  for (const auto& c : a.checks) {
    checks[c.name] = c.detail.empty() ? json(c.ok) : json{{"ok", c.ok}, {"detail", c.detail}};
  }
  r["checks"] = checks;
  r["all_checks_pass"] = a.all_checks_pass();
  json timings = json::object();
  for (const auto& [k, v] : a.timings) timings[k] = v;
  r["timings"] = timings;
  return r;
}

json error_json(const Error& e) {
  return {{"schema", kReportSchema},
          {"error",
           {{"code", std::string(error_code_name(e.code()))},
            {"module", e.module()},
            {"message", e.what()},
            {"hint", error_hint(e.code())}}},
          {"exit_code", exit_code_for(e.code())}};
}

std::string report_text(const json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) render(out, k, v, 0);
  return out.str();
}

}  // namespace singlab
