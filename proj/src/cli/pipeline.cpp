/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "singlab/cli/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "singlab/error.hpp"
#include "singlab/localalg/macaulay.hpp"

namespace singlab {

namespace {

class Stopwatch {
 public:
  Stopwatch(std::map<std::string, double>& sink, std::string name)
      : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    sink_[name_] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::map<std::string, double>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

void add_check(Analysis& a, std::string name, bool ok, std::string detail = "") {
  a.checks.push_back({std::move(name), ok, std::move(detail)});
}

// Restricts g (in the global variables) to the variables it uses.
std::pair<MultiPoly, std::vector<std::size_t>> localize(const MultiPoly& g) {
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < g.nvars(); ++i) {
    for (const auto& t : g.terms()) {
      if (t.mono[i] > 0) {
        used.push_back(i);
        break;
      }
    }
  }
  std::vector<Term> terms;
  for (const auto& t : g.terms()) {
    std::vector<unsigned> e;
    for (auto v : used) e.push_back(t.mono[v]);
    terms.push_back({Monomial(e), t.coeff});
  }
  return {MultiPoly::from_terms(used.size(), std::move(terms)), used};
}

struct GradingChoice {
  SpectrumData spectrum;
  std::optional<MonomialGrading> grading;
  std::optional<std::vector<Monomial>> candidates;
  std::string route;
};

GradingChoice choose_spectrum(const RunConfig& cfg, const MultiPoly& f, const QuotientAlgebra& qa) {
  GradingChoice c;
  const int n = static_cast<int>(f.nvars()) - 1;
  switch (cfg.method) {
    case SpectrumMethod::Newton: {
      const NewtonDiagram nd = newton_diagram(f);
      c.spectrum = spectrum_newton_curve(f);
      c.grading = newton_grading(nd);
      c.route = "newton";
      break;
    }
    case SpectrumMethod::QuasiHomogeneous: {
      c.spectrum = spectrum_quasihomogeneous(cfg.weights, f, qa);
      c.grading = weight_grading(cfg.weights);
      c.route = "qh";
      break;
    }
    case SpectrumMethod::Auto: {
      const auto s = spectral_summand(f, [&] {
        std::vector<std::size_t> all(f.nvars());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
      }());
      c.spectrum = s.spectrum;
      c.grading = s.grading;
      c.route = f.nvars() == 2 && newton_diagram(f).convenient && nondegeneracy_check(f, newton_diagram(f)) ? "newton"
                                                                                                          : "qh";
      break;
    }
    case SpectrumMethod::ThomSebastiani: {
      std::vector<SpectralSummand> parts;
      MultiPoly total(f.nvars());
      std::set<std::size_t> seen;
      for (const auto& text : cfg.summands) {
        const MultiPoly g = MultiPoly::parse(text, cfg.vars);
        total += g;
        auto [local, used] = localize(g);
        for (auto v : used) {
          if (!seen.insert(v).second) {
            throw Error(ErrorCode::InvalidConfig, "cli", "summands share the variable " + cfg.vars[v]);
          }
        }
        parts.push_back(spectral_summand(local, used));
      }
      if (!(total == f)) throw Error(ErrorCode::InvalidConfig, "cli", "summands do not add up to the germ");
      if (seen.size() != f.nvars()) throw Error(ErrorCode::InvalidConfig, "cli", "summands do not use every variable");
      c.spectrum = join_spectrum(parts);
      c.grading = join_grading(parts);
      c.candidates = join_candidates(parts, f.nvars());
      c.route = "ts";
      break;
    }
    case SpectrumMethod::External: {
      std::ifstream in(cfg.external_path);
      if (!in) throw Error(ErrorCode::Io, "cli", "cannot read " + cfg.external_path);
      std::stringstream buf;
      buf << in.rdbuf();
      c.spectrum = parse_external_spectrum(buf.str(), n);
      c.route = "external";
      break;
    }
  }
  if (c.spectrum.n != n) throw Error(ErrorCode::InvalidSpectrum, "cli", "spectrum dimension does not match the germ");
  if (c.spectrum.mu() != qa.mu()) {
    throw Error(ErrorCode::InvalidSpectrum, "cli",
                "spectrum has " + std::to_string(c.spectrum.mu()) + " values but mu = " + std::to_string(qa.mu()));
  }
  return c;
}

bool grade_upper_triangular(const Matrix& change, const std::vector<Rational>& grading) {
  for (std::size_t c = 0; c < change.cols(); ++c) {
    for (std::size_t r = 0; r < change.rows(); ++r) {
      if (!change.at(r, c).is_zero() && grading[r] < grading[c]) return false;
    }
  }
  return true;
}

}  // namespace

void RunConfig::set_spectrum(const std::string& spec) {
  weights.clear();
  summands.clear();
  external_path.clear();
  if (spec == "auto") {
    method = SpectrumMethod::Auto;
  } else if (spec == "newton") {
    method = SpectrumMethod::Newton;
  } else if (spec.rfind("qh:", 0) == 0) {
    method = SpectrumMethod::QuasiHomogeneous;
    for (const auto& w : split(spec.substr(3), ',')) {
      try {
        weights.push_back(Rational::parse(w));
      } catch (const Error&) {
        throw Error(ErrorCode::InvalidConfig, "cli", "bad weight '" + w + "'");
      }
    }
    if (weights.empty()) throw Error(ErrorCode::InvalidConfig, "cli", "qh: needs weights");
  } else if (spec.rfind("ts:", 0) == 0) {
    method = SpectrumMethod::ThomSebastiani;
    summands = split(spec.substr(3), ';');
    if (summands.size() < 2) throw Error(ErrorCode::InvalidConfig, "cli", "ts: needs at least two summands");
  } else if (spec.rfind("external:", 0) == 0) {
    method = SpectrumMethod::External;
    external_path = spec.substr(9);
    if (external_path.empty()) throw Error(ErrorCode::InvalidConfig, "cli", "external: needs a path");
  } else {
    throw Error(ErrorCode::InvalidConfig, "cli", "unknown spectrum method '" + spec + "'");
  }
}

std::string RunConfig::spectrum_str() const {
  switch (method) {
    case SpectrumMethod::Auto:
      return "auto";
    case SpectrumMethod::Newton:
      return "newton";
    case SpectrumMethod::QuasiHomogeneous: {
      std::string s = "qh:";
      for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + weights[i].str();
      return s;
    }
    case SpectrumMethod::ThomSebastiani: {
      std::string s = "ts:";
      for (std::size_t i = 0; i < summands.size(); ++i) s += (i ? ";" : "") + summands[i];
      return s;
    }
    case SpectrumMethod::External:
      return "external:" + external_path;
  }
  return "";
}

bool Analysis::all_checks_pass() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

Analysis analyze(const RunConfig& cfg) {
  Analysis a;
  a.config = cfg;
  {
    Stopwatch sw(a.timings, "algebra");
    a.f = MultiPoly::parse(cfg.polynomial, cfg.vars);
    a.n = static_cast<int>(a.f.nvars()) - 1;
    a.qa = QuotientAlgebra::jacobian(a.f);
    a.mu = a.qa.mu();
    a.tau = tjurina_number(a.f);
    a.mf = a.qa.multiplication_matrix(a.f);
  }
  {
    Stopwatch sw(a.timings, "nilpotent");
    a.mf_jordan = jordan_chains(a.mf);
    a.mf_index = nilpotency_index(a.mf);
    a.wf = weight_filtration(a.mf_jordan);
    a.primitive = primitive_decomposition(a.wf, a.mf);
  }
  {
    Stopwatch sw(a.timings, "pairing");
    a.residue = residue_functional(a.qa, a.f);
    a.b0 = residue_gram(a.qa, a.residue);
    for (unsigned j = 0; j <= a.mf_index; ++j) {
      a.pairing_ranks.push_back(radical_rank(pairing_matrix(j, a.b0, a.mf).entries).rank);
    }
  }
  GradingChoice choice;
  {
    Stopwatch sw(a.timings, "spectrum");
    choice = choose_spectrum(cfg, a.f, a.qa);
    a.spectrum = choice.spectrum;
    a.spectrum_route = choice.route;
    a.kappa = kappa_involution(a.spectrum);
    a.s = build_S(a.kappa);
    a.q = build_Q(a.spectrum, a.kappa);
    a.j = build_J(a.q, a.s);
    a.j_signs = j_sign_report(a.j, a.spectrum);
  }
  if (choice.grading) {
    a.graded = true;
    {
      Stopwatch sw(a.timings, "grading");
      a.gbasis = grade_basis(a.qa, *choice.grading, a.spectrum, choice.candidates ? &*choice.candidates : nullptr);
      a.gop = graded_multiplication(a.gbasis.conjugate(a.mf), a.gbasis.grading);
      a.spectrum.nu_n = spectral_chain_map(a.gop.jordan, a.gbasis.grading);
    }
    {
      Stopwatch sw(a.timings, "adapted_basis");
      a.adapted = adapt_basis(a.gbasis.congruent(a.b0), a.gbasis.grading, a.kappa);
      a.adapted_to_standard = a.gbasis.to_standard * a.adapted.change;
      const Matrix back = a.adapted_to_standard.inverse();
      a.mf_adapted = back * a.mf * a.adapted_to_standard;
      a.split = split_ntop_n1(a.mf_adapted, a.adapted.grading);
    }
    {
      Stopwatch sw(a.timings, "main_theorem");
      const Matrix pt = a.adapted_to_standard.transpose();
      for (unsigned jj = 0; jj <= static_cast<unsigned>(a.n) + 1; ++jj) {
        const Matrix bj = pairing_matrix(jj, a.b0, a.mf).entries;
        a.pairing_adapted.push_back(pt * bj * a.adapted_to_standard);
        a.theorem.push_back(verify_main_theorem(jj, a.pairing_adapted.back(), a.split, a.adapted, a.q, a.j));
      }
    }
    {
      Stopwatch sw(a.timings, "binding");
      a.binding = bind_chains(a.split, a.adapted.grading);
    }
  } else {
    a.graded_note = "no grading of A_f for an external spectrum; adapted-basis stages skipped";
  }

  Stopwatch sw(a.timings, "checks");
  const std::size_t mu = a.mu;
  add_check(a, "rank_mf_equals_mu_minus_tau", a.mf.rank() == mu - a.tau);
  add_check(a, "mf_power_n_plus_1_vanishes", a.mf.power(static_cast<unsigned>(a.n) + 1).is_zero());
  {
    bool sym = true;
    bool radical = true;
    for (unsigned jj = 0; jj <= a.mf_index + 1; ++jj) {
      const Matrix bj = pairing_matrix(jj, a.b0, a.mf).entries;
      sym = sym && bj.is_symmetric();
      const auto rr = radical_rank(bj);
      radical = radical && Subspace::span(rr.radical, mu) == Subspace::kernel(a.mf.power(jj));
    }
    add_check(a, "pairing_symmetric", sym);
    add_check(a, "pairing_radical_is_kernel", radical);
  }
  {
    bool sym = true;
    for (const auto& [w, d] : a.wf.graded_dims) {
      const auto it = a.wf.graded_dims.find(-w);
      sym = sym && it != a.wf.graded_dims.end() && it->second == d;
    }
    add_check(a, "weight_filtration_symmetric", sym);
    bool lefschetz = true;
    for (const auto& [w, parts] : a.primitive) {
      std::size_t total = 0;
      for (const auto& [k, d] : parts) total += d;
      const auto it = a.wf.graded_dims.find(w);
      lefschetz = lefschetz && total == (it == a.wf.graded_dims.end() ? 0 : it->second);
    }
    add_check(a, "lefschetz_sums", lefschetz);
  }
  {
    const auto flat = a.spectrum.flat();
    bool sym = flat.size() == mu;
    for (std::size_t i = 0; sym && i < mu; ++i) sym = flat[i] + flat[mu - 1 - i] == Rational(a.n - 1);
    add_check(a, "spectrum_symmetric", sym);
  }
  add_check(a, "s_equals_qj", a.q * a.j == a.s);
  {
    bool qsym = true;
    const auto flat = a.spectrum.flat();
    for (std::size_t i = 0; i < mu; ++i) {
      const std::size_t k = a.kappa[i];
      const int parity = flat[i].is_integer() ? a.n + 1 : a.n;
      const TwistedScalar expected = parity % 2 == 0 ? a.q.at(i, k) : -a.q.at(i, k);
      qsym = qsym && a.q.at(k, i) == expected;
    }
    add_check(a, "q_symmetry", qsym);
    bool jsq = a.j.is_diagonal();
    const TwistedMatrix j2 = a.j * a.j;
    for (std::size_t i = 0; jsq && i < mu; ++i) {
      const TwistedScalar d = j2.at(i, i);
      const int twist = flat[i].is_integer() ? -2 * (a.n + 1) : -2 * a.n;
      jsq = d == TwistedScalar(Rational(1), twist);
    }
    add_check(a, "j_square_pure_twist", jsq);
  }
  if (a.graded) {
    add_check(a, "adapted_basis_keeps_grades", grade_upper_triangular(a.adapted.change, a.gbasis.grading));
    add_check(a, "decomposition_exact", a.split.n_top + a.split.n_1 == a.mf_adapted);
    add_check(a, "ntop_type_equals_graded_type",
              jordan_type_from_ranks(a.split.n_top) == a.gop.n_type(),
              jordan_type_str(jordan_type_from_ranks(a.split.n_top)) + " vs " + jordan_type_str(a.gop.n_type()));
    for (std::size_t jj = 0; jj < a.theorem.size(); ++jj) {
      add_check(a, "main_theorem_j" + std::to_string(jj), a.theorem[jj].holds && a.theorem[jj].twisted_holds);
    }
    add_check(a, "binding_consistent", a.binding.consistent);
  }
  if (cfg.full_checks) {
    const auto oracle = macaulay_stabilized(jacobian_generators(a.f), a.qa.standard_basis().corner + 4);
    std::set<Monomial, LocalDescending> sb(a.qa.basis().begin(), a.qa.basis().end());
    std::set<Monomial, LocalDescending> ob(oracle.basis.begin(), oracle.basis.end());
    add_check(a, "macaulay_oracle_agrees", oracle.stabilized && oracle.mu == mu && sb == ob);
    if (a.f.nvars() == 2) {
      const NewtonDiagram nd = newton_diagram(a.f);
      if (nd.convenient && nondegeneracy_check(a.f, nd)) {
        add_check(a, "kouchnirenko_agrees", kouchnirenko_mu(nd) == static_cast<long>(mu));
      }
    }
    if (mu <= 60) {
      bool direct = true;
      for (unsigned jj = 0; jj <= a.mf_index; ++jj) {
        direct = direct && pairing_matrix_direct(jj, a.qa, a.f, a.residue).entries == pairing_matrix(jj, a.b0, a.mf).entries;
      }
      add_check(a, "pairing_direct_definition", direct);
    }
  }
  return a;
}

std::string error_hint(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
      return "check the polynomial syntax";
    case ErrorCode::UnknownVariable:
      return "every variable in the polynomial must be listed in --vars";
    case ErrorCode::NvarsMismatch:
      return "polynomials must share one variable list";
    case ErrorCode::NotSingular:
      return "the germ must vanish at the origin with vanishing gradient";
    case ErrorCode::NotIsolated:
      return "germ has non-isolated singularity";
    case ErrorCode::NotConvenient:
      return "the Newton diagram must meet both axes; try --spectrum qh:... or external:...";
    case ErrorCode::DegenerateNewtonBoundary:
      return "germ is Newton-degenerate; supply --spectrum external:<file>";
    case ErrorCode::WrongArity:
      return "the Newton route needs exactly two variables; try qh: or ts:";
    case ErrorCode::NotQuasiHomogeneous:
      return "weights do not make the germ quasi-homogeneous; supply --spectrum external:<file>";
    case ErrorCode::SpectrumMismatch:
    case ErrorCode::FiltrationViolation:
    case ErrorCode::GradingPairingClash:
      return "germ lies outside the supported spectrum classes; supply --spectrum external:<file>";
    case ErrorCode::InvalidSpectrum:
      return "spectrum values must lie in (-1, n), be symmetric about (n-1)/2 and number mu";
    case ErrorCode::InvalidConfig:
      return "see singlab --help";
    case ErrorCode::Io:
      return "check the file path";
    default:
      return "internal consistency check failed; please report the input";
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::UnknownVariable:
    case ErrorCode::NvarsMismatch:
    case ErrorCode::InvalidConfig:
    case ErrorCode::InvalidSpectrum:
    case ErrorCode::Io:
    case ErrorCode::WrongArity:
      return 2;
    case ErrorCode::NotSingular:
    case ErrorCode::NotIsolated:
    case ErrorCode::NotConvenient:
    case ErrorCode::DegenerateNewtonBoundary:
    case ErrorCode::NotQuasiHomogeneous:
    case ErrorCode::SpectrumMismatch:
    case ErrorCode::FiltrationViolation:
    case ErrorCode::GradingPairingClash:
      return 3;
    default:
      return 4;
  }
}

}  // namespace singlab
