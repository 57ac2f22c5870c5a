/**
 * Copyright The singlab Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "singlab/cli/paper_examples.hpp"
#include "singlab/cli/report.hpp"
#include "singlab/error.hpp"

namespace {

using nlohmann::json;
using namespace singlab;

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string v;
  while (std::getline(in, v, ',')) {
    if (!v.empty()) out.push_back(v);
  }
  return out;
}

bool write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

int report_error(const Error& e, const std::string& json_path) {
  std::cerr << "error [" << e.module() << "] " << error_code_name(e.code()) << ": " << e.what() << "\n"
            << "hint: " << error_hint(e.code()) << "\n";
  if (!json_path.empty()) write_file(json_path, error_json(e).dump(2) + "\n");
  return exit_code_for(e.code());
}

int run_command(const std::string& poly, const std::string& vars, const std::string& spectrum,
                const std::string& checks, const std::string& format, const std::string& json_path) {
  try {
    RunConfig cfg;
    cfg.polynomial = poly;
    cfg.vars = split_vars(vars);
    if (cfg.vars.empty()) throw Error(ErrorCode::InvalidConfig, "cli", "--vars is empty");
    cfg.set_spectrum(spectrum);
    cfg.full_checks = checks == "full";
    const Analysis a = analyze(cfg);
    const json report = report_json(a);
    if (format == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << report_text(report);
    }
    if (!json_path.empty() && !write_file(json_path, report.dump(2) + "\n")) return 2;
    if (!a.all_checks_pass()) {
      std::cerr << "verification failure:";
      for (const auto& c : a.checks) {
        if (!c.ok) std::cerr << " " << c.name;
      }
      std::cerr << "\n";
      return 4;
    }
    return 0;
  } catch (const Error& e) {
    return report_error(e, json_path);
  }
}

int verify_command(const std::string& golden_path, const std::string& json_path) {
  json golden;
  if (golden_path.empty()) {
    golden = embedded_golden();
  } else {
    std::ifstream in(golden_path);
    if (!in) {
      std::cerr << "error: cannot read " << golden_path << "\n";
      return 2;
    }
    try {
      golden = json::parse(in);
    } catch (const json::exception& e) {
      std::cerr << "error: bad golden file: " << e.what() << "\n";
      return 2;
    }
  }
  std::vector<GoldenOutcome> outcomes;
  try {
    outcomes = verify_paper_examples(golden);
  } catch (const json::exception& e) {
    std::cerr << "error: golden file does not match the expected layout: " << e.what() << "\n";
    return 2;
  }
  json table = json::array();
  for (const auto& o : outcomes) {
    std::cout << (o.ok ? "PASS " : "FAIL ") << o.example << " " << o.quantity;
    if (!o.ok) std::cout << "\n     expected " << o.expected << "\n     actual   " << o.actual;
    std::cout << "\n";
    table.push_back({{"example", o.example}, {"quantity", o.quantity}, {"ok", o.ok}, {"expected", o.expected},
                     {"actual", o.actual}});
  }
  const bool ok = all_ok(outcomes);
  std::cout << (ok ? "all reference examples match\n" : "reference example mismatch\n");
  if (!json_path.empty()) write_file(json_path, json{{"schema", "singlab.verify/1"}, {"ok", ok}, {"results", table}}.dump(2) + "\n");
  return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singlab: monodromy, pairings and spectra of isolated hypersurface singularities"};
  app.require_subcommand(1);

  std::string poly, vars = "x,y", spectrum = "auto", checks = "fast", format = "text", json_path;
  auto* run = app.add_subcommand("run", "analyze one germ");
  run->add_option("--f", poly, "polynomial, e.g. \"x^5+y^6+x^4y\"")->required();
  run->add_option("--vars", vars, "comma separated variable names")->capture_default_str();
  run->add_option("--spectrum", spectrum, "auto | newton | qh:<w1,..> | ts:<f1>;<f2> | external:<path>")
      ->capture_default_str();
  run->add_option("--checks", checks, "fast | full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  run->add_option("--format", format, "stdout format: text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  run->add_option("--json", json_path, "also write the JSON report here (- for stdout)");

  std::string golden_path, verify_json;
  auto* verify = app.add_subcommand("verify-paper-examples", "compare the reference examples against golden data");
  verify->add_option("--golden", golden_path, "golden file (default: the embedded copy)");
  verify->add_option("--json", verify_json, "write the result table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*run) return run_command(poly, vars, spectrum, checks, format, json_path);
  return verify_command(golden_path, verify_json);
}
