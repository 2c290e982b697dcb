// explorer: exact computations on affine toric singularities and their
// finite abelian quotients, plus desk-scale enumeration campaigns.
//
// exit codes: 0 success, 2 verification failure, 3 cap exceeded, 1 other.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "toric/json_io.hpp"

namespace {

using toric::Json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw toric::IoError("cannot open '" + path + "'");
  return Json::parse(in, nullptr, true);
}

long env_cap_override(long fallback) {
  const char* s = std::getenv("EXPLORER_CAP");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v <= 0) throw toric::ParseError("EXPLORER_CAP must be a positive integer");
  return v;
}

// config file holds the same keys as the flags; flags win
void apply_config(CLI::App& app, const std::string& path) {
  if (path.empty()) return;
  Json cfg = load_json(path);
  for (const auto& [key, value] : cfg.items()) {
    CLI::Option* opt = app.get_option_no_throw("--" + key);
    if (!opt) throw toric::ParseError("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    if (value.is_string())
      opt->add_result(value.get<std::string>());
    else
      opt->add_result(value.dump());
    opt->run_callback();
  }
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric singularity explorer"};
  app.require_subcommand(1);

  std::string input_path, config_path, out_path, window_str, format_str = "json";
  long rmax = 0, r1 = 0, cap = 0;
  int dim = 2;
  bool no_dedupe = false, serial = false;
  std::string resolution_str = "1/100";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "input JSON file")->required();
    sub->add_option("--config", config_path, "JSON config with the same keys as the flags");
  };

  CLI::App* cmd_mld = app.add_subcommand("mld", "minimal log discrepancy of a toric pair");
  CLI::App* cmd_index = app.add_subcommand("index", "Cartier index of a toric pair");
  CLI::App* cmd_cox = app.add_subcommand("cox", "class group and Cox grading of a cone");
  for (auto* sub : {cmd_mld, cmd_index, cmd_cox}) add_input(sub);

  CLI::App* cmd_quot = app.add_subcommand("quotient", "log quotient by a finite torus subgroup");
  add_input(cmd_quot);

  CLI::App* cmd_aut = app.add_subcommand("aut", "fan automorphisms and outer toric groups");
  add_input(cmd_aut);

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "enumerate cyclic quotients");
  cmd_sweep->add_option("--dim", dim, "dimension (2 or 3)");
  cmd_sweep->add_option("--rmax", rmax, "sweep bound");
  cmd_sweep->add_option("--window", window_str, "mld window, e.g. 0.1:1 (default 0:1/dim!)");
  cmd_sweep->add_option("--r1", r1, "smaller bound for the stabilization report");
  cmd_sweep->add_option("--out", out_path, "output file");
  cmd_sweep->add_option("--format", format_str, "csv or json");
  cmd_sweep->add_flag("--no-dedupe", no_dedupe, "keep isomorphic overlattices");
  cmd_sweep->add_flag("--serial", serial, "force the serial reference path");
  cmd_sweep->add_option("--cap", cap, "sweep bound cap");
  cmd_sweep->add_option("--config", config_path, "JSON config with the same keys as the flags");

  CLI::App* cmd_table = app.add_subcommand("index-table", "Cartier indices per mld window");
  cmd_table->add_option("--dim", dim, "dimension (2 or 3)");
  cmd_table->add_option("--rmax", rmax, "sweep bound");
  cmd_table->add_option("--window", window_str, "mld window (default [1/2:1))");
  cmd_table->add_option("--r1", r1, "smaller bound for the growth flag");
  cmd_table->add_option("--out", out_path, "output file (default stdout)");
  cmd_table->add_option("--cap", cap, "sweep bound cap");
  cmd_table->add_option("--config", config_path, "JSON config with the same keys as the flags");

  CLI::App* cmd_scan = app.add_subcommand("acc-scan", "accumulation candidates in dimension 3");
  cmd_scan->add_option("--rmax", rmax, "sweep bound");
  cmd_scan->add_option("--resolution", resolution_str, "cluster gap resolution");
  cmd_scan->add_option("--out", out_path, "output file (default stdout)");
  cmd_scan->add_option("--cap", cap, "sweep bound cap");
  cmd_scan->add_option("--config", config_path, "JSON config with the same keys as the flags");

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    apply_config(*sub, config_path);

    if (sub == cmd_mld || sub == cmd_index || sub == cmd_cox) {
      print(toric::run_pair_query(load_json(input_path)));
      return 0;
    }
    if (sub == cmd_quot) {
      print(toric::run_quotient(load_json(input_path)));
      return 0;
    }
    if (sub == cmd_aut) {
      print(toric::run_aut(load_json(input_path)));
      return 0;
    }

    if (rmax <= 0) throw toric::ParseError("--rmax is required (flag or config)");
    toric::SweepParams params;
    params.dim = dim;
    params.rmax = rmax;
    params.rmax_cap = env_cap_override(cap > 0 ? cap : toric::kDefaultSweepCap);
    params.dedupe = !no_dedupe;

    if (sub == cmd_sweep) {
      if (out_path.empty()) throw toric::ParseError("--out is required (flag or config)");
      if (window_str.empty()) {
        long fact = 1;
        for (int i = 2; i <= dim; ++i) fact *= i;
        params.window = toric::Window{toric::Rat(0), toric::Rat(1, fact), false, false};
      } else {
        params.window = toric::Window::parse(window_str);
      }
      auto records = serial ? toric::enumerate_cyclic_serial(params) : toric::enumerate_cyclic(params);
      toric::EmitFormat fmt = format_str == "csv" ? toric::EmitFormat::csv : toric::EmitFormat::json;
      if (r1 > 0) {
        toric::SpectrumReport rep = toric::spectrum(records, params.window, r1, rmax);
        toric::emit(rep, fmt, out_path);
      } else {
        toric::emit(records, fmt, out_path);
      }
      std::cout << records.size() << " records -> " << out_path << "\n";
      return 0;
    }
    if (sub == cmd_table) {
      auto records = toric::enumerate_cyclic(params);  // unfiltered window
      toric::Window w = window_str.empty() ? toric::Window::parse("[1/2:1)") : toric::Window::parse(window_str);
      auto rows = toric::index_table(records, {w}, r1 > 0 ? r1 : rmax, rmax);
      Json j = toric::index_table_to_json(rows);
      if (out_path.empty())
        print(j);
      else {
        std::ofstream out(out_path);
        if (!out) throw toric::IoError("cannot open '" + out_path + "'");
        out << j.dump(2) << "\n";
      }
      return 0;
    }
    if (sub == cmd_scan) {
      params.dim = 3;
      auto records = toric::enumerate_cyclic(params);
      auto rep = toric::accumulation_scan(records, 3, toric::parse_rational(resolution_str));
      Json j = toric::accumulation_to_json(rep);
      if (out_path.empty())
        print(j);
      else {
        std::ofstream out(out_path);
        if (!out) throw toric::IoError("cannot open '" + out_path + "'");
        out << j.dump(2) << "\n";
      }
      return 0;
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const toric::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const toric::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
