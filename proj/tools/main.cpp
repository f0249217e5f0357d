// Benchmark driver for the balance-law solver library.
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "balsa/harness.hpp"

namespace {

// Flags mirror config-file keys; values are kept as text and funneled through
// the same parser so that "config file first, flags override" holds trivially.
struct FlagText {
  std::vector<std::pair<std::string, std::string>> entries;
};

void add_common_flags(CLI::App* cmd, FlagText& ft, std::string& config_path) {
  auto bind = [cmd, &ft](const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + key,
        [key, &ft](const std::string& v) { ft.entries.emplace_back(key, v); }, help);
  };
  bind("case", "test case name (see list-cases)");
  bind("scheme", "weno|wb|wb1|wbwar|wbmc");
  bind("order", "reconstruction order, 3 or 5");
  bind("cells", "number of cells (0 = case default)");
  bind("weights", "nonlinear|linear");
  bind("splitting", "glf|llf|upwind");
  bind("singular", "centered|upwind (point-source discretization at jumps)");
  bind("extension", "closed|ode (stationary extension mode)");
  bind("dt", "cfl|dx53|fixed:<value>");
  bind("cfl", "CFL number (default 0.5)");
  bind("tfinal", "final time override");
  bind("g", "gravity constant (default 9.81)");
  bind("pert-center", "perturbation center for *-pert cases");
  bind("seed", "seed echoed into reports");
  bind("out", "output directory for CSV/report files");
  cmd->add_option("--config", config_path, "key=value config file (flags override)");
}

balsa::RunConfig build_config(const FlagText& ft, const std::string& config_path) {
  balsa::RunConfig rc;
  if (!config_path.empty())
    for (const auto& [k, v] : balsa::parse_config_file(config_path))
      balsa::apply_config_entry(rc, k, v);
  for (const auto& [k, v] : ft.entries) balsa::apply_config_entry(rc, k, v);
  if (rc.case_name.empty()) throw std::invalid_argument("no test case selected (--case)");
  return rc;
}

std::vector<int> parse_meshes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty mesh list");
  return out;
}

void list_cases() {
  for (const auto& tc : balsa::testcase_registry()) {
    std::printf("%-28s %-8s %-16s cells=%-5d t=%-6g %s\n", tc.name.c_str(),
                tc.model.c_str(), tc.bathymetry.c_str(), tc.default_cells, tc.t_final,
                tc.description.c_str());
  }
}

void list_schemes() {
  std::printf("weno    standard finite-difference WENO with pointwise source\n");
  std::printf("wb      well-balanced WENO, stationary extension per node\n");
  std::printf("wb1     well-balanced WENO around one fixed reference solution\n");
  std::printf("wbwar   well-balanced for water at rest (shallow water)\n");
  std::printf("wbmc    well-balanced and exactly mass-conservative (shallow water)\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D balance-law benchmark driver (well-balanced WENO schemes)"};
  app.require_subcommand(1);

  FlagText run_ft, conv_ft, time_ft;
  std::string run_cfg, conv_cfg, time_cfg;
  std::string conv_meshes_text, time_meshes_text = "50,100,200";
  int conv_levels = 0;
  int repeats = 3;

  CLI::App* cmd_run = app.add_subcommand("run", "run one case and report errors/mass");
  add_common_flags(cmd_run, run_ft, run_cfg);

  CLI::App* cmd_conv = app.add_subcommand("converge", "refinement ladder with L1 errors");
  add_common_flags(cmd_conv, conv_ft, conv_cfg);
  cmd_conv->add_option("--meshes", conv_meshes_text, "comma-separated cell counts");
  cmd_conv->add_option("--levels", conv_levels,
                       "number of refinement levels doubling from --cells");

  CLI::App* cmd_time = app.add_subcommand("timing", "wall-clock ratio vs standard weno");
  add_common_flags(cmd_time, time_ft, time_cfg);
  cmd_time->add_option("--meshes", time_meshes_text, "comma-separated cell counts");
  cmd_time->add_option("--repeats", repeats, "runs per measurement (median)");

  app.add_subcommand("list-cases", "print the test-case catalog");
  app.add_subcommand("list-schemes", "print the scheme families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_run->parsed()) {
      const balsa::RunConfig rc = build_config(run_ft, run_cfg);
      const balsa::RunReport rep = balsa::run_case(rc);
      balsa::write_report(std::cout, rep);
    } else if (cmd_conv->parsed()) {
      const balsa::RunConfig rc = build_config(conv_ft, conv_cfg);
      std::vector<int> meshes;
      if (!conv_meshes_text.empty()) {
        meshes = parse_meshes(conv_meshes_text);
      } else {
        const balsa::TestCase* tc = balsa::find_case(rc.case_name);
        if (!tc) throw std::invalid_argument("unknown case: " + rc.case_name);
        int cells = rc.cells > 0 ? rc.cells : tc->default_cells;
        const int levels = conv_levels > 0 ? conv_levels : 4;
        for (int l = 0; l < levels; ++l, cells *= 2) meshes.push_back(cells);
      }
      const auto rows = balsa::run_convergence(rc, meshes);
      balsa::write_convergence(std::cout, rows);
      if (!rc.out_dir.empty()) {
        std::ofstream os(rc.out_dir + "/" + rc.case_name + "_" + rc.scheme +
                         std::to_string(rc.order) + "_convergence.csv");
        balsa::write_convergence(os, rows);
      }
    } else if (cmd_time->parsed()) {
      const balsa::RunConfig rc = build_config(time_ft, time_cfg);
      const auto rows = balsa::run_timing(rc, parse_meshes(time_meshes_text), repeats);
      balsa::write_timing(std::cout, rows);
      if (!rc.out_dir.empty()) {
        std::ofstream os(rc.out_dir + "/" + rc.case_name + "_" + rc.scheme +
                         std::to_string(rc.order) + "_timing.csv");
        balsa::write_timing(os, rows);
      }
    } else if (app.get_subcommand("list-cases")->parsed()) {
      list_cases();
    } else if (app.get_subcommand("list-schemes")->parsed()) {
      list_schemes();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
