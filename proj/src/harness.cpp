#include "balsa/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace balsa {

namespace {

SchemeFamily family_from_word(const std::string& word) {
  if (word == "weno") return SchemeFamily::Standard;
  if (word == "wb") return SchemeFamily::WBFull;
  if (word == "wb1") return SchemeFamily::WBSingle;
  if (word == "wbwar") return SchemeFamily::WBWaterAtRest;
  if (word == "wbmc") return SchemeFamily::WBMassCons;
  throw std::invalid_argument("unknown scheme: " + word +
                              " (expected weno|wb|wb1|wbwar|wbmc)");
}

TimeConfig time_config_from(const RunConfig& rc, const TestCase& tc) {
  TimeConfig out;
  out.t_final = rc.t_final >= 0.0 ? rc.t_final : tc.t_final;
  out.cfl = rc.cfl;
  if (rc.dt_rule == "cfl") {
    out.rule = DtRule::CflBased;
  } else if (rc.dt_rule == "dx53") {
    out.rule = DtRule::OrderFiveScaling;
  } else if (rc.dt_rule.rfind("fixed:", 0) == 0) {
    out.rule = DtRule::Fixed;
    out.fixed_dt = std::stod(rc.dt_rule.substr(6));
  } else {
    throw std::invalid_argument("unknown dt rule: " + rc.dt_rule +
                                " (expected cfl|dx53|fixed:<value>)");
  }
  return out;
}

std::vector<std::string> component_names(int nc) {
  return nc == 1 ? std::vector<std::string>{"u"} : std::vector<std::string>{"h", "q"};
}

const char* weights_word(WeightMode w) {
  return w == WeightMode::Nonlinear ? "nonlinear" : "linear";
}
const char* splitting_word(Splitting s) {
  switch (s) {
    case Splitting::GlobalLF: return "glf";
    case Splitting::LocalLF: return "llf";
    case Splitting::UpwindProjection: return "upwind";
  }
  return "?";
}
const char* singular_word(SingularSourceMode m) {
  return m == SingularSourceMode::Centered ? "centered" : "upwind";
}
const char* extension_word(ExtensionMode m) {
  return m == ExtensionMode::ClosedForm ? "closed" : "ode";
}

void write_solution_csv(const std::string& path, const Grid& grid, const Bathymetry& bath,
                        const StateField& U, const StateField* exact) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  const auto names = component_names(U.n_comp());
  os << "x";
  for (const auto& nm : names) os << "," << nm;
  os << ",H";
  if (exact)
    for (const auto& nm : names) os << ",exact_" << nm;
  os << "\n";
  for (int i = 0; i < U.n_interior(); ++i) {
    const double x = grid.x(i);
    os << format_double(x);
    for (int c = 0; c < U.n_comp(); ++c) os << "," << format_double(U.at(c, i));
    os << "," << format_double(bath.H(x));
    if (exact)
      for (int c = 0; c < U.n_comp(); ++c) os << "," << format_double(exact->at(c, i));
    os << "\n";
  }
}

std::string run_tag(const RunConfig& rc, int cells) {
  std::ostringstream ss;
  ss << rc.case_name << "_" << rc.scheme << rc.order << "_" << cells;
  return ss.str();
}

// Plain-text field snapshot used for cached reference solutions.
bool load_field(const std::string& path, int nc, int n, StateField& out) {
  std::ifstream is(path);
  if (!is) return false;
  int file_nc = 0, file_n = 0;
  if (!(is >> file_nc >> file_n) || file_nc != nc || file_n != n) return false;
  out = StateField(nc, n, 0);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      if (!(is >> out.at(c, i))) return false;
  return true;
}

void save_field(const std::string& path, const StateField& f) {
  std::ofstream os(path);
  if (!os) return;  // cache is best-effort
  os << f.n_comp() << " " << f.n_interior() << "\n";
  for (int c = 0; c < f.n_comp(); ++c)
    for (int i = 0; i < f.n_interior(); ++i) os << format_double(f.at(c, i)) << "\n";
}

struct RunArtifacts {
  RunReport report;
  StateField field;  // interior + ghosts, final time
  Grid grid;
};

RunArtifacts run_case_full(const RunConfig& rc) {
  const TestCase* tc = find_case(rc.case_name);
  if (!tc) throw std::invalid_argument("unknown case: " + rc.case_name);
  if (rc.order != 3 && rc.order != 5)
    throw std::invalid_argument("order must be 3 or 5");
  const auto model = make_model(tc->model, rc.g);
  const Bathymetry bath = make_bathymetry(tc->bathymetry);
  const int cells = rc.cells > 0 ? rc.cells : tc->default_cells;
  const Grid grid = make_grid(tc->x_lo, tc->x_hi, cells);
  SchemeConfig sc;
  sc.family = family_from_word(rc.scheme);
  sc.order = rc.order;
  sc.weights = rc.weights;
  sc.splitting = rc.splitting;
  sc.singular = rc.singular;
  sc.extension = rc.extension;
  const CaseParams params{rc.g, rc.pert_center};
  if (sc.family == SchemeFamily::WBSingle) {
    if (!tc->has_equilibrium())
      throw std::invalid_argument("case " + tc->name +
                                  " has no reference equilibrium required by wb1");
    auto eq = tc->equilibrium;
    sc.reference = [eq, params](double x, double* U) { eq(x, params, U); };
  }
  const TimeConfig tcfg = time_config_from(rc, *tc);
  const BoundarySpec bc = tc->boundary(params);
  if (cells < 2 * sc.k() + 3)
    throw std::invalid_argument("need at least " + std::to_string(2 * sc.k() + 3) +
                                " cells for order " + std::to_string(rc.order));

  StateField U(model->n_comp(), cells, ghost_width(sc));
  double buf[kMaxFieldComp];
  for (int i = 0; i < cells; ++i) {
    tc->initial(grid.x(i), params, buf);
    for (int c = 0; c < model->n_comp(); ++c) U.at(c, i) = buf[c];
  }

  const auto conserved = model->conserved_components();
  std::vector<double> m0(conserved.size(), 0.0);
  double mass_dev = 0.0;
  std::vector<double> mass_series, mass_times;
  auto callback = [&](int step, double t, const StateField& f) {
    for (std::size_t idx = 0; idx < conserved.size(); ++idx) {
      const double m = mass(f, grid.dx(), conserved[idx]);
      if (step == 0)
        m0[idx] = m;
      else
        mass_dev = std::max(mass_dev, std::abs(m - m0[idx]) / std::abs(m0[idx]));
      if (idx == 0) {
        mass_series.push_back(m);
        mass_times.push_back(t);
      }
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  const RunStats st = run(sc, *model, bath, grid, bc, U, tcfg,
                          conserved.empty() ? std::function<void(int, double, const StateField&)>{}
                                            : callback);
  const auto t1 = std::chrono::steady_clock::now();

  RunArtifacts out{.report = {}, .field = U, .grid = grid};
  RunReport& rep = out.report;
  rep.case_name = tc->name;
  rep.scheme = rc.scheme;
  rep.order = rc.order;
  rep.cells = cells;
  rep.steps = st.steps;
  rep.dx = grid.dx();
  rep.dt_first = st.dt_first;
  rep.t_final = st.t;
  rep.dt_rule = rc.dt_rule;
  rep.g = rc.g;
  rep.seed = rc.seed;
  rep.weights = weights_word(rc.weights);
  rep.splitting = splitting_word(rc.splitting);
  rep.singular = singular_word(rc.singular);
  rep.extension = extension_word(rc.extension);
  rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  if (!conserved.empty()) {
    rep.mass_dev = mass_dev;
    rep.mass_series = std::move(mass_series);
    rep.mass_times = std::move(mass_times);
  }

  std::optional<StateField> exact;
  if (tc->has_exact()) {
    StateField ex(model->n_comp(), cells, 0);
    for (int i = 0; i < cells; ++i) {
      tc->exact(grid.x(i), st.t, params, buf);
      for (int c = 0; c < model->n_comp(); ++c) ex.at(c, i) = buf[c];
    }
    rep.l1 = l1_error(U, ex, grid.dx());
    double linf = 0.0;
    for (int c = 0; c < model->n_comp(); ++c)
      for (int i = 0; i < cells; ++i)
        linf = std::max(linf, std::abs(U.at(c, i) - ex.at(c, i)));
    rep.linf = linf;
    exact = std::move(ex);
  }

  if (!rc.out_dir.empty()) {
    std::filesystem::create_directories(rc.out_dir);
    const std::string base = rc.out_dir + "/" + run_tag(rc, cells);
    write_solution_csv(base + ".csv", grid, bath, U, exact ? &*exact : nullptr);
    std::ofstream rs(base + ".txt");
    write_report(rs, rep);
    if (!rep.mass_series.empty()) {
      std::ofstream ms(base + "_mass.csv");
      ms << "t,mass,rel_deviation\n";
      for (std::size_t s = 0; s < rep.mass_series.size(); ++s)
        ms << format_double(rep.mass_times[s]) << "," << format_double(rep.mass_series[s])
           << ","
           << format_double(std::abs(rep.mass_series[s] - rep.mass_series[0]) /
                            std::abs(rep.mass_series[0]))
           << "\n";
    }
  }
  return out;
}

}  // namespace

SchemeConfig scheme_config_from(const RunConfig& rc, const TestCase& tc) {
  SchemeConfig sc;
  sc.family = family_from_word(rc.scheme);
  sc.order = rc.order;
  sc.weights = rc.weights;
  sc.splitting = rc.splitting;
  sc.singular = rc.singular;
  sc.extension = rc.extension;
  if (sc.family == SchemeFamily::WBSingle) {
    if (!tc.has_equilibrium())
      throw std::invalid_argument("case " + tc.name +
                                  " has no reference equilibrium required by wb1");
    const CaseParams params{rc.g, rc.pert_center};
    auto eq = tc.equilibrium;
    sc.reference = [eq, params](double x, double* U) { eq(x, params, U); };
  }
  return sc;
}

RunReport run_case(const RunConfig& rc) { return run_case_full(rc).report; }

std::vector<ConvergenceRow> run_convergence(const RunConfig& rc,
                                            const std::vector<int>& meshes) {
  const TestCase* tc = find_case(rc.case_name);
  if (!tc) throw std::invalid_argument("unknown case: " + rc.case_name);
  std::vector<ConvergenceRow> rows;
  for (std::size_t level = 0; level < meshes.size(); ++level) {
    RunConfig rcm = rc;
    rcm.cells = meshes[level];
    double err;
    if (tc->has_exact()) {
      const RunReport rep = run_case(rcm);
      err = rep.l1.value();
    } else {
      // Reference: same scheme at 10x resolution, restricted by averaging the
      // ten fine cells covering each coarse cell.
      RunArtifacts coarse = run_case_full(rcm);
      const int nf = meshes[level] * 10;
      StateField ref(coarse.field.n_comp(), meshes[level], 0);
      StateField fine(coarse.field.n_comp(), nf, 0);
      std::string cache_path;
      bool have = false;
      if (!rc.out_dir.empty()) {
        std::filesystem::create_directories(rc.out_dir + "/refs");
        cache_path = rc.out_dir + "/refs/" + run_tag(rcm, nf) + ".txt";
        have = load_field(cache_path, coarse.field.n_comp(), nf, fine);
      }
      if (!have) {
        RunConfig rcf = rcm;
        rcf.cells = nf;
        rcf.out_dir.clear();
        RunArtifacts fa = run_case_full(rcf);
        fine = fa.field;
        if (!cache_path.empty()) save_field(cache_path, fine);
      }
      for (int c = 0; c < ref.n_comp(); ++c)
        for (int i = 0; i < ref.n_interior(); ++i) {
          double s = 0.0;
          for (int j = 0; j < 10; ++j) s += fine.at(c, 10 * i + j);
          ref.at(c, i) = s / 10.0;
        }
      err = l1_error(coarse.field, ref, coarse.grid.dx());
    }
    ConvergenceRow row;
    row.cells = meshes[level];
    row.l1 = err;
    if (level > 0) {
      const double rate = std::log(rows.back().l1 / err) /
                          std::log(static_cast<double>(meshes[level]) / meshes[level - 1]);
      row.order = rate;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<TimingRow> run_timing(const RunConfig& rc, const std::vector<int>& meshes,
                                  int repeats) {
  std::vector<TimingRow> rows;
  auto median_seconds = [&](const RunConfig& cfg) {
    std::vector<double> ts;
    for (int r = 0; r < std::max(1, repeats); ++r) ts.push_back(run_case(cfg).wall_seconds);
    std::sort(ts.begin(), ts.end());
    return ts[ts.size() / 2];
  };
  for (int cells : meshes) {
    RunConfig scheme_rc = rc;
    scheme_rc.cells = cells;
    scheme_rc.out_dir.clear();
    RunConfig std_rc = scheme_rc;
    std_rc.scheme = "weno";
    TimingRow row;
    row.cells = cells;
    row.seconds_scheme = median_seconds(scheme_rc);
    row.seconds_standard = median_seconds(std_rc);
    row.ratio = row.seconds_scheme / row.seconds_standard;
    rows.push_back(row);
  }
  return rows;
}

// ---- config + output ---------------------------------------------------------

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

void apply_config_entry(RunConfig& rc, const std::string& key, const std::string& value) {
  auto as_int = [&](const std::string& v) { return std::stoi(v); };
  auto as_double = [&](const std::string& v) { return std::stod(v); };
  if (key == "case") {
    rc.case_name = value;
  } else if (key == "scheme") {
    family_from_word(value);  // validate
    rc.scheme = value;
  } else if (key == "order") {
    rc.order = as_int(value);
  } else if (key == "cells") {
    rc.cells = as_int(value);
  } else if (key == "tfinal") {
    rc.t_final = as_double(value);
  } else if (key == "weights") {
    if (value == "nonlinear") rc.weights = WeightMode::Nonlinear;
    else if (value == "linear") rc.weights = WeightMode::Linear;
    else throw std::invalid_argument("weights: expected nonlinear|linear");
  } else if (key == "splitting") {
    if (value == "glf") rc.splitting = Splitting::GlobalLF;
    else if (value == "llf") rc.splitting = Splitting::LocalLF;
    else if (value == "upwind") rc.splitting = Splitting::UpwindProjection;
    else throw std::invalid_argument("splitting: expected glf|llf|upwind");
  } else if (key == "singular") {
    if (value == "centered") rc.singular = SingularSourceMode::Centered;
    else if (value == "upwind") rc.singular = SingularSourceMode::Upwinded;
    else throw std::invalid_argument("singular: expected centered|upwind");
  } else if (key == "extension") {
    if (value == "closed") rc.extension = ExtensionMode::ClosedForm;
    else if (value == "ode") rc.extension = ExtensionMode::NumericOde;
    else throw std::invalid_argument("extension: expected closed|ode");
  } else if (key == "dt") {
    rc.dt_rule = value;
  } else if (key == "cfl") {
    rc.cfl = as_double(value);
  } else if (key == "g") {
    rc.g = as_double(value);
  } else if (key == "pert-center") {
    rc.pert_center = as_double(value);
  } else if (key == "seed") {
    rc.seed = static_cast<unsigned>(std::stoul(value));
  } else if (key == "out") {
    rc.out_dir = value;
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_report(std::ostream& os, const RunReport& r) {
  os << "case=" << r.case_name << "\n";
  os << "scheme=" << r.scheme << "\n";
  os << "order=" << r.order << "\n";
  os << "cells=" << r.cells << "\n";
  os << "weights=" << r.weights << "\n";
  os << "splitting=" << r.splitting << "\n";
  os << "singular=" << r.singular << "\n";
  os << "extension=" << r.extension << "\n";
  os << "dt=" << r.dt_rule << "\n";
  os << "g=" << format_double(r.g) << "\n";
  os << "seed=" << r.seed << "\n";
  os << "dx=" << format_double(r.dx) << "\n";
  os << "steps=" << r.steps << "\n";
  os << "dt_first=" << format_double(r.dt_first) << "\n";
  os << "t_final=" << format_double(r.t_final) << "\n";
  if (r.l1) os << "l1_error=" << format_double(*r.l1) << "\n";
  if (r.linf) os << "linf_error=" << format_double(*r.linf) << "\n";
  if (r.mass_dev) os << "mass_deviation=" << format_double(*r.mass_dev) << "\n";
  os << "wall_seconds=" << format_double(r.wall_seconds) << "\n";
}

void write_convergence(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "cells,l1_error,order\n";
  for (const auto& row : rows) {
    os << row.cells << "," << format_double(row.l1) << ",";
    if (row.order) os << format_double(*row.order);
    os << "\n";
  }
}

void write_timing(std::ostream& os, const std::vector<TimingRow>& rows) {
  os << "cells,seconds_scheme,seconds_standard,ratio\n";
  for (const auto& row : rows)
    os << row.cells << "," << format_double(row.seconds_scheme) << ","
       << format_double(row.seconds_standard) << "," << format_double(row.ratio) << "\n";
}

}  // namespace balsa
