#include "balsa/time_integration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace balsa {

namespace {

void check_admissible(const Model& model, const StateField& U, const char* where) {
  const int nc = model.n_comp();
  double Ui[kMaxComp];
  for (int i = 0; i < U.n_interior(); ++i) {
    for (int c = 0; c < nc; ++c) Ui[c] = U.at(c, i);
    if (!model.admissible(Ui))
      throw std::runtime_error(std::string("inadmissible state (") + where + ") at node " +
                               std::to_string(i));
  }
}

}  // namespace

double compute_dt(const TimeConfig& tc, const Model& model, const Grid& grid,
                  const StateField& U) {
  switch (tc.rule) {
    case DtRule::Fixed:
      if (!(tc.fixed_dt > 0.0)) throw std::invalid_argument("compute_dt: fixed_dt must be > 0");
      return tc.fixed_dt;
    case DtRule::OrderFiveScaling:
      return std::pow(grid.dx(), 5.0 / 3.0);
    case DtRule::CflBased: {
      double alpha = 0.0;
      double Ui[kMaxComp];
      for (int i = 0; i < grid.n; ++i) {
        for (int c = 0; c < model.n_comp(); ++c) Ui[c] = U.at(c, i);
        alpha = std::max(alpha, model.max_abs_eigenvalue(Ui));
      }
      if (!(alpha > 0.0)) throw std::runtime_error("compute_dt: zero wave speed");
      return tc.cfl * grid.dx() / alpha;
    }
  }
  throw std::logic_error("compute_dt: unreachable");
}

void tvd_rk3_step(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
                  const Grid& grid, const BoundarySpec& bc, StateField& U, double dt) {
  const int nc = model.n_comp();
  const int n = grid.n;
  StateField U1(nc, n, U.ghost()), U2(nc, n, U.ghost());
  StateField rhs(nc, n, 0);

  fill_ghosts(U, grid, bc);
  compute_rhs(cfg, model, bath, grid, U, rhs);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i) U1.at(c, i) = U.at(c, i) + dt * rhs.at(c, i);
  check_admissible(model, U1, "rk3 stage 1");

  fill_ghosts(U1, grid, bc);
  compute_rhs(cfg, model, bath, grid, U1, rhs);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      U2.at(c, i) = 0.75 * U.at(c, i) + 0.25 * (U1.at(c, i) + dt * rhs.at(c, i));
  check_admissible(model, U2, "rk3 stage 2");

  fill_ghosts(U2, grid, bc);
  compute_rhs(cfg, model, bath, grid, U2, rhs);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < n; ++i)
      U.at(c, i) = (1.0 / 3.0) * U.at(c, i) +
                   (2.0 / 3.0) * (U2.at(c, i) + dt * rhs.at(c, i));
  check_admissible(model, U, "rk3 stage 3");
}

RunStats run(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
             const Grid& grid, const BoundarySpec& bc, StateField& U, const TimeConfig& tc,
             const std::function<void(int, double, const StateField&)>& callback) {
  if (U.ghost() < ghost_width(cfg))
    throw std::invalid_argument("run: field lacks the required ghost nodes");
  check_admissible(model, U, "initial data");

  RunStats stats;
  if (callback) callback(0, 0.0, U);
  double t = 0.0;
  while (t < tc.t_final) {
    double dt = compute_dt(tc, model, grid, U);
    bool last = false;
    if (t + dt >= tc.t_final) {
      dt = tc.t_final - t;
      last = true;
    }
    if (!(dt > 0.0)) break;
    tvd_rk3_step(cfg, model, bath, grid, bc, U, dt);
    t = last ? tc.t_final : t + dt;
    ++stats.steps;
    if (stats.steps == 1) stats.dt_first = dt;
    if (callback) callback(stats.steps, t, U);
  }
  stats.t = t;
  return stats;
}

}  // namespace balsa
