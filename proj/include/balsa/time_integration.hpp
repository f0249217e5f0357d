// Third-order TVD Runge-Kutta time stepping with CFL-based, fifth-order
// scaled, or fixed time-step selection.
#pragma once

#include <functional>

#include "balsa/schemes.hpp"

namespace balsa {

enum class DtRule { CflBased, OrderFiveScaling, Fixed };

struct TimeConfig {
  DtRule rule = DtRule::CflBased;
  double cfl = 0.5;
  double fixed_dt = 0.0;  // Fixed rule
  double t_final = 1.0;
};

// CflBased: cfl * dx / max |eigenvalue| over the interior nodes.
// OrderFiveScaling: dx^{5/3}. Fixed: fixed_dt. No clamping here.
double compute_dt(const TimeConfig& tc, const Model& model, const Grid& grid,
                  const StateField& U);

// One Shu-Osher TVD-RK3 step of size dt, updating the interior of U in place.
// Ghosts are refilled per `bc` before each stage RHS. Throws on non-finite or
// inadmissible states.
void tvd_rk3_step(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
                  const Grid& grid, const BoundarySpec& bc, StateField& U, double dt);

struct RunStats {
  int steps = 0;
  double t = 0.0;
  double dt_first = 0.0;
};

// Advance U from t = 0 to tc.t_final; the final step is clamped to land on
// t_final exactly. `callback(step, t, U)` is invoked once at step 0 and after
// every accepted step.
RunStats run(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
             const Grid& grid, const BoundarySpec& bc, StateField& U, const TimeConfig& tc,
             const std::function<void(int, double, const StateField&)>& callback = {});

}  // namespace balsa
