// Node-to-node numeric integration of the stationary ODE
//   dU/dx = J(U)^{-1} S(U) H_x(x)
// with a classical fourth-order Runge-Kutta one-step map on K substeps per
// mesh gap. Used as the fallback stationary extension when no closed form is
// available (or when explicitly requested).
#pragma once

#include <functional>

#include "balsa/models.hpp"

namespace balsa {

enum class OdeStatus { Ok, Resonant, Blowup };

// Default substep count per gap for reconstruction half-width k: 4 (2k+1).
int default_substeps(int k);

// March `gaps` mesh gaps of width dx to the right, starting from state U0 at
// x0. Writes the states at x0 + dx, ..., x0 + gaps*dx node-major into `out`.
// Resonant: |det J| <= 1e-12 ||J||_inf at any substep. Blowup: state leaves
// the admissible set or stops being finite.
OdeStatus extend_forward(const Model& model, const std::function<double(double)>& Hx,
                         const double* U0, double x0, double dx, int gaps, int K,
                         double* out);

// Same marching to the left: states at x0 - dx, ..., x0 - gaps*dx.
OdeStatus extend_backward(const Model& model, const std::function<double(double)>& Hx,
                          const double* U0, double x0, double dx, int gaps, int K,
                          double* out);

}  // namespace balsa
