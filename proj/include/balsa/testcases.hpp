// Benchmark case registry: model + bottom profile + domain + initial data +
// boundary treatment + (when known) the exact or equilibrium solution.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "balsa/grid.hpp"

namespace balsa {

// Case-level parameters that samplers may depend on.
struct CaseParams {
  double g = 9.81;
  double pert_center = -0.5;  // center of the Gaussian perturbations
};

struct TestCase {
  std::string name;
  std::string model;       // "linear" | "burgers" | "sw"
  std::string bathymetry;  // catalog name
  double x_lo = 0.0;
  double x_hi = 1.0;
  double t_final = 1.0;
  int default_cells = 200;
  std::string description;
  std::vector<std::string> suggested_schemes;

  std::function<void(double x, const CaseParams&, double* U)> initial;
  // Time-dependent exact solution; empty when only a reference run exists.
  std::function<void(double x, double t, const CaseParams&, double* U)> exact;
  // Underlying stationary solution (perturbed cases return the base
  // equilibrium); empty for cases without one.
  std::function<void(double x, const CaseParams&, double* U)> equilibrium;
  std::function<BoundarySpec(const CaseParams&)> boundary;

  bool has_exact() const { return static_cast<bool>(exact); }
  bool has_equilibrium() const { return static_cast<bool>(equilibrium); }
};

const std::vector<TestCase>& testcase_registry();
const TestCase* find_case(const std::string& name);

}  // namespace balsa
