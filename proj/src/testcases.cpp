#include "balsa/testcases.hpp"

#include <cmath>
#include <stdexcept>

#include "balsa/bathymetry.hpp"
#include "balsa/models.hpp"

namespace balsa {

namespace {

// C^5 ramp: p(0) = 0, p(1) = 1, five vanishing derivatives at both ends.
double ramp(double x) {
  const double y = x - 1.0;
  const double s =
      1.0 + y * (-6.0 + y * (21.0 + y * (-56.0 + y * (126.0 + y * (-252.0)))));
  return std::pow(x, 6.0) * s;
}

double smooth_profile(double x) {
  if (x < 0.0) return 0.0;
  if (x < 1.0) return ramp(x);
  return 1.0;
}

double gaussian(double x, double center, double amp) {
  return amp * std::exp(-200.0 * (x - center) * (x - center));
}

// Subcritical depth profile anchored at (h, q) at bottom value H_anchor.
double sw_depth(double x, const Bathymetry& bath, double h_anchor, double q,
                double H_anchor, FlowRegime branch, double g) {
  const SwInvariants inv = sw_invariants(h_anchor, q, H_anchor, g);
  const DepthResult dr = depth_from_invariants(inv.C1, inv.C2, bath.H(x), branch, g);
  if (!dr.ok) throw std::runtime_error("testcase: stationary profile has no root");
  return dr.h;
}

BoundarySpec stationary_bc(std::function<void(double, double*)> sampler) {
  BoundarySpec bc;
  bc.left.kind = BoundaryKind::FixedStationary;
  bc.left.sampler = sampler;
  bc.right.kind = BoundaryKind::FixedStationary;
  bc.right.sampler = sampler;
  return bc;
}

std::vector<TestCase> build_registry() {
  std::vector<TestCase> cases;

  // ---- linear advection --------------------------------------------------
  {
    TestCase tc;
    tc.name = "linear-smooth";
    tc.model = "linear";
    tc.bathymetry = "identity";
    tc.x_lo = -2.0;
    tc.x_hi = 10.0;
    tc.t_final = 1.0;
    tc.default_cells = 100;
    tc.description = "smooth ramp advected with exponential growth; exact solution known";
    tc.suggested_schemes = {"weno", "wb"};
    tc.initial = [](double x, const CaseParams&, double* U) { U[0] = smooth_profile(x); };
    tc.exact = [](double x, double t, const CaseParams&, double* U) {
      U[0] = std::exp(t) * smooth_profile(x - t);
    };
    tc.boundary = [](const CaseParams&) { return BoundarySpec{}; };  // free both sides
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "linear-jump";
    tc.model = "linear";
    tc.bathymetry = "identity";
    tc.x_lo = -2.0;
    tc.x_hi = 2.0;
    tc.t_final = 1.0;
    tc.default_cells = 200;
    tc.description = "two stationary branches separated by a moving contact";
    tc.suggested_schemes = {"weno", "wb"};
    tc.initial = [](double x, const CaseParams&, double* U) {
      U[0] = (x < 0.0 ? 4.0 : 1.0) * std::exp(x);
    };
    tc.exact = [](double x, double t, const CaseParams&, double* U) {
      U[0] = (x < t ? 4.0 : 1.0) * std::exp(x);
    };
    tc.boundary = [](const CaseParams&) {
      BoundarySpec bc;
      bc.left.kind = BoundaryKind::FixedStationary;
      bc.left.sampler = [](double x, double* U) { U[0] = 4.0 * std::exp(x); };
      bc.right.kind = BoundaryKind::FixedStationary;
      bc.right.sampler = [](double x, double* U) { U[0] = std::exp(x); };
      return bc;
    };
    cases.push_back(std::move(tc));
  }

  // ---- Burgers -----------------------------------------------------------
  const auto exp_eq = [](const std::string& bath_name) {
    const Bathymetry bath = make_bathymetry(bath_name);
    return [bath](double x, double* U) { U[0] = std::exp(bath.H(x)); };
  };
  {
    TestCase tc;
    tc.name = "burgers-stationary";
    tc.model = "burgers";
    tc.bathymetry = "identity";
    tc.x_lo = -1.0;
    tc.x_hi = 1.0;
    tc.t_final = 8.0;
    tc.default_cells = 200;
    tc.description = "exponential equilibrium held for a long horizon";
    tc.suggested_schemes = {"weno", "wb"};
    auto eq = exp_eq("identity");
    tc.initial = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.exact = [eq](double x, double, const CaseParams&, double* U) { eq(x, U); };
    tc.equilibrium = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.boundary = [eq](const CaseParams&) { return stationary_bc(eq); };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "burgers-osc";
    tc.model = "burgers";
    tc.bathymetry = "oscillatory";
    tc.x_lo = -1.0;
    tc.x_hi = 1.0;
    tc.t_final = 1.0;
    tc.default_cells = 100;
    tc.description = "equilibrium over a rapidly oscillating bottom";
    tc.suggested_schemes = {"weno", "wb"};
    auto eq = exp_eq("oscillatory");
    tc.initial = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.exact = [eq](double x, double, const CaseParams&, double* U) { eq(x, U); };
    tc.equilibrium = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.boundary = [eq](const CaseParams&) { return stationary_bc(eq); };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "burgers-osc-pert";
    tc.model = "burgers";
    tc.bathymetry = "oscillatory";
    tc.x_lo = -1.0;
    tc.x_hi = 1.0;
    tc.t_final = 1.0;
    tc.default_cells = 100;
    tc.description = "oscillatory-bottom equilibrium with a small Gaussian pulse";
    tc.suggested_schemes = {"wb"};
    auto eq = exp_eq("oscillatory");
    tc.initial = [eq](double x, const CaseParams& p, double* U) {
      eq(x, U);
      U[0] += gaussian(x, p.pert_center, 0.1);
    };
    tc.equilibrium = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.boundary = [eq](const CaseParams&) { return stationary_bc(eq); };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "burgers-jump";
    tc.model = "burgers";
    tc.bathymetry = "burgers-jump";
    tc.x_lo = -1.0;
    tc.x_hi = 1.0;
    tc.t_final = 1.0;
    tc.default_cells = 300;
    tc.description = "equilibrium across a bottom jump (same integral curve)";
    tc.suggested_schemes = {"weno", "wb", "wb1"};
    auto eq = exp_eq("burgers-jump");
    tc.initial = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.exact = [eq](double x, double, const CaseParams&, double* U) { eq(x, U); };
    tc.equilibrium = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.boundary = [eq](const CaseParams&) { return stationary_bc(eq); };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "burgers-jump-pert";
    tc.model = "burgers";
    tc.bathymetry = "burgers-jump";
    tc.x_lo = -1.0;
    tc.x_hi = 1.0;
    tc.t_final = 0.5;
    tc.default_cells = 300;
    tc.description = "bottom-jump equilibrium with a Gaussian pulse crossing the jump";
    tc.suggested_schemes = {"wb", "wb1"};
    auto eq = exp_eq("burgers-jump");
    tc.initial = [eq](double x, const CaseParams& p, double* U) {
      eq(x, U);
      U[0] += gaussian(x, p.pert_center, 0.3);
    };
    tc.equilibrium = [eq](double x, const CaseParams&, double* U) { eq(x, U); };
    tc.boundary = [eq](const CaseParams&) { return stationary_bc(eq); };
    cases.push_back(std::move(tc));
  }

  // ---- shallow water -----------------------------------------------------
  {
    TestCase tc;
    tc.name = "sw-subcritical";
    tc.model = "sw";
    tc.bathymetry = "bump";
    tc.x_lo = -3.0;
    tc.x_hi = 3.0;
    tc.t_final = 4.0;
    tc.default_cells = 100;
    tc.description = "moving subcritical equilibrium over a bottom bump";
    tc.suggested_schemes = {"weno", "wb", "wb1", "wbwar", "wbmc"};
    const Bathymetry bath = make_bathymetry("bump");
    auto eq = [bath](double x, const CaseParams& p, double* U) {
      U[0] = sw_depth(x, bath, 2.0, 2.5, 0.0, FlowRegime::Sub, p.g);
      U[1] = 2.5;
    };
    tc.initial = eq;
    tc.exact = [eq](double x, double, const CaseParams& p, double* U) { eq(x, p, U); };
    tc.equilibrium = eq;
    tc.boundary = [eq](const CaseParams& p) {
      return stationary_bc([eq, p](double x, double* U) { eq(x, p, U); });
    };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "sw-subcritical-pert";
    tc.model = "sw";
    tc.bathymetry = "bump";
    tc.x_lo = -3.0;
    tc.x_hi = 3.0;
    tc.t_final = 0.15;
    tc.default_cells = 200;
    tc.description = "subcritical equilibrium with a square depth pulse";
    tc.suggested_schemes = {"wb", "wbwar"};
    const Bathymetry bath = make_bathymetry("bump");
    auto eq = [bath](double x, const CaseParams& p, double* U) {
      U[0] = sw_depth(x, bath, 2.0, 2.5, 0.0, FlowRegime::Sub, p.g);
      U[1] = 2.5;
    };
    tc.initial = [eq](double x, const CaseParams& p, double* U) {
      eq(x, p, U);
      if (x >= -0.4 && x <= -0.3) U[0] += 0.02;
    };
    tc.equilibrium = eq;
    tc.boundary = [eq](const CaseParams& p) {
      return stationary_bc([eq, p](double x, double* U) { eq(x, p, U); });
    };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "sw-transcritical-jump";
    tc.model = "sw";
    tc.bathymetry = "sw-jump";
    tc.x_lo = -0.5;
    tc.x_hi = 1.5;
    tc.t_final = 4.0;
    tc.default_cells = 100;
    tc.description = "critical-to-supercritical equilibrium across a bottom step";
    tc.suggested_schemes = {"weno", "wb", "wb1"};
    const Bathymetry bath = make_bathymetry("sw-jump");
    auto eq = [bath](double x, const CaseParams& p, double* U) {
      const double q = 2.5;
      const double hc = std::cbrt(q * q / p.g);
      U[0] = sw_depth(x, bath, hc, q, 0.0,
                      x <= 0.0 ? FlowRegime::Critical : FlowRegime::Super, p.g);
      U[1] = q;
    };
    tc.initial = eq;
    tc.exact = [eq](double x, double, const CaseParams& p, double* U) { eq(x, p, U); };
    tc.equilibrium = eq;
    tc.boundary = [eq](const CaseParams& p) {
      return stationary_bc([eq, p](double x, double* U) { eq(x, p, U); });
    };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "sw-transcritical-jump-pert";
    tc.model = "sw";
    tc.bathymetry = "sw-jump";
    tc.x_lo = -0.5;
    tc.x_hi = 1.5;
    tc.t_final = 0.2;
    tc.default_cells = 300;
    tc.description = "transcritical step equilibrium with a square depth pulse";
    tc.suggested_schemes = {"wb", "wb1"};
    const Bathymetry bath = make_bathymetry("sw-jump");
    auto eq = [bath](double x, const CaseParams& p, double* U) {
      const double q = 2.5;
      const double hc = std::cbrt(q * q / p.g);
      U[0] = sw_depth(x, bath, hc, q, 0.0,
                      x <= 0.0 ? FlowRegime::Critical : FlowRegime::Super, p.g);
      U[1] = q;
    };
    tc.initial = [eq](double x, const CaseParams& p, double* U) {
      eq(x, p, U);
      if (x >= -0.4 && x <= -0.3) U[0] += 0.02;
    };
    tc.equilibrium = eq;
    tc.boundary = [eq](const CaseParams& p) {
      return stationary_bc([eq, p](double x, double* U) { eq(x, p, U); });
    };
    cases.push_back(std::move(tc));
  }
  {
    TestCase tc;
    tc.name = "sw-mass";
    tc.model = "sw";
    tc.bathymetry = "parabolic-hump";
    tc.x_lo = -10.0;
    tc.x_hi = 30.0;
    tc.t_final = 2.5;
    tc.default_cells = 200;
    tc.description = "subcritical equilibrium with a large pulse; mass accounting";
    tc.suggested_schemes = {"weno", "wb", "wb1", "wbwar", "wbmc"};
    const Bathymetry bath = make_bathymetry("parabolic-hump");
    auto eq = [bath](double x, const CaseParams& p, double* U) {
      U[0] = sw_depth(x, bath, 1.0, 1.0, 0.13, FlowRegime::Sub, p.g);
      U[1] = 1.0;
    };
    tc.initial = [eq](double x, const CaseParams& p, double* U) {
      eq(x, p, U);
      if (x >= 5.0 && x <= 7.0) U[0] += 0.5;
    };
    tc.equilibrium = eq;
    tc.boundary = [eq](const CaseParams& p) {
      return stationary_bc([eq, p](double x, double* U) { eq(x, p, U); });
    };
    cases.push_back(std::move(tc));
  }

  return cases;
}

}  // namespace

const std::vector<TestCase>& testcase_registry() {
  static const std::vector<TestCase> registry = build_registry();
  return registry;
}

const TestCase* find_case(const std::string& name) {
  for (const auto& tc : testcase_registry())
    if (tc.name == name) return &tc;
  return nullptr;
}

}  // namespace balsa
